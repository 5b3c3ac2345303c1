#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrp/graph.hpp"
#include "wrp/partition.hpp"
#include "wrp/spectra.hpp"

namespace wrp {

struct ChromaticLimits {
    int chi_cap = 64;          // largest n for exact chi
    int enumeration_cap = 20;  // largest n for enumerating optimal colorings
    long max_colorings = 100000;
};

/// Exact chromatic number with a witness coloring. When enumeration was
/// requested, all_optimal lists every proper chi-coloring up to color
/// permutation (canonical form: colors appear in order of first use along
/// vertex ids); enumeration_complete is false when max_colorings was hit.
struct ColoringResult {
    int chi = 0;
    std::optional<VertexPartition> witness;
    std::optional<std::vector<VertexPartition>> all_optimal;
    bool enumeration_complete = true;
};

/// Branch and bound with DSATUR vertex selection, a greedy clique lower
/// bound and a greedy upper bound. Throws resource_error above the caps.
ColoringResult exact_chromatic(const Graph& g, const ChromaticLimits& limits = {},
                               bool enumerate_all = false);

/// 1 - lambda_1 / lambda_n. Requires at least one edge (lambda_n < 0).
double hoffman_bound(const SpectralData& s);

enum class Applicability { yes, no, unknown };

/// Spectral audit of a coloring: bound values, whether the bound is attained,
/// weight-regularity of the color classes, the multiplicity of lambda_n, and
/// uniqueness of the optimal coloring when enumeration data is available.
/// improved_bound_applicable reports whether every optimal coloring's class
/// partition fails weight-regularity (unknown when enumeration was capped or
/// absent).
struct HoffmanAudit {
    double hoffman_bound = 0.0;
    double improved_bound = 0.0;
    bool is_hoffman_coloring = false;
    bool color_classes_weight_regular = false;
    int multiplicity_lambda_n = 0;
    std::optional<bool> unique_optimal_coloring;
    Applicability improved_bound_applicable = Applicability::unknown;
    std::vector<bool> per_coloring_weight_regular; // parallel to all_optimal when present
};

HoffmanAudit audit_hoffman(const Graph& g, const SpectralData& s, const PerronVector& nu,
                           const ColoringResult& cr, double tol_hoffman = 1e-6,
                           double tol_wr = 1e-7);

/// One failed sub-check on one corpus graph.
struct PropositionDefect {
    std::string graph_name;
    std::string check;
    std::string detail;
};

/// For connected graphs whose chromatic number attains the spectral bound,
/// verifies: (a) the color partition is weight-regular, (b) the quotient
/// interlacing is tight, (c) lambda_1 is an eigenvalue of B_bar, (d) B_bar
/// has zero diagonal and zero trace, (e) mult(lambda_n) = chi - 1, and
/// (f) the optimal coloring is unique up to color permutation. Graphs that
/// do not attain the bound are a precondition violation (domain_error);
/// failed sub-checks are returned as data.
std::vector<PropositionDefect> verify_proposition3(
    const std::vector<std::pair<std::string, Graph>>& corpus, double tol_hoffman = 1e-6,
    double tol_wr = 1e-7);

} // namespace wrp
