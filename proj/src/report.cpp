#include "wrp/report.hpp"

#include <cmath>
#include <ctime>

#include "wrp/characterizations.hpp"
#include "wrp/chromatic.hpp"
#include "wrp/errors.hpp"
#include "wrp/spectra.hpp"
#include "wrp/version.hpp"
#include "wrp/weight_partition.hpp"

namespace wrp {

namespace {

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json int_matrix_to_json(const std::vector<std::vector<int>>& m) {
    Json rows = Json::array();
    for (const auto& r : m) rows.push_back(r);
    return rows;
}

Json partition_to_json(const VertexPartition& p) {
    Json classes = Json::array();
    for (const auto& cls : p.classes()) classes.push_back(cls);
    return classes;
}

Json header_json(const AnalysisOptions& opt) {
    Json j;
    j["tool"] = {{"name", "wrp"}, {"version", std::string(k_version)}};
    if (opt.include_timestamp) j["timestamp"] = current_timestamp_utc();
    j["tolerances"] = {{"eig", opt.tol.eig_group},
                       {"weight_regular", opt.tol.weight_regular},
                       {"hoffman", opt.tol.hoffman}};
    return j;
}

Json graph_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    j["edge_count"] = g.edge_count();
    j["connected"] = is_connected(g);
    auto sides = bipartition(g);
    j["bipartite"] = sides.has_value();
    j["bipartition"] = sides ? partition_to_json(*sides) : Json(nullptr);
    return j;
}

Json spectrum_json(const SpectralData& s, const Tolerances& tol) {
    Json j;
    j["eigenvalues"] = s.eigenvalues;
    Json distinct = Json::array();
    for (const auto& d : s.distinct)
        distinct.push_back({{"value", d.value}, {"multiplicity", d.multiplicity}});
    j["distinct"] = std::move(distinct);
    j["symmetric"] = is_spectrum_symmetric(s, tol.eig_group);
    return j;
}

Json perron_json(const Graph& g, const PerronVector& nu) {
    Json j;
    j["lambda1"] = nu.lambda1;
    j["nu"] = nu.entries;
    const auto av = g.adjacency_matrix() * nu.entries;
    double residual = 0.0;
    for (std::size_t i = 0; i < av.size(); ++i)
        residual = std::max(residual, std::fabs(av[i] - nu.lambda1 * nu.entries[i]));
    j["residual_max"] = residual;
    j["min_entry"] = *std::min_element(nu.entries.begin(), nu.entries.end());
    return j;
}

Json partition_section(const Graph& g, const PerronVector& nu, const VertexPartition& p,
                       const std::string& source, const AnalysisOptions& opt) {
    const double tol_wr = opt.tol.weight_regular;
    Json j;
    j["source"] = source;
    j["classes"] = partition_to_json(p);

    const auto view = make_weighted_view(p, nu);
    j["class_norms"] = view.class_norms;

    const auto regular = regular_quotient(g, p);
    j["regular"] = regular.has_value();
    j["B"] = regular ? int_matrix_to_json(*regular) : Json(nullptr);

    const auto table = weight_intersection_numbers(g, nu, p, tol_wr);
    j["weight_regular"] = table.weight_regular;
    j["B_star"] = table.b_star ? matrix_to_json(*table.b_star) : Json(nullptr);
    j["max_within_class_spread"] = table.max_within_class_spread;

    const auto quotients = quotient_matrices(view, g.adjacency_matrix());
    j["B_tilde"] = matrix_to_json(quotients.b_tilde);
    j["B_bar"] = matrix_to_json(quotients.b_bar);

    const auto lemma1 = lemma1_check(g, nu, p, tol_wr);
    j["lemma1"] = {{"regular", lemma1.regular},
                   {"weight_regular", lemma1.weight_regular},
                   {"nu_constant_per_class", lemma1.nu_constant_per_class},
                   {"ratio_law", lemma1.ratio_law_applicable ? Json(lemma1.ratio_law_holds)
                                                             : Json(nullptr)}};
    return j;
}

Json characterizations_section(const Graph& g, const SpectralData& s, const PerronVector& nu,
                               const VertexPartition& p, const AnalysisOptions& opt) {
    const double tol_wr = opt.tol.weight_regular;
    const auto verdict = characterize(g, s, nu, p, tol_wr);

    Json j;
    j["definitional_weight_regular"] = verdict.definitional;
    j["commutation"] = {{"commutes", verdict.commutation.commutes},
                        {"residual", verdict.commutation.commutator_residual},
                        {"balance_residual", verdict.commutation.balance_residual
                                                 ? Json(*verdict.commutation.balance_residual)
                                                 : Json(nullptr)}};
    j["omega"] = {{"nonnegative", verdict.omega.nonnegative},
                  {"rows_sum_one", verdict.omega.rows_sum_one},
                  {"cols_sum_one", verdict.omega.cols_sum_one},
                  {"commutes_with_a", verdict.omega.commutes_with_a},
                  {"member", verdict.omega.member()},
                  {"residuals",
                   {{"negative", verdict.omega.residual_negative},
                    {"rows", verdict.omega.residual_rows},
                    {"cols", verdict.omega.residual_cols},
                    {"commutator", verdict.omega.residual_commutator}}}};

    if (s.d() >= 1) {
        const auto h = weight_hoffman_polynomial(s, nu);
        j["hoffman_polynomial"] = {{"degree", h.degree()}, {"coefficients", h.coefficients}};
    } else {
        j["hoffman_polynomial"] = nullptr;
    }

    j["polynomial_identity"] = {
        {"applicable", verdict.polynomial_identity.applicable},
        {"holds", verdict.polynomial_identity.applicable ? Json(verdict.polynomial_identity.holds)
                                                         : Json(nullptr)},
        {"residual", verdict.polynomial_identity.applicable
                         ? Json(verdict.polynomial_identity.residual)
                         : Json(nullptr)}};

    j["interlacing"] = {
        {"quotient_eigenvalues", verdict.quotient_eigenvalues},
        {"interlaces", verdict.interlacing.interlaces},
        {"tight", verdict.interlacing.tight},
        {"k", verdict.interlacing.tight ? Json(verdict.interlacing.k) : Json(nullptr)}};
    return j;
}

const char* applicability_name(Applicability a) {
    switch (a) {
        case Applicability::yes: return "yes";
        case Applicability::no: return "no";
        default: return "unknown";
    }
}

Json chromatic_section(const Graph& g, const SpectralData& s, const PerronVector& nu,
                       const AnalysisOptions& opt) {
    Json j;
    if (g.vertex_count() > opt.chi_cap && !opt.force_chromatic) {
        j["skipped"] = true;
        j["reason"] = "n exceeds chromatic cap (use --force to override)";
        return j;
    }
    j["skipped"] = false;

    ChromaticLimits limits;
    limits.chi_cap = opt.force_chromatic ? g.vertex_count() : opt.chi_cap;
    const bool enumerate = opt.enumerate_optimal && g.vertex_count() <= limits.enumeration_cap;
    const auto cr = exact_chromatic(g, limits, enumerate);

    j["chi"] = cr.chi;
    j["witness"] = cr.witness ? partition_to_json(*cr.witness) : Json(nullptr);

    if (g.edge_count() == 0) {
        j["hoffman_bound"] = nullptr;
        j["improved_bound"] = nullptr;
        j["note"] = "spectral bound undefined for an edgeless graph";
        return j;
    }

    const auto audit = audit_hoffman(g, s, nu, cr, opt.tol.hoffman, opt.tol.weight_regular);
    j["hoffman_bound"] = audit.hoffman_bound;
    j["improved_bound"] = audit.improved_bound;
    j["is_hoffman_coloring"] = audit.is_hoffman_coloring;
    j["color_classes_weight_regular"] = audit.color_classes_weight_regular;
    j["multiplicity_lambda_n"] = audit.multiplicity_lambda_n;
    j["unique_optimal_coloring"] = audit.unique_optimal_coloring
                                       ? Json(*audit.unique_optimal_coloring)
                                       : Json(nullptr);
    j["improved_bound_applicable"] = applicability_name(audit.improved_bound_applicable);
    if (cr.all_optimal) {
        j["optimal_coloring_count"] = cr.all_optimal->size();
        j["enumeration_complete"] = cr.enumeration_complete;
        j["per_coloring_weight_regular"] = audit.per_coloring_weight_regular;
    }
    return j;
}

} // namespace

std::string current_timestamp_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json analyze_graph(const Graph& g, const std::optional<VertexPartition>& partition,
                   const AnalysisOptions& opt) {
    Json j = header_json(opt);
    j["graph"] = graph_json(g);

    const SpectralData s = eigendecompose(g, opt.tol.eig_group);
    j["spectrum"] = spectrum_json(s, opt.tol);

    const PerronVector nu = perron_vector(g, s); // throws for disconnected input
    j["perron"] = perron_json(g, nu);

    const VertexPartition p =
        partition ? *partition : VertexPartition::trivial(g.vertex_count());
    j["partition"] = partition_section(g, nu, p, partition ? "file" : "trivial", opt);
    j["characterizations"] = characterizations_section(g, s, nu, p, opt);
    j["chromatic"] = chromatic_section(g, s, nu, opt);
    return j;
}

Json hoffman_report(const Graph& g, const AnalysisOptions& opt) {
    Json j = header_json(opt);
    j["graph"] = graph_json(g);

    const SpectralData s = eigendecompose(g, opt.tol.eig_group);
    const PerronVector nu = perron_vector(g, s);

    if (g.edge_count() == 0)
        throw domain_error("hoffman: spectral bound undefined for an edgeless graph");

    ChromaticLimits limits;
    limits.chi_cap = opt.force_chromatic ? g.vertex_count() : opt.chi_cap;
    if (g.vertex_count() > limits.chi_cap)
        throw resource_error("hoffman: n exceeds chromatic cap (use --force to override)");
    const bool enumerate = opt.enumerate_optimal && g.vertex_count() <= limits.enumeration_cap;
    const auto cr = exact_chromatic(g, limits, enumerate);
    const auto audit = audit_hoffman(g, s, nu, cr, opt.tol.hoffman, opt.tol.weight_regular);

    Json c;
    c["chi"] = cr.chi;
    c["witness"] = cr.witness ? partition_to_json(*cr.witness) : Json(nullptr);
    c["hoffman_bound"] = audit.hoffman_bound;
    c["improved_bound"] = audit.improved_bound;
    c["is_hoffman_coloring"] = audit.is_hoffman_coloring;
    c["color_classes_weight_regular"] = audit.color_classes_weight_regular;
    c["multiplicity_lambda_n"] = audit.multiplicity_lambda_n;
    c["unique_optimal_coloring"] = audit.unique_optimal_coloring
                                       ? Json(*audit.unique_optimal_coloring)
                                       : Json(nullptr);
    c["improved_bound_applicable"] = applicability_name(audit.improved_bound_applicable);
    if (cr.all_optimal) {
        c["optimal_coloring_count"] = cr.all_optimal->size();
        c["enumeration_complete"] = cr.enumeration_complete;
        c["per_coloring_weight_regular"] = audit.per_coloring_weight_regular;
    }
    j["chromatic"] = std::move(c);
    return j;
}

} // namespace wrp
