#pragma once

#include <optional>
#include <vector>

#include "wrp/graph.hpp"
#include "wrp/matrix.hpp"
#include "wrp/partition.hpp"
#include "wrp/spectra.hpp"

namespace wrp {

/// A vertex partition together with its Perron-weighted views: the
/// weight-characteristic matrix S_tilde (nu_u at row u, column of u's class),
/// its column-normalized version S_bar with S_bar^T S_bar = I, and the class
/// norms ||rho V_i|| = sqrt(sum_{u in V_i} nu_u^2) forming the diagonal D.
struct WeightedPartitionView {
    VertexPartition partition;
    std::vector<double> nu;
    double lambda1 = 0.0;
    std::vector<double> class_norms;
    Matrix s_tilde; // n x m
    Matrix s_bar;   // n x m, = s_tilde * D^{-1}

    Matrix diagonal_d() const;
};

WeightedPartitionView make_weighted_view(const VertexPartition& p, const PerronVector& nu);

/// (1/nu_u) * sum of nu over the neighbors of u. Equals lambda1 for every
/// vertex of a connected graph.
double weight_degree(const Graph& g, const PerronVector& nu, int u);

/// Per-vertex weight-intersection rows b*_{ij}(u) and the weight-regularity
/// verdict: constant rows within every class, within
/// tol_wr * max(1, lambda1). When regular, b_star holds the m x m quotient,
/// read from the smallest vertex id of each class.
struct WeightIntersectionTable {
    std::vector<std::vector<double>> rows; // indexed by vertex, length m each
    bool weight_regular = false;
    double max_within_class_spread = 0.0;
    std::optional<Matrix> b_star;
};

WeightIntersectionTable weight_intersection_numbers(const Graph& g, const PerronVector& nu,
                                                    const VertexPartition& p,
                                                    double tol_wr = 1e-7);

/// B_tilde = S_tilde^T A S_tilde and B_bar = D^{-1} B_tilde D^{-1}, both
/// computed by the defining products.
struct QuotientMatrices {
    Matrix b_tilde;
    Matrix b_bar;
};

QuotientMatrices quotient_matrices(const WeightedPartitionView& view, const Matrix& adjacency);

/// Integer quotient matrix of an equitable partition: entry (i,j) is the
/// number of neighbors in class j of any vertex of class i. nullopt when the
/// counts depend on the vertex.
std::optional<std::vector<std::vector<int>>> regular_quotient(const Graph& g,
                                                              const VertexPartition& p);

struct Lemma1Report {
    bool regular = false;
    bool weight_regular = false;
    bool nu_constant_per_class = false;
    bool ratio_law_applicable = false; // both quotients exist
    bool ratio_law_holds = false;      // b*_ij * nu_i == nu_j * b_ij
};

Lemma1Report lemma1_check(const Graph& g, const PerronVector& nu, const VertexPartition& p,
                          double tol_wr = 1e-7);

/// Splits classes by their b*-row signatures (agreement within
/// tol_wr * max(1, lambda1), grouped by transitive closure, new classes
/// ordered by smallest vertex id) until stable. A one-class seed is first
/// split by Perron entry value, since the weighted degree alone separates
/// nothing. The result refines the seed and is weight-regular.
VertexPartition coarsest_weight_regular_refinement(const Graph& g, const PerronVector& nu,
                                                   const VertexPartition& seed,
                                                   double tol_wr = 1e-7);

} // namespace wrp
