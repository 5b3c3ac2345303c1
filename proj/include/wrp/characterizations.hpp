#pragma once

#include <optional>
#include <vector>

#include "wrp/graph.hpp"
#include "wrp/matrix.hpp"
#include "wrp/partition.hpp"
#include "wrp/spectra.hpp"
#include "wrp/weight_partition.hpp"

namespace wrp {

/// Real polynomial in the monomial basis, coefficients[k] multiplying x^k.
struct Polynomial {
    std::vector<double> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    double operator()(double x) const;
};

/// Horner evaluation on a square matrix.
Matrix evaluate_on_matrix(const Polynomial& p, const Matrix& a);

/// alpha * prod_{l=1..d} (x - theta_l) with alpha = ||nu||^2 / pi_0 and
/// pi_0 = prod_{l=1..d} (theta_0 - theta_l). Maps theta_0 to ||nu||^2 and
/// every other distinct eigenvalue to 0. Requires d >= 1.
Polynomial weight_hoffman_polynomial(const SpectralData& s, const PerronVector& nu);

/// Does A commute with M = S_bar S_bar^T? The verdict compares the
/// commutator max norm against tol * max(1, lambda1). When it commutes, the
/// balance residual reports max |  ||rho V_i||^2 b*_ij(u) -
/// ||rho V_j||^2 b*_ji(v) | over class representatives.
struct CommutationReport {
    bool commutes = false;
    double commutator_residual = 0.0;
    std::optional<double> balance_residual;
};

CommutationReport commutation_test(const Graph& g, const WeightedPartitionView& view,
                                   double tol = 1e-7);

/// The four membership conditions of the doubly stochastic commutant of A,
/// each reported with its own residual.
struct OmegaReport {
    bool nonnegative = false;
    bool rows_sum_one = false;
    bool cols_sum_one = false;
    bool commutes_with_a = false;
    double residual_negative = 0.0; // most negative entry, as a magnitude
    double residual_rows = 0.0;
    double residual_cols = 0.0;
    double residual_commutator = 0.0;

    bool member() const { return nonnegative && rows_sum_one && cols_sum_one && commutes_with_a; }
};

OmegaReport omega_membership(const Graph& g, const Matrix& m, double tol = 1e-7);

/// Compares H(A) (Horner route) against the block matrix whose (u,v) entry
/// is w_i w_j for u in class i, v in class j, where w_i is the class value of
/// nu. Only applicable when nu is constant on every class; otherwise the
/// block matrix is not defined and applicable = false.
struct PolynomialIdentityReport {
    bool applicable = false;
    bool holds = false;
    double residual = 0.0;
};

PolynomialIdentityReport polynomial_identity_test(const Graph& g, const SpectralData& s,
                                                  const PerronVector& nu,
                                                  const VertexPartition& p, double tol = 1e-7);

/// mu interlaces lambda when lambda_i >= mu_i >= lambda_{n-m+i} for all i;
/// tight when some split index k has mu_i = lambda_i up to k and
/// mu_i = lambda_{n-m+i} after. Comparisons use tol * max(1, |lambda_1|).
struct InterlacingReport {
    bool interlaces = false;
    bool tight = false;
    int k = -1;               // split index when tight, first match scanning k = 0..m
    double max_violation = 0.0;
};

InterlacingReport interlacing_report(const std::vector<double>& lambda,
                                     const std::vector<double>& mu, double tol = 1e-7);

/// The implication "tight interlacing of B_bar implies weight-regular",
/// evaluated on one instance. False is a defect certificate, not an error.
bool tightness_implies_weight_regular_check(const Graph& g, const SpectralData& s,
                                            const PerronVector& nu, const VertexPartition& p,
                                            double tol = 1e-7);

/// Aggregate of the structural tests for one (graph, partition) instance.
struct CharacterizationVerdict {
    bool definitional = false;
    CommutationReport commutation;
    OmegaReport omega;
    PolynomialIdentityReport polynomial_identity;
    InterlacingReport interlacing;
    std::vector<double> quotient_eigenvalues;
};

CharacterizationVerdict characterize(const Graph& g, const SpectralData& s,
                                     const PerronVector& nu, const VertexPartition& p,
                                     double tol_wr = 1e-7);

} // namespace wrp
