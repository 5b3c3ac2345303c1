#include "wrp/characterizations.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "wrp/errors.hpp"

namespace wrp {

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Matrix evaluate_on_matrix(const Polynomial& p, const Matrix& a) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    if (p.coefficients.empty()) return Matrix(n, n);
    Matrix acc(n, n);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = p.coefficients.back();
    for (auto it = p.coefficients.rbegin() + 1; it != p.coefficients.rend(); ++it) {
        acc = acc * a;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

Polynomial weight_hoffman_polynomial(const SpectralData& s, const PerronVector& nu) {
    const int d = s.d();
    if (d < 1)
        throw domain_error("weight_hoffman_polynomial: needs at least two distinct eigenvalues");

    std::vector<double> coeff{1.0};
    double pi0 = 1.0;
    const double theta0 = s.distinct.front().value;
    for (int l = 1; l <= d; ++l) {
        const double root = s.distinct[l].value;
        pi0 *= theta0 - root;
        // multiply by (x - root)
        std::vector<double> next(coeff.size() + 1, 0.0);
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            next[k + 1] += coeff[k];
            next[k] -= root * coeff[k];
        }
        coeff = std::move(next);
    }
    const double alpha = nu.norm_squared() / pi0;
    for (double& c : coeff) c *= alpha;
    return Polynomial{std::move(coeff)};
}

CommutationReport commutation_test(const Graph& g, const WeightedPartitionView& view,
                                   double tol) {
    const Matrix a = g.adjacency_matrix();
    const Matrix m = view.s_bar * view.s_bar.transpose();
    const Matrix commutator = a * m - m * a;

    CommutationReport report;
    report.commutator_residual = commutator.max_abs();
    report.commutes = report.commutator_residual <= tol * std::max(1.0, view.lambda1);

    if (report.commutes) {
        // balance between class representatives u in V_i, v in V_j
        PerronVector nu{view.nu, view.lambda1};
        auto table = weight_intersection_numbers(g, nu, view.partition);
        const int mcls = view.partition.class_count();
        double worst = 0.0;
        for (int i = 0; i < mcls; ++i) {
            const int u = view.partition.class_members(i).front();
            for (int j = 0; j < mcls; ++j) {
                const int v = view.partition.class_members(j).front();
                const double lhs = view.class_norms[i] * view.class_norms[i] * table.rows[u][j];
                const double rhs = view.class_norms[j] * view.class_norms[j] * table.rows[v][i];
                worst = std::max(worst, std::fabs(lhs - rhs));
            }
        }
        report.balance_residual = worst;
    }
    return report;
}

OmegaReport omega_membership(const Graph& g, const Matrix& m, double tol) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    if (m.rows() != n || m.cols() != n)
        throw validation_error("omega_membership: matrix size does not match graph");

    OmegaReport r;
    double most_negative = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            most_negative = std::min(most_negative, m(i, j));
    r.residual_negative = std::max(0.0, -most_negative);

    double row_dev = 0.0, col_dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double rs = 0.0, cs = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            rs += m(i, j);
            cs += m(j, i);
        }
        row_dev = std::max(row_dev, std::fabs(rs - 1.0));
        col_dev = std::max(col_dev, std::fabs(cs - 1.0));
    }
    r.residual_rows = row_dev;
    r.residual_cols = col_dev;

    const Matrix a = g.adjacency_matrix();
    r.residual_commutator = (a * m - m * a).max_abs();

    r.nonnegative = r.residual_negative <= tol;
    r.rows_sum_one = row_dev <= tol;
    r.cols_sum_one = col_dev <= tol;
    r.commutes_with_a = r.residual_commutator <= tol;
    return r;
}

namespace {

// Class value of nu when constant on every class (within tol), else nullopt.
std::optional<std::vector<double>> class_constant_nu(const VertexPartition& p,
                                                     const PerronVector& nu, double tol) {
    std::vector<double> values(p.class_count());
    for (int i = 0; i < p.class_count(); ++i) {
        double lo = nu.entries[p.class_members(i).front()];
        double hi = lo;
        for (int u : p.class_members(i)) {
            lo = std::min(lo, nu.entries[u]);
            hi = std::max(hi, nu.entries[u]);
        }
        if (hi - lo > tol) return std::nullopt;
        values[i] = nu.entries[p.class_members(i).front()];
    }
    return values;
}

} // namespace

PolynomialIdentityReport polynomial_identity_test(const Graph& g, const SpectralData& s,
                                                  const PerronVector& nu,
                                                  const VertexPartition& p, double tol) {
    PolynomialIdentityReport report;
    if (s.d() < 1) return report; // single distinct eigenvalue: no polynomial to build
    const double tol_nu = tol * std::max(1.0, nu.max_entry());
    auto values = class_constant_nu(p, nu, tol_nu);
    if (!values) return report; // not applicable

    report.applicable = true;
    const Polynomial h = weight_hoffman_polynomial(s, nu);
    const Matrix ha = evaluate_on_matrix(h, g.adjacency_matrix());

    const int n = g.vertex_count();
    double worst = 0.0;
    for (int u = 0; u < n; ++u) {
        const double wu = (*values)[p.class_of(u)];
        for (int v = 0; v < n; ++v) {
            const double expected = wu * (*values)[p.class_of(v)];
            worst = std::max(worst, std::fabs(ha(u, v) - expected));
        }
    }
    report.residual = worst;
    report.holds = worst <= tol * std::max(1.0, nu.lambda1);
    return report;
}

InterlacingReport interlacing_report(const std::vector<double>& lambda,
                                     const std::vector<double>& mu, double tol) {
    const std::size_t n = lambda.size();
    const std::size_t m = mu.size();
    if (m > n) throw validation_error("interlacing_report: more quotient eigenvalues than graph eigenvalues");

    const double bound = tol * std::max(1.0, std::fabs(lambda.front()));
    InterlacingReport r;
    r.interlaces = true;
    for (std::size_t i = 0; i < m; ++i) {
        const double upper_violation = mu[i] - lambda[i];
        const double lower_violation = lambda[n - m + i] - mu[i];
        r.max_violation = std::max({r.max_violation, upper_violation, lower_violation});
        if (upper_violation > bound || lower_violation > bound) r.interlaces = false;
    }
    r.max_violation = std::max(0.0, r.max_violation);

    for (std::size_t k = 0; k <= m; ++k) {
        bool match = true;
        for (std::size_t i = 0; i < k && match; ++i)
            match = std::fabs(mu[i] - lambda[i]) <= bound;
        for (std::size_t i = k; i < m && match; ++i)
            match = std::fabs(mu[i] - lambda[n - m + i]) <= bound;
        if (match) {
            r.tight = true;
            r.k = static_cast<int>(k);
            break;
        }
    }
    return r;
}

bool tightness_implies_weight_regular_check(const Graph& g, const SpectralData& s,
                                            const PerronVector& nu, const VertexPartition& p,
                                            double tol) {
    auto view = make_weighted_view(p, nu);
    auto quotients = quotient_matrices(view, g.adjacency_matrix());
    auto mu = symmetric_eigenvalues(quotients.b_bar);
    auto report = interlacing_report(s.eigenvalues, mu, tol);
    if (!report.tight) return true;
    return weight_intersection_numbers(g, nu, p, tol).weight_regular;
}

CharacterizationVerdict characterize(const Graph& g, const SpectralData& s,
                                     const PerronVector& nu, const VertexPartition& p,
                                     double tol_wr) {
    CharacterizationVerdict v;
    auto view = make_weighted_view(p, nu);

    v.definitional = weight_intersection_numbers(g, nu, p, tol_wr).weight_regular;
    v.commutation = commutation_test(g, view, tol_wr);
    v.omega = omega_membership(g, view.s_bar * view.s_bar.transpose(), tol_wr);
    v.polynomial_identity = polynomial_identity_test(g, s, nu, p, tol_wr);

    auto quotients = quotient_matrices(view, g.adjacency_matrix());
    v.quotient_eigenvalues = symmetric_eigenvalues(quotients.b_bar);
    v.interlacing = interlacing_report(s.eigenvalues, v.quotient_eigenvalues, tol_wr);

    assert(v.definitional == v.commutation.commutes);
    return v;
}

} // namespace wrp
