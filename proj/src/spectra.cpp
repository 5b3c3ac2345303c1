#include "wrp/spectra.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "wrp/errors.hpp"

namespace wrp {

namespace {

// One cyclic Jacobi sweep: rotate away every off-diagonal entry above the
// threshold. Returns the largest |a_pq| seen before rotating.
double jacobi_sweep(Matrix& a, Matrix& v, double threshold) {
    const std::size_t n = a.rows();
    double largest = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const double apq = a(p, q);
            largest = std::max(largest, std::fabs(apq));
            if (std::fabs(apq) <= threshold) continue;

            const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
            double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
            if (theta < 0.0) t = -t;
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            const double tau = s / (1.0 + c);

            a(p, p) -= t * apq;
            a(q, q) += t * apq;
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == p || r == q) continue;
                const double arp = a(r, p);
                const double arq = a(r, q);
                a(r, p) = arp - s * (arq + tau * arp);
                a(p, r) = a(r, p);
                a(r, q) = arq + s * (arp - tau * arq);
                a(q, r) = a(r, q);
            }
            for (std::size_t r = 0; r < n; ++r) {
                const double vrp = v(r, p);
                const double vrq = v(r, q);
                v(r, p) = vrp - s * (vrq + tau * vrp);
                v(r, q) = vrq + s * (vrp - tau * vrq);
            }
        }
    }
    return largest;
}

} // namespace

SymmetricEigen eigh(const Matrix& input, int max_sweeps) {
    assert(input.rows() == input.cols());
    const std::size_t n = input.rows();
    Matrix a = input;
    Matrix v = Matrix::identity(n);

    const double scale = std::max(1.0, a.max_abs());
    const double target = 1e-15 * scale;
    bool converged = (n <= 1);
    for (int sweep = 0; !converged && sweep < max_sweeps; ++sweep) {
        const double largest = jacobi_sweep(a, v, target);
        if (largest <= target) converged = true;
    }
    if (!converged) throw numeric_error("eigh: Jacobi iteration did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    SymmetricEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

std::vector<double> symmetric_eigenvalues(const Matrix& a) {
    return eigh(a).values;
}

SpectralData eigendecompose(const Graph& g, double tol_group) {
    const int n = g.vertex_count();
    SymmetricEigen eig = eigh(g.adjacency_matrix());

    SpectralData s;
    s.eigenvalues = eig.values;
    s.eigenbasis = eig.vectors;

    const double gap = tol_group * std::max(1.0, std::fabs(s.eigenvalues.front()));
    std::size_t start = 0;
    while (start < s.eigenvalues.size()) {
        std::size_t stop = start + 1;
        while (stop < s.eigenvalues.size() &&
               s.eigenvalues[stop - 1] - s.eigenvalues[stop] <= gap)
            ++stop;
        double mean = 0.0;
        for (std::size_t k = start; k < stop; ++k) mean += s.eigenvalues[k];
        mean /= static_cast<double>(stop - start);
        s.distinct.push_back({mean, static_cast<int>(stop - start)});

        Matrix e(n, n);
        for (std::size_t k = start; k < stop; ++k)
            for (int i = 0; i < n; ++i) {
                const double vik = s.eigenbasis(i, k);
                if (vik == 0.0) continue;
                for (int j = 0; j < n; ++j) e(i, j) += vik * s.eigenbasis(j, k);
            }
        s.idempotents.push_back(std::move(e));
        start = stop;
    }
    return s;
}

double PerronVector::norm_squared() const {
    return dot(entries, entries);
}

double PerronVector::max_entry() const {
    return *std::max_element(entries.begin(), entries.end());
}

PerronVector perron_vector(const Graph& g, const SpectralData& s) {
    if (!is_connected(g)) throw domain_error("Perron vector requires connected graph");
    if (s.distinct.front().multiplicity != 1)
        throw numeric_error("perron_vector: top eigenvalue not numerically simple");

    const int n = g.vertex_count();
    std::vector<double> nu(n);
    for (int i = 0; i < n; ++i) nu[i] = s.eigenbasis(i, 0);

    int argmax = 0;
    for (int i = 1; i < n; ++i)
        if (std::fabs(nu[i]) > std::fabs(nu[argmax])) argmax = i;
    if (nu[argmax] < 0.0)
        for (double& x : nu) x = -x;

    double min_entry = nu[0];
    for (double x : nu) {
        if (x <= 0.0)
            throw numeric_error("perron_vector: eigenvector has a non-positive entry");
        min_entry = std::min(min_entry, x);
    }
    for (double& x : nu) x /= min_entry;

    return PerronVector{std::move(nu), s.distinct.front().value};
}

bool is_spectrum_symmetric(const SpectralData& s, double tol) {
    const std::size_t n = s.eigenvalues.size();
    const double bound = tol * std::max(1.0, std::fabs(s.lambda1()));
    for (std::size_t i = 0; i < n; ++i)
        if (std::fabs(s.eigenvalues[i] + s.eigenvalues[n - 1 - i]) > bound) return false;
    return true;
}

} // namespace wrp
