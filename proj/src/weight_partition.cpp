#include "wrp/weight_partition.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "wrp/errors.hpp"

namespace wrp {

Matrix WeightedPartitionView::diagonal_d() const {
    const std::size_t m = class_norms.size();
    Matrix d(m, m);
    for (std::size_t i = 0; i < m; ++i) d(i, i) = class_norms[i];
    return d;
}

WeightedPartitionView make_weighted_view(const VertexPartition& p, const PerronVector& nu) {
    const int n = p.vertex_count();
    const int m = p.class_count();
    assert(static_cast<int>(nu.entries.size()) == n);

    WeightedPartitionView view{p, nu.entries, nu.lambda1, {}, Matrix(n, m), Matrix(n, m)};
    view.class_norms.resize(m);
    for (int i = 0; i < m; ++i) {
        double sq = 0.0;
        for (int u : p.class_members(i)) sq += nu.entries[u] * nu.entries[u];
        view.class_norms[i] = std::sqrt(sq);
    }
    for (int u = 0; u < n; ++u) {
        const int i = p.class_of(u);
        view.s_tilde(u, i) = nu.entries[u];
        view.s_bar(u, i) = nu.entries[u] / view.class_norms[i];
    }
    return view;
}

double weight_degree(const Graph& g, const PerronVector& nu, int u) {
    if (u < 0 || u >= g.vertex_count())
        throw std::out_of_range("weight_degree: vertex out of range");
    double s = 0.0;
    for (int v : g.neighbors(u)) s += nu.entries[v];
    return s / nu.entries[u];
}

WeightIntersectionTable weight_intersection_numbers(const Graph& g, const PerronVector& nu,
                                                    const VertexPartition& p, double tol_wr) {
    const int n = g.vertex_count();
    const int m = p.class_count();

    WeightIntersectionTable table;
    table.rows.assign(n, std::vector<double>(m, 0.0));
    for (int u = 0; u < n; ++u) {
        auto& row = table.rows[u];
        for (int v : g.neighbors(u)) row[p.class_of(v)] += nu.entries[v];
        for (double& x : row) x /= nu.entries[u];
    }

    const double tol = tol_wr * std::max(1.0, nu.lambda1);
    double spread = 0.0;
    for (int i = 0; i < m; ++i) {
        const auto& members = p.class_members(i);
        const auto& rep = table.rows[members.front()];
        for (int u : members)
            for (int j = 0; j < m; ++j)
                spread = std::max(spread, std::fabs(table.rows[u][j] - rep[j]));
    }
    table.max_within_class_spread = spread;
    table.weight_regular = spread <= tol;

    if (table.weight_regular) {
        Matrix b(m, m);
        for (int i = 0; i < m; ++i) {
            const auto& rep = table.rows[p.class_members(i).front()];
            for (int j = 0; j < m; ++j) b(i, j) = rep[j];
        }
        table.b_star = std::move(b);
    }
    return table;
}

QuotientMatrices quotient_matrices(const WeightedPartitionView& view, const Matrix& adjacency) {
    assert(adjacency.rows() == view.s_tilde.rows());
    QuotientMatrices q;
    q.b_tilde = view.s_tilde.transpose() * adjacency * view.s_tilde;
    const std::size_t m = view.class_norms.size();
    q.b_bar = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            q.b_bar(i, j) = q.b_tilde(i, j) / (view.class_norms[i] * view.class_norms[j]);
    return q;
}

std::optional<std::vector<std::vector<int>>> regular_quotient(const Graph& g,
                                                              const VertexPartition& p) {
    const int m = p.class_count();
    std::vector<std::vector<int>> b(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) {
        const auto& members = p.class_members(i);
        for (std::size_t k = 0; k < members.size(); ++k) {
            std::vector<int> counts(m, 0);
            for (int v : g.neighbors(members[k])) ++counts[p.class_of(v)];
            if (k == 0) {
                b[i] = counts;
            } else if (counts != b[i]) {
                return std::nullopt;
            }
        }
    }
    return b;
}

Lemma1Report lemma1_check(const Graph& g, const PerronVector& nu, const VertexPartition& p,
                          double tol_wr) {
    Lemma1Report r;
    auto b = regular_quotient(g, p);
    r.regular = b.has_value();

    auto table = weight_intersection_numbers(g, nu, p, tol_wr);
    r.weight_regular = table.weight_regular;

    const int m = p.class_count();
    const double nu_max = nu.max_entry();
    const double tol_nu = tol_wr * std::max(1.0, nu_max);
    r.nu_constant_per_class = true;
    std::vector<double> class_value(m);
    for (int i = 0; i < m; ++i) {
        double lo = nu.entries[p.class_members(i).front()];
        double hi = lo;
        for (int u : p.class_members(i)) {
            lo = std::min(lo, nu.entries[u]);
            hi = std::max(hi, nu.entries[u]);
        }
        class_value[i] = nu.entries[p.class_members(i).front()];
        if (hi - lo > tol_nu) r.nu_constant_per_class = false;
    }

    if (r.regular && table.b_star) {
        r.ratio_law_applicable = true;
        r.ratio_law_holds = true;
        const double tol = tol_wr * std::max(1.0, nu.lambda1) * std::max(1.0, nu_max);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const double lhs = (*table.b_star)(i, j) * class_value[i];
                const double rhs = class_value[j] * static_cast<double>((*b)[i][j]);
                if (std::fabs(lhs - rhs) > tol) r.ratio_law_holds = false;
            }
    }
    return r;
}

namespace {

// Split one class into signature-agreement components. Signatures are the
// current b*-rows; two vertices agree when the rows differ by at most tol in
// max norm. Components are found by transitive closure and ordered by their
// smallest vertex id (members are already sorted).
std::vector<std::vector<int>> split_class(const std::vector<int>& members,
                                          const std::vector<std::vector<double>>& rows,
                                          double tol) {
    const std::size_t k = members.size();
    std::vector<int> comp(k, -1);
    std::vector<std::vector<int>> parts;
    for (std::size_t a = 0; a < k; ++a) {
        if (comp[a] != -1) continue;
        const int id = static_cast<int>(parts.size());
        parts.push_back({members[a]});
        comp[a] = id;
        // breadth-first closure over the agreement relation
        std::vector<std::size_t> frontier{a};
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            for (std::size_t x : frontier) {
                for (std::size_t b = 0; b < k; ++b) {
                    if (comp[b] != -1) continue;
                    double diff = 0.0;
                    const auto& rx = rows[members[x]];
                    const auto& rb = rows[members[b]];
                    for (std::size_t j = 0; j < rx.size(); ++j)
                        diff = std::max(diff, std::fabs(rx[j] - rb[j]));
                    if (diff <= tol) {
                        comp[b] = id;
                        parts[id].push_back(members[b]);
                        next.push_back(b);
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    for (auto& part : parts) std::sort(part.begin(), part.end());
    return parts;
}

VertexPartition split_by_nu(const VertexPartition& p, const std::vector<double>& nu,
                            double tol) {
    std::vector<std::vector<int>> classes;
    for (const auto& members : p.classes()) {
        std::vector<int> rest = members;
        while (!rest.empty()) {
            const double pivot = nu[rest.front()];
            std::vector<int> taken, left;
            for (int u : rest)
                (std::fabs(nu[u] - pivot) <= tol ? taken : left).push_back(u);
            classes.push_back(std::move(taken));
            rest = std::move(left);
        }
    }
    return VertexPartition(p.vertex_count(), std::move(classes));
}

} // namespace

VertexPartition coarsest_weight_regular_refinement(const Graph& g, const PerronVector& nu,
                                                   const VertexPartition& seed, double tol_wr) {
    const double tol = tol_wr * std::max(1.0, nu.lambda1);

    VertexPartition current = seed;
    if (seed.class_count() == 1) {
        const double tol_nu = tol_wr * std::max(1.0, nu.max_entry());
        current = split_by_nu(seed, nu.entries, tol_nu);
    }

    for (int round = 0; round <= g.vertex_count(); ++round) {
        auto table = weight_intersection_numbers(g, nu, current, tol_wr);

        bool changed = false;
        std::vector<std::vector<int>> next;
        for (const auto& members : current.classes()) {
            auto parts = split_class(members, table.rows, tol);
            if (parts.size() > 1) changed = true;
            for (auto& part : parts) next.push_back(std::move(part));
        }
        if (!changed) return current;
        current = VertexPartition(g.vertex_count(), std::move(next));
    }
    throw numeric_error("refinement did not stabilize"); // unreachable: each round adds a class
}

} // namespace wrp
