#include "wrp/chromatic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wrp/characterizations.hpp"
#include "wrp/errors.hpp"
#include "wrp/weight_partition.hpp"

namespace wrp {

namespace {

// Greedy clique: try each vertex as a seed, extend through neighbors in
// degree order, keep the largest clique found.
std::vector<int> greedy_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<int> best;
    for (int seed : order) {
        std::vector<int> clique{seed};
        for (int cand : order) {
            if (cand == seed) continue;
            bool ok = true;
            for (int u : clique)
                if (!g.has_edge(cand, u)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(cand);
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    std::sort(best.begin(), best.end());
    return best;
}

struct SearchState {
    const Graph& g;
    std::vector<int> color;       // -1 = uncolored
    int best_k;                   // best complete coloring found so far
    std::vector<int> best_color;
};

int pick_dsatur_vertex(const SearchState& st, int max_color) {
    const int n = st.g.vertex_count();
    int best = -1, best_sat = -1, best_deg = -1;
    std::vector<char> used(max_color + 2, 0);
    for (int v = 0; v < n; ++v) {
        if (st.color[v] != -1) continue;
        std::fill(used.begin(), used.end(), 0);
        int sat = 0;
        for (int w : st.g.neighbors(v)) {
            const int c = st.color[w];
            if (c >= 0 && !used[c]) {
                used[c] = 1;
                ++sat;
            }
        }
        const int deg = st.g.degree(v);
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            best = v;
            best_sat = sat;
            best_deg = deg;
        }
    }
    return best;
}

void branch(SearchState& st, int colored, int max_color) {
    const int n = st.g.vertex_count();
    if (colored == n) {
        st.best_k = max_color + 1;
        st.best_color = st.color;
        return;
    }
    if (max_color + 1 >= st.best_k) return; // cannot improve

    const int v = pick_dsatur_vertex(st, max_color);
    std::vector<char> banned(st.best_k + 1, 0);
    for (int w : st.g.neighbors(v))
        if (st.color[w] >= 0) banned[st.color[w]] = 1;

    const int limit = std::min(max_color + 1, st.best_k - 2);
    for (int c = 0; c <= limit; ++c) {
        if (c <= max_color && banned[c]) continue;
        st.color[v] = c;
        branch(st, colored + 1, std::max(max_color, c));
        st.color[v] = -1;
        if (st.best_k <= max_color + 1) return; // bound collapsed under us
    }
}

// Greedy DSATUR coloring, used as the initial upper bound.
std::vector<int> dsatur_greedy(const Graph& g) {
    const int n = g.vertex_count();
    SearchState st{g, std::vector<int>(n, -1), n + 1, {}};
    int max_color = -1;
    for (int step = 0; step < n; ++step) {
        const int v = pick_dsatur_vertex(st, max_color);
        std::vector<char> banned(n + 1, 0);
        for (int w : g.neighbors(v))
            if (st.color[w] >= 0) banned[st.color[w]] = 1;
        int c = 0;
        while (banned[c]) ++c;
        st.color[v] = c;
        max_color = std::max(max_color, c);
    }
    return st.color;
}

// Enumerate proper colorings with exactly k colors in canonical form (a new
// color may only be the smallest unused one, scanning vertices in id order).
// Appends class partitions until max_count; returns false when truncated.
bool enumerate_canonical(const Graph& g, int k, long max_count,
                         std::vector<VertexPartition>& out) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    bool complete = true;

    // iterative backtracking to keep stack use flat for n up to the cap
    struct Frame {
        int vertex;
        int next_color;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.vertex == n) {
            if (static_cast<long>(out.size()) >= max_count) {
                complete = false;
                break;
            }
            out.push_back(VertexPartition::from_assignment(color));
            stack.pop_back();
            if (!stack.empty()) color[stack.back().vertex] = -1;
            continue;
        }
        int max_used = -1;
        for (int u = 0; u < f.vertex; ++u) max_used = std::max(max_used, color[u]);
        const int limit = std::min(max_used + 1, k - 1);

        int c = f.next_color;
        bool advanced = false;
        for (; c <= limit; ++c) {
            bool clash = false;
            for (int w : g.neighbors(f.vertex)) {
                if (w < f.vertex && color[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (!clash) {
                color[f.vertex] = c;
                f.next_color = c + 1;
                stack.push_back({f.vertex + 1, 0});
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            color[f.vertex] = -1;
            stack.pop_back();
            if (!stack.empty()) color[stack.back().vertex] = -1;
        }
    }
    return complete;
}

} // namespace

ColoringResult exact_chromatic(const Graph& g, const ChromaticLimits& limits,
                               bool enumerate_all) {
    const int n = g.vertex_count();
    if (n > limits.chi_cap)
        throw resource_error("exact_chromatic: n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(limits.chi_cap));
    if (enumerate_all && n > limits.enumeration_cap)
        throw resource_error("exact_chromatic: enumeration capped at n=" +
                             std::to_string(limits.enumeration_cap));

    ColoringResult result;
    if (g.edge_count() == 0) {
        result.chi = 1;
        result.witness = VertexPartition::trivial(n);
        if (enumerate_all) {
            result.all_optimal = std::vector<VertexPartition>{VertexPartition::trivial(n)};
            result.enumeration_complete = true;
        }
        return result;
    }

    const std::vector<int> ub_coloring = dsatur_greedy(g);
    const int ub = 1 + *std::max_element(ub_coloring.begin(), ub_coloring.end());
    const std::vector<int> clique = greedy_clique(g);
    const int lb = static_cast<int>(clique.size());

    SearchState st{g, std::vector<int>(n, -1), ub, ub_coloring};
    if (lb < ub) {
        // Clique vertices must take distinct colors; fixing them prunes the
        // color permutations.
        for (std::size_t i = 0; i < clique.size(); ++i) st.color[clique[i]] = static_cast<int>(i);
        branch(st, static_cast<int>(clique.size()), static_cast<int>(clique.size()) - 1);
    }

    result.chi = st.best_k;
    result.witness = VertexPartition::from_assignment(st.best_color);

    if (enumerate_all) {
        std::vector<VertexPartition> all;
        result.enumeration_complete = enumerate_canonical(g, result.chi, limits.max_colorings, all);
        result.all_optimal = std::move(all);
    }
    return result;
}

double hoffman_bound(const SpectralData& s) {
    const double lambda_n = s.lambda_min();
    if (lambda_n >= -1e-12)
        throw domain_error("hoffman_bound: graph has no edge (lambda_n >= 0)");
    return 1.0 - s.lambda1() / lambda_n;
}

HoffmanAudit audit_hoffman(const Graph& g, const SpectralData& s, const PerronVector& nu,
                           const ColoringResult& cr, double tol_hoffman, double tol_wr) {
    HoffmanAudit audit;
    audit.hoffman_bound = hoffman_bound(s);
    audit.improved_bound = audit.hoffman_bound + 1.0;
    audit.is_hoffman_coloring =
        std::fabs(static_cast<double>(cr.chi) - audit.hoffman_bound) <= tol_hoffman;
    audit.multiplicity_lambda_n = s.distinct.back().multiplicity;

    if (cr.witness)
        audit.color_classes_weight_regular =
            weight_intersection_numbers(g, nu, *cr.witness, tol_wr).weight_regular;

    if (cr.all_optimal) {
        bool found_weight_regular = false;
        for (const auto& coloring : *cr.all_optimal) {
            const bool wr = weight_intersection_numbers(g, nu, coloring, tol_wr).weight_regular;
            audit.per_coloring_weight_regular.push_back(wr);
            if (wr) found_weight_regular = true;
        }
        if (found_weight_regular)
            audit.improved_bound_applicable = Applicability::no;
        else if (cr.enumeration_complete)
            audit.improved_bound_applicable = Applicability::yes;

        if (cr.enumeration_complete)
            audit.unique_optimal_coloring = cr.all_optimal->size() == 1;
        else if (cr.all_optimal->size() >= 2)
            audit.unique_optimal_coloring = false;
    }
    return audit;
}

std::vector<PropositionDefect> verify_proposition3(
    const std::vector<std::pair<std::string, Graph>>& corpus, double tol_hoffman,
    double tol_wr) {
    std::vector<PropositionDefect> defects;
    for (const auto& [name, g] : corpus) {
        if (!is_connected(g))
            throw domain_error("verify_proposition3: graph '" + name + "' is not connected");

        const SpectralData s = eigendecompose(g);
        const PerronVector nu = perron_vector(g, s);
        const ColoringResult cr = exact_chromatic(g, {}, /*enumerate_all=*/true);
        const HoffmanAudit audit = audit_hoffman(g, s, nu, cr, tol_hoffman, tol_wr);
        if (!audit.is_hoffman_coloring)
            throw domain_error("verify_proposition3: graph '" + name +
                               "' does not attain the spectral bound");

        auto flag = [&](const std::string& check, const std::string& detail) {
            defects.push_back({name, check, detail});
        };

        if (!audit.color_classes_weight_regular)
            flag("color-classes-weight-regular", "witness coloring is not weight-regular");

        const auto view = make_weighted_view(*cr.witness, nu);
        const auto quotients = quotient_matrices(view, g.adjacency_matrix());
        const auto mu = symmetric_eigenvalues(quotients.b_bar);
        const auto inter = interlacing_report(s.eigenvalues, mu, tol_wr);
        if (!inter.tight) flag("tight-interlacing", "quotient eigenvalues are not tight");

        const double bound = tol_wr * std::max(1.0, s.lambda1());
        bool has_lambda1 = false;
        for (double m : mu)
            if (std::fabs(m - s.lambda1()) <= bound) has_lambda1 = true;
        if (!has_lambda1) flag("lambda1-in-quotient-spectrum", "lambda_1 missing from B_bar");

        double diag = 0.0, trace = 0.0;
        for (std::size_t i = 0; i < quotients.b_bar.rows(); ++i) {
            diag = std::max(diag, std::fabs(quotients.b_bar(i, i)));
            trace += quotients.b_bar(i, i);
        }
        if (diag > bound || std::fabs(trace) > bound)
            flag("zero-diagonal-trace", "B_bar diagonal or trace is nonzero");

        if (audit.multiplicity_lambda_n != cr.chi - 1)
            flag("multiplicity-lambda-n",
                 "mult(lambda_n)=" + std::to_string(audit.multiplicity_lambda_n) +
                     " but chi-1=" + std::to_string(cr.chi - 1));

        if (!audit.unique_optimal_coloring.has_value() || !*audit.unique_optimal_coloring)
            flag("unique-optimal-coloring", "optimal coloring is not unique");
    }
    return defects;
}

} // namespace wrp
