#include "wrp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "wrp/errors.hpp"

namespace wrp {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n_ <= 0) throw validation_error("graph: vertex count must be positive");
    std::set<std::pair<int, int>> canon;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw validation_error("graph: edge endpoint out of range 0.." +
                                   std::to_string(n_ - 1));
        if (u == v)
            throw validation_error("graph: self-loop at vertex " + std::to_string(u));
        canon.emplace(std::min(u, v), std::max(u, v));
    }
    edges_.assign(canon.begin(), canon.end());
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Matrix Graph::adjacency_matrix() const {
    Matrix a(n_, n_);
    for (auto [u, v] : edges_) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

Graph load_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long header_n = -1;
    int max_id = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        if (first == "n") {
            long long count;
            if (!(ls >> count) || count <= 0)
                throw validation_error("edge list line " + std::to_string(line_no) +
                                       ": header must be \"n <positive count>\"");
            std::string extra;
            if (ls >> extra)
                throw validation_error("edge list line " + std::to_string(line_no) +
                                       ": trailing content after header");
            header_n = count;
            continue;
        }
        long long u, v;
        std::istringstream pair_stream(line);
        if (!(pair_stream >> u >> v) || u < 0 || v < 0)
            throw validation_error("edge list line " + std::to_string(line_no) +
                                   ": expected \"u v\" with integers >= 0");
        std::string extra;
        if (pair_stream >> extra)
            throw validation_error("edge list line " + std::to_string(line_no) +
                                   ": trailing content after edge");
        if (u == v)
            throw validation_error("edge list line " + std::to_string(line_no) +
                                   ": self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    long long n = header_n >= 0 ? header_n : max_id + 1;
    if (n <= 0) throw validation_error("edge list declares no vertices");
    if (max_id >= n)
        throw validation_error("edge list: vertex " + std::to_string(max_id) +
                               " exceeds declared count n=" + std::to_string(n));
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open edge list: " + path);
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == n;
}

std::optional<VertexPartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() == 0) return std::nullopt; // no 2-class partition exists
    std::vector<int> side(n, -1);
    for (int start = 0; start < n; ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt; // odd cycle
                }
            }
        }
    }
    std::vector<std::vector<int>> classes(2);
    for (int u = 0; u < n; ++u) classes[side[u]].push_back(u);
    if (classes[0].empty() || classes[1].empty()) return std::nullopt;
    return VertexPartition(n, std::move(classes));
}

namespace graphs {

Graph path(int n) {
    if (n < 1) throw validation_error("path: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle(int n) {
    if (n < 3) throw validation_error("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph complete(int n) {
    if (n < 1) throw validation_error("complete: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw validation_error("complete_bipartite: sides must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, std::move(e));
}

Graph star(int leaves) {
    if (leaves < 1) throw validation_error("star: needs at least one leaf");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, std::move(e));
}

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);       // outer 5-cycle
        e.emplace_back(i, i + 5);             // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5); // inner pentagram
    }
    return Graph(10, std::move(e));
}

Graph example1() {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= 4; ++v) e.emplace_back(0, v);
    // 8-cycle 1-5-2-6-3-7-4-8-1 alternating between {1..4} and {5..8}
    const int cyc[8] = {1, 5, 2, 6, 3, 7, 4, 8};
    for (int i = 0; i < 8; ++i) e.emplace_back(cyc[i], cyc[(i + 1) % 8]);
    return Graph(9, std::move(e));
}

} // namespace graphs

Graph generate(const std::string& family, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw validation_error("generate: family '" + family + "' expects " +
                                   std::to_string(k) + " parameter(s)");
    };
    if (family == "path") {
        need(1);
        return graphs::path(params[0]);
    }
    if (family == "cycle") {
        need(1);
        return graphs::cycle(params[0]);
    }
    if (family == "complete") {
        need(1);
        return graphs::complete(params[0]);
    }
    if (family == "complete_bipartite") {
        need(2);
        return graphs::complete_bipartite(params[0], params[1]);
    }
    if (family == "star") {
        need(1);
        return graphs::star(params[0]);
    }
    if (family == "petersen") {
        need(0);
        return graphs::petersen();
    }
    if (family == "example1") {
        need(0);
        return graphs::example1();
    }
    throw validation_error("generate: unknown family '" + family + "'");
}

} // namespace wrp
