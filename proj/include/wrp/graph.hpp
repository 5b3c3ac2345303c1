#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrp/matrix.hpp"
#include "wrp/partition.hpp"

namespace wrp {

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    /// Validates: endpoints in range, no self-loops; duplicate edges collapse.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Canonical edge list: u < v, lexicographically sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    bool has_edge(int u, int v) const;

    /// Symmetric 0/1 matrix with zero diagonal.
    Matrix adjacency_matrix() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Edge-list format: UTF-8 text, '#' comments, optional "n <count>" header,
/// one "u v" pair per line. Without a header, n = 1 + max vertex id.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void save_edge_list(const Graph& g, std::ostream& out);

bool is_connected(const Graph& g);

/// BFS 2-coloring classes when g is bipartite with at least one edge,
/// nullopt otherwise. The class containing vertex 0 comes first, so for a
/// connected graph the result is deterministic.
std::optional<VertexPartition> bipartition(const Graph& g);

namespace graphs {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph petersen();

/// Nine vertices: a hub (vertex 0) joined to all of {1,2,3,4}, plus an
/// 8-cycle alternating between {1,2,3,4} and {5,6,7,8}. Every vertex of the
/// middle class has one hub neighbor and two outer neighbors; every outer
/// vertex has two middle neighbors.
Graph example1();

} // namespace graphs

/// Deterministic family dispatch. Families: path(n), cycle(n), complete(n),
/// complete_bipartite(a,b), star(k), petersen, example1.
/// Throws validation_error for unknown family or bad parameters.
Graph generate(const std::string& family, const std::vector<int>& params = {});

} // namespace wrp
