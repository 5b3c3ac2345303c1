#pragma once

#include <iosfwd>
#include <vector>

namespace wrp {

/// Ordered partition of the vertex set {0..n-1} into disjoint nonempty classes.
/// Class order is meaningful (it fixes the row/column order of quotient
/// matrices); vertices within a class are kept sorted.
class VertexPartition {
public:
    /// Validates: every vertex in exactly one class, no empty class.
    /// Throws validation_error otherwise.
    VertexPartition(int n, std::vector<std::vector<int>> classes);

    int vertex_count() const { return n_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    const std::vector<int>& class_members(int i) const { return classes_[i]; }
    int class_of(int u) const { return class_of_[u]; }

    bool operator==(const VertexPartition& other) const = default;

    /// The one-class partition {V}.
    static VertexPartition trivial(int n);
    /// One singleton class per vertex, in vertex order.
    static VertexPartition singletons(int n);
    /// From a class-id-per-vertex array; ids must cover 0..m-1.
    static VertexPartition from_assignment(const std::vector<int>& class_of);

private:
    int n_ = 0;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

/// Partition file: one line per class, space-separated vertex ids,
/// '#' starts a comment, blank lines ignored. Class order = line order.
VertexPartition load_partition(std::istream& in, int n);
VertexPartition load_partition_file(const std::string& path, int n);
void save_partition(const VertexPartition& p, std::ostream& out);

} // namespace wrp
