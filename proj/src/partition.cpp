#include "wrp/partition.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "wrp/errors.hpp"

namespace wrp {

VertexPartition::VertexPartition(int n, std::vector<std::vector<int>> classes)
    : n_(n), classes_(std::move(classes)) {
    if (n_ <= 0) throw validation_error("partition: vertex count must be positive");
    if (classes_.empty()) throw validation_error("partition: needs at least one class");
    class_of_.assign(n_, -1);
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        auto& cls = classes_[i];
        if (cls.empty())
            throw validation_error("partition: class " + std::to_string(i) + " is empty");
        std::sort(cls.begin(), cls.end());
        for (int u : cls) {
            if (u < 0 || u >= n_)
                throw validation_error("partition: vertex " + std::to_string(u) +
                                       " out of range [0," + std::to_string(n_ - 1) + "]");
            if (class_of_[u] != -1)
                throw validation_error("partition: vertex " + std::to_string(u) +
                                       " appears in more than one class");
            class_of_[u] = static_cast<int>(i);
        }
    }
    for (int u = 0; u < n_; ++u)
        if (class_of_[u] == -1)
            throw validation_error("partition: vertex " + std::to_string(u) +
                                   " is not covered by any class");
}

VertexPartition VertexPartition::trivial(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return VertexPartition(n, {all});
}

VertexPartition VertexPartition::singletons(int n) {
    std::vector<std::vector<int>> classes;
    classes.reserve(n);
    for (int u = 0; u < n; ++u) classes.push_back({u});
    return VertexPartition(n, std::move(classes));
}

VertexPartition VertexPartition::from_assignment(const std::vector<int>& class_of) {
    const int n = static_cast<int>(class_of.size());
    int m = 0;
    for (int c : class_of) m = std::max(m, c + 1);
    std::vector<std::vector<int>> classes(m);
    for (int u = 0; u < n; ++u) {
        if (class_of[u] < 0) throw validation_error("partition: negative class id");
        classes[class_of[u]].push_back(u);
    }
    return VertexPartition(n, std::move(classes));
}

VertexPartition load_partition(std::istream& in, int n) {
    std::vector<std::vector<int>> classes;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> cls;
        long long v;
        while (ls >> v) {
            if (v < 0)
                throw validation_error("partition line " + std::to_string(line_no) +
                                       ": vertex ids must be >= 0");
            cls.push_back(static_cast<int>(v));
        }
        if (!ls.eof())
            throw validation_error("partition line " + std::to_string(line_no) +
                                   ": expected whitespace-separated vertex ids");
        if (!cls.empty()) classes.push_back(std::move(cls));
    }
    if (classes.empty()) throw validation_error("partition file contains no classes");
    return VertexPartition(n, std::move(classes));
}

VertexPartition load_partition_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open partition file: " + path);
    return load_partition(in, n);
}

void save_partition(const VertexPartition& p, std::ostream& out) {
    for (const auto& cls : p.classes()) {
        for (std::size_t k = 0; k < cls.size(); ++k) {
            if (k) out << ' ';
            out << cls[k];
        }
        out << '\n';
    }
}

} // namespace wrp
