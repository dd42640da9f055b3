#pragma once

#include "gt/bitset.hpp"
#include "gt/errors.hpp"

#include <utility>
#include <vector>

namespace gt {

inline constexpr int kMaxVertices = 4096;

/// Simple undirected graph on vertices 0..n-1, one adjacency bitset row per
/// vertex.  Immutable after construction.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>> &edges);
    static Graph empty(int n) { return from_edges(n, {}); }
    static Graph complete(int n);

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const Bitset &neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return static_cast<int>(rows_[v].count()); }

    int edge_count() const;
    int max_degree() const;
    std::vector<int> degree_sequence() const;  // sorted descending

    /// Sorted edge list, u < v within each pair, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    /// Image under a vertex relabelling: vertex v becomes perm[v].
    Graph relabeled(const std::vector<int> &perm) const;

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    int n_ = 0;
    std::vector<Bitset> rows_;
};

} // namespace gt
