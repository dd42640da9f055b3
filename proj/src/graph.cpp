#include "gt/graph.hpp"

#include <algorithm>
#include <string>

namespace gt {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
    if (n < 0 || n > kMaxVertices)
        throw Error(ErrorKind::IndexOutOfRange, "vertex count out of range: " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.rows_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::IndexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (g.rows_[u].test(v))
            throw Error(ErrorKind::DuplicateEdge,
                        "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.rows_[u].set(v);
        g.rows_[v].set(u);
    }
    return g;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return from_edges(n, es);
}

int Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto &row : rows_) total += row.count();
    return static_cast<int>(total / 2);
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> ds(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) ds[static_cast<std::size_t>(v)] = degree(v);
    std::sort(ds.rbegin(), ds.rend());
    return ds;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (std::size_t v = rows_[u].find_next(static_cast<std::size_t>(u)); v < rows_[u].size();
             v = rows_[u].find_next(v))
            es.emplace_back(u, static_cast<int>(v));
    return es;
}

Graph Graph::relabeled(const std::vector<int> &perm) const {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges())
        es.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return from_edges(n_, es);
}

} // namespace gt
