#pragma once

#include "gt/rng.hpp"
#include "gt/triple.hpp"

#include <set>
#include <utility>
#include <vector>

namespace gt::test {

inline Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph::from_edges(n, es);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v)
        es.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    return Graph::from_edges(n, es);
}

inline Graph star(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) es.emplace_back(0, v);
    return Graph::from_edges(n, es);
}

// Seeded random triple with m1/m2 white and m3 yellow edges.
inline Triple random_triple(SplitMix64 &rng, int n, int m1, int m2, int m3) {
    auto white = [&](int m) {
        std::set<std::pair<int, int>> seen;
        std::vector<std::pair<int, int>> es;
        while (static_cast<int>(es.size()) < m) {
            int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (seen.insert({u, v}).second) es.emplace_back(u, v);
        }
        return es;
    };
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> yellow;
    while (static_cast<int>(yellow.size()) < m3) {
        const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int w = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (seen.insert({u, w}).second) yellow.emplace_back(u, w);
    }
    return Triple(Graph::from_edges(n, white(m1)), Graph::from_edges(n, white(m2)), yellow);
}

// Mixed-density triple: edge counts drawn from the rng, yellow included.
inline Triple random_mixed_triple(SplitMix64 &rng, int n) {
    const int max_edges = n * (n - 1) / 2;
    const int m1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges + 1)));
    const int m2 = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges + 1)));
    const int m3 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1)));
    return random_triple(rng, n, m1, m2, m3);
}

} // namespace gt::test
