#include "gt/families.hpp"

#include <string>

namespace gt {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Appends a clique on `size` fresh vertices; returns the next free index.
int add_clique(EdgeList &es, int base, int size) {
    for (int u = 0; u < size; ++u)
        for (int v = u + 1; v < size; ++v) es.emplace_back(base + u, base + v);
    return base + size;
}

Graph triangle_plus_star(int n) {
    EdgeList es;
    int next = add_clique(es, 0, 3);
    const int center = next;
    for (int leaf = center + 1; leaf < n; ++leaf) es.emplace_back(center, leaf);
    return Graph::from_edges(n, es);
}

} // namespace

Triple gen_zak_sharp(int n) {
    if (n < 8) throw Error(ErrorKind::BadParam, "zak-sharp requires n >= 8");
    return Triple(triangle_plus_star(n), triangle_plus_star(n), {});
}

Triple gen_small_counterexample() {
    EdgeList e1;
    int next = 0;
    for (int c = 0; c < 4; ++c) next = add_clique(e1, next, 3);
    EdgeList e2;
    add_clique(e2, 0, 5);
    return Triple(Graph::from_edges(12, e1), Graph::from_edges(12, e2), {});
}

Triple gen_be_exception(int k) {
    // Component counts (isolated vertices, then cliques) per side, in the
    // order the pairs are listed.
    struct Side {
        int isolated;
        std::vector<int> cliques;
    };
    struct Pair {
        int n;
        Side a, b;
    };
    static const Pair pairs[7] = {
        {4, {0, {2, 2}}, {1, {3}}},        // {2K2, K1 u K3}
        {5, {2, {3}}, {0, {2, 3}}},        // {2K1 u K3, K2 u K3}
        {6, {0, {2, 2, 2}}, {2, {4}}},     // {3K2, 2K1 u K4}
        {6, {3, {3}}, {0, {3, 3}}},        // {3K1 u K3, 2K3}
        {7, {0, {2, 2, 3}}, {3, {4}}},     // {2K2 u K3, 3K1 u K4}
        {8, {4, {4}}, {0, {2, 3, 3}}},     // {4K1 u K4, K2 u 2K3}
        {9, {5, {4}}, {0, {3, 3, 3}}},     // {5K1 u K4, 3K3}
    };
    if (k < 1 || k > 7) throw Error(ErrorKind::BadParam, "exception index must be 1..7");
    const Pair &p = pairs[k - 1];
    auto build = [&](const Side &s) {
        EdgeList es;
        int next = s.isolated;
        for (int size : s.cliques) next = add_clique(es, next, size);
        return Graph::from_edges(p.n, es);
    };
    return Triple(build(p.a), build(p.b), {});
}

Triple gen_star_cycle(int n) {
    if (n < 3) throw Error(ErrorKind::BadParam, "star-cycle requires n >= 3");
    EdgeList e1;
    for (int leaf = 1; leaf <= n - 2; ++leaf) e1.emplace_back(0, leaf);
    EdgeList e2;
    for (int v = 0; v < n; ++v) e2.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    return Triple(Graph::from_edges(n, e1), Graph::from_edges(n, e2), {});
}

Triple gen_matching_biclique(int k) {
    if (k < 1) throw Error(ErrorKind::BadParam, "matching-biclique requires k >= 1");
    const int n = 2 * k;
    EdgeList e1;
    for (int u = 0; u < k; ++u)
        for (int v = k; v < n; ++v) e1.emplace_back(u, v);
    EdgeList e2;
    for (int i = 0; i < k; ++i) e2.emplace_back(2 * i, 2 * i + 1);
    return Triple(Graph::from_edges(n, e1), Graph::from_edges(n, e2), {});
}

Triple gen_family(const std::string &name, int param) {
    if (name == "zak-sharp") return gen_zak_sharp(param);
    if (name == "small-cx") return gen_small_counterexample();
    if (name == "be-exception") return gen_be_exception(param);
    if (name == "star-cycle") return gen_star_cycle(param);
    if (name == "matching-biclique") return gen_matching_biclique(param);
    throw Error(ErrorKind::BadParam, "unknown family '" + name + "'");
}

} // namespace gt
