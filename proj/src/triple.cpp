#include "gt/triple.hpp"

#include <algorithm>
#include <string>

namespace gt {

Triple::Triple(Graph g1, Graph g2, const std::vector<std::pair<int, int>> &yellow_edges)
    : g1_(std::move(g1)), g2_(std::move(g2)) {
    if (g1_.order() != g2_.order())
        throw Error(ErrorKind::IndexOutOfRange, "triple sides have different orders");
    const int n = g1_.order();
    yellow1_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    yellow2_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (auto [u, w] : yellow_edges) {
        if (u < 0 || u >= n || w < 0 || w >= n)
            throw Error(ErrorKind::IndexOutOfRange,
                        "yellow edge (" + std::to_string(u) + "," + std::to_string(w) + ") out of range");
        if (yellow1_[u].test(w))
            throw Error(ErrorKind::DuplicateEdge,
                        "duplicate yellow edge (" + std::to_string(u) + "," + std::to_string(w) + ")");
        yellow1_[u].set(w);
        yellow2_[w].set(u);
    }
}

int Triple::yellow_count() const {
    std::size_t total = 0;
    for (const auto &row : yellow1_) total += row.count();
    return static_cast<int>(total);
}

std::vector<std::pair<int, int>> Triple::yellow_edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < order(); ++u)
        for (std::size_t w = yellow1_[u].find_first(); w < yellow1_[u].size();
             w = yellow1_[u].find_next(w))
            es.emplace_back(u, static_cast<int>(w));
    return es;
}

TripleStats triple_stats(const Triple &t) {
    TripleStats s;
    s.e1 = t.g1().edge_count();
    s.e2 = t.g2().edge_count();
    s.e3 = t.yellow_count();
    s.delta1 = t.g1().max_degree();
    s.delta2 = t.g2().max_degree();
    for (int v = 0; v < t.order(); ++v) {
        s.delta3_1 = std::max(s.delta3_1, static_cast<long long>(t.yellow_degree(1, v)));
        s.delta3_2 = std::max(s.delta3_2, static_cast<long long>(t.yellow_degree(2, v)));
    }
    s.delta3 = std::max(s.delta3_1, s.delta3_2);
    s.d1_cap = std::max(s.delta1, s.delta3_1);
    s.d2_cap = std::max(s.delta2, s.delta3_2);
    s.script_d = std::max(s.delta1 + std::max(s.delta3_2 - 4, 0LL),
                          s.delta2 + std::max(s.delta3_1 - 4, 0LL));
    s.f_value = s.e1 + s.e2 + s.e3 + s.script_d;
    return s;
}

long long f_delta(const Triple &t1, const Triple &t2) {
    return triple_stats(t1).f_value - triple_stats(t2).f_value;
}

long long shared_degree_x3(const Triple &t, int side, int v) {
    const Graph &g = t.side(side);
    if (v < 0 || v >= g.order())
        throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    const long long dw = g.degree(v);
    long long heavy = 0;  // white neighbors with white degree >= 15
    const Bitset &nbrs = g.neighbors(v);
    for (std::size_t x = nbrs.find_first(); x < nbrs.size(); x = nbrs.find_next(x))
        if (g.degree(static_cast<int>(x)) >= constants::kK) ++heavy;
    const long long light = dw - heavy;
    const long long white_x3 = (dw < constants::kK) ? 3 * dw + 2 * heavy : 3 * dw - 2 * light;
    return white_x3 + 3 * t.yellow_degree(side, v);
}

namespace {

struct NbrView {
    // Total-degree lookup and neighborhood iteration over global ids
    // (0..n-1 side 1, n..2n-1 side 2).
    const Triple &t;
    int n;

    int side_of(int gid) const { return gid < n ? 1 : 2; }
    int local(int gid) const { return gid < n ? gid : gid - n; }

    int degree(int gid) const { return t.total_degree(side_of(gid), local(gid)); }

    std::vector<int> neighbors(int gid) const {
        std::vector<int> out;
        const int s = side_of(gid), v = local(gid);
        const int white_base = (s == 1) ? 0 : n;
        const int cross_base = (s == 1) ? n : 0;
        const Bitset &white = t.side(s).neighbors(v);
        for (std::size_t x = white.find_first(); x < white.size(); x = white.find_next(x))
            out.push_back(white_base + static_cast<int>(x));
        const Bitset &yellow = (s == 1) ? t.yellow_row1(v) : t.yellow_row2(v);
        for (std::size_t x = yellow.find_first(); x < yellow.size(); x = yellow.find_next(x))
            out.push_back(cross_base + static_cast<int>(x));
        std::sort(out.begin(), out.end());
        return out;
    }
};

} // namespace

std::vector<VertexClass> classify_vertices(const Triple &t) {
    const int n = t.order();
    NbrView view{t, n};

    std::vector<int> deg(static_cast<std::size_t>(2 * n));
    for (int g = 0; g < 2 * n; ++g) deg[static_cast<std::size_t>(g)] = view.degree(g);

    auto is_weak = [&](int gid) {
        const int d = deg[static_cast<std::size_t>(gid)];
        if (d == 1) return true;
        if (d != 2) return false;
        for (int x : view.neighbors(gid))
            if (deg[static_cast<std::size_t>(x)] == 2) return true;
        return false;
    };

    std::vector<bool> weak(static_cast<std::size_t>(2 * n));
    for (int g = 0; g < 2 * n; ++g) weak[static_cast<std::size_t>(g)] = is_weak(g);

    std::vector<VertexClass> out(static_cast<std::size_t>(2 * n));
    for (int g = 0; g < 2 * n; ++g) {
        VertexClass &c = out[static_cast<std::size_t>(g)];
        c.side = view.side_of(g);
        c.index = view.local(g);
        c.weak = weak[static_cast<std::size_t>(g)];
        const auto nbrs = view.neighbors(g);
        for (int x : nbrs) {
            if (weak[static_cast<std::size_t>(x)]) c.sponsor_of.push_back(x);
            if (deg[static_cast<std::size_t>(x)] == 1) c.degree_one_neighbors.push_back(x);
        }
        c.supersponsor = c.sponsor_of.size() >= 2;
        c.donor = (c.side == 1) && c.degree_one_neighbors.size() >= 2;
        if (c.weak) {
            // s(u): recorded only when exactly one neighbor has degree >= 3.
            int found = -1, count = 0;
            for (int x : nbrs)
                if (deg[static_cast<std::size_t>(x)] >= 3) {
                    found = x;
                    ++count;
                }
            if (count == 1) c.sponsor = found;
        }
    }
    return out;
}

} // namespace gt
