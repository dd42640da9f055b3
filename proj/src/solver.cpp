#include "gt/solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gt {

namespace {

void require_permutation(int n, const PackingMap &f) {
    if (static_cast<int>(f.size()) != n)
        throw Error(ErrorKind::NotAPermutation, "map has length " + std::to_string(f.size()) +
                                                    ", expected " + std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x : f) {
        if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
            throw Error(ErrorKind::NotAPermutation, "map is not a bijection onto 0.." +
                                                        std::to_string(n - 1));
        seen[static_cast<std::size_t>(x)] = true;
    }
}

} // namespace

std::vector<Violation> verify_packing(const Triple &t, const PackingMap &f) {
    const int n = t.order();
    require_permutation(n, f);
    std::vector<Violation> out;
    for (int u = 0; u < n; ++u)
        if (t.yellow(u, f[static_cast<std::size_t>(u)]))
            out.push_back({Violation::Kind::Yellow, u, -1, f[static_cast<std::size_t>(u)], -1});
    for (int u = 0; u < n; ++u) {
        const Bitset &nbrs = t.g1().neighbors(u);
        for (std::size_t v = nbrs.find_next(static_cast<std::size_t>(u)); v < nbrs.size();
             v = nbrs.find_next(v)) {
            const int fu = f[static_cast<std::size_t>(u)];
            const int fv = f[v];
            if (t.g2().adjacent(fu, fv))
                out.push_back({Violation::Kind::White, u, static_cast<int>(v), fu, fv});
        }
    }
    return out;
}

BruteForceResult brute_force_pack(const Triple &t) {
    const int n = t.order();
    if (n > 8)
        throw Error(ErrorKind::TooLarge, "brute force is guarded to n <= 8, got n = " +
                                             std::to_string(n));
    BruteForceResult res;
    PackingMap f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; ok && u < n; ++u) {
            if (t.yellow(u, f[static_cast<std::size_t>(u)])) ok = false;
        }
        for (int u = 0; ok && u < n; ++u) {
            const Bitset &nbrs = t.g1().neighbors(u);
            for (std::size_t v = nbrs.find_next(static_cast<std::size_t>(u)); ok && v < nbrs.size();
                 v = nbrs.find_next(v))
                if (t.g2().adjacent(f[static_cast<std::size_t>(u)], f[v])) ok = false;
        }
        if (ok) {
            if (!res.packing) res.packing = f;
            ++res.count;
        }
    } while (std::next_permutation(f.begin(), f.end()));
    return res;
}

namespace {

struct Solver {
    const Triple &t;
    int n;
    long long budget;  // <= 0: unlimited
    long long nodes = 0;
    bool out_of_budget = false;

    PackingMap assignment;
    std::vector<int> image_class;  // interchangeability class of each image vertex

    explicit Solver(const Triple &triple, long long b) : t(triple), n(triple.order()), budget(b) {
        assignment.assign(static_cast<std::size_t>(n), -1);
        // Two images w, w2 are interchangeable when swapping them is an
        // automorphism of G2 that also preserves every yellow constraint.
        // While both are still unused, their subtrees are isomorphic, so only
        // one representative per class is tried at any node.
        image_class.assign(static_cast<std::size_t>(n), -1);
        int classes = 0;
        for (int w = 0; w < n; ++w) {
            if (image_class[static_cast<std::size_t>(w)] >= 0) continue;
            image_class[static_cast<std::size_t>(w)] = classes;
            for (int w2 = w + 1; w2 < n; ++w2) {
                if (image_class[static_cast<std::size_t>(w2)] >= 0) continue;
                bool same = true;
                for (int z = 0; same && z < n; ++z) {
                    if (z == w || z == w2) continue;
                    if (t.g2().adjacent(w, z) != t.g2().adjacent(w2, z)) same = false;
                }
                for (int u = 0; same && u < n; ++u)
                    if (t.yellow(u, w) != t.yellow(u, w2)) same = false;
                if (same) image_class[static_cast<std::size_t>(w2)] = classes;
            }
            ++classes;
        }
    }

    // Minimum-remaining-values: the unassigned vertex with the fewest images
    // left, breaking ties toward higher total degree, then lower index.
    int pick_variable(const std::vector<Bitset> &cand) const {
        int best = -1;
        std::size_t best_count = 0;
        for (int u = 0; u < n; ++u) {
            if (assignment[static_cast<std::size_t>(u)] >= 0) continue;
            const std::size_t cnt = cand[static_cast<std::size_t>(u)].count();
            if (best < 0 || cnt < best_count ||
                (cnt == best_count && t.total_degree(1, u) > t.total_degree(1, best))) {
                best = u;
                best_count = cnt;
            }
        }
        return best;
    }

    bool run(std::vector<Bitset> cand, int depth) {
        if (depth == n) return true;
        const int u = pick_variable(cand);
        const Bitset &avail = cand[static_cast<std::size_t>(u)];
        std::vector<char> tried(static_cast<std::size_t>(n), 0);
        for (std::size_t w = avail.find_first(); w < avail.size(); w = avail.find_next(w)) {
            char &seen = tried[static_cast<std::size_t>(image_class[w])];
            if (seen) continue;  // interchangeable with an image already tried here
            seen = 1;
            ++nodes;
            if (budget > 0 && nodes > budget) {
                out_of_budget = true;
                return false;
            }
            std::vector<Bitset> next = cand;
            bool dead = false;
            const Bitset &white_nbrs = t.g1().neighbors(u);
            for (int v = 0; v < n; ++v) {
                if (v == u || assignment[static_cast<std::size_t>(v)] >= 0) continue;
                Bitset &cv = next[static_cast<std::size_t>(v)];
                cv.reset(w);
                if (white_nbrs.test(static_cast<std::size_t>(v)))
                    cv.subtract(t.g2().neighbors(static_cast<int>(w)));
                if (cv.none()) {
                    dead = true;
                    break;
                }
            }
            if (!dead) {
                assignment[static_cast<std::size_t>(u)] = static_cast<int>(w);
                if (run(std::move(next), depth + 1)) return true;
                assignment[static_cast<std::size_t>(u)] = -1;
                if (out_of_budget) return false;
            }
        }
        return false;
    }

    SolveResult solve() {
        SolveResult res;
        std::vector<Bitset> cand(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        for (int u = 0; u < n; ++u) {
            cand[static_cast<std::size_t>(u)].set_all();
            cand[static_cast<std::size_t>(u)].subtract(t.yellow_row1(u));
            if (n > 0 && cand[static_cast<std::size_t>(u)].none()) {
                res.status = SolveStatus::NoPacking;
                res.nodes = nodes;
                return res;
            }
        }
        const bool found = run(std::move(cand), 0);
        res.nodes = nodes;
        if (found) {
            res.status = SolveStatus::Packs;
            res.packing = assignment;
        } else {
            res.status = out_of_budget ? SolveStatus::BudgetExceeded : SolveStatus::NoPacking;
        }
        return res;
    }
};

} // namespace

SolveResult solve_pack_limited(const Triple &t, long long budget) {
    Solver s(t, budget);
    return s.solve();
}

std::optional<PackingMap> solve_pack(const Triple &t) {
    SolveResult res = solve_pack_limited(t, 0);
    return res.packing;
}

PackingMap ContractResult::lift(const PackingMap &inner) const {
    const int n = static_cast<int>(inner.size()) + 1;
    PackingMap f(static_cast<std::size_t>(n));
    f[static_cast<std::size_t>(x)] = y;
    for (int u = 0; u < n; ++u) {
        if (u == x) continue;
        const int cu = u < x ? u : u - 1;
        const int w = inner[static_cast<std::size_t>(cu)];
        f[static_cast<std::size_t>(u)] = w < y ? w : w + 1;
    }
    return f;
}

ContractResult contract_placement(const Triple &t, int x, int y) {
    const int n = t.order();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw Error(ErrorKind::IndexOutOfRange, "placement (" + std::to_string(x) + "," +
                                                    std::to_string(y) + ") out of range");
    if (t.yellow(x, y))
        throw Error(ErrorKind::YellowForbidden, "placement (" + std::to_string(x) + "," +
                                                    std::to_string(y) + ") is a yellow edge");

    auto compact = [](int v, int removed) { return v < removed ? v : v - 1; };

    std::vector<std::pair<int, int>> e1, e2, e3;
    for (auto [u, v] : t.g1().edges())
        if (u != x && v != x) e1.emplace_back(compact(u, x), compact(v, x));
    for (auto [u, v] : t.g2().edges())
        if (u != y && v != y) e2.emplace_back(compact(u, y), compact(v, y));

    // Surviving yellow edges, plus N1(x) x N2(y) so that mapping any white
    // neighbor of x onto a white neighbor of y stays forbidden.
    std::vector<Bitset> rows(static_cast<std::size_t>(n - 1), Bitset(static_cast<std::size_t>(n - 1)));
    for (auto [u, w] : t.yellow_edges())
        if (u != x && w != y) rows[static_cast<std::size_t>(compact(u, x))].set(
            static_cast<std::size_t>(compact(w, y)));
    const Bitset &nx = t.g1().neighbors(x);
    const Bitset &ny = t.g2().neighbors(y);
    for (std::size_t u = nx.find_first(); u < nx.size(); u = nx.find_next(u)) {
        if (static_cast<int>(u) == x) continue;
        for (std::size_t w = ny.find_first(); w < ny.size(); w = ny.find_next(w)) {
            if (static_cast<int>(w) == y) continue;
            rows[static_cast<std::size_t>(compact(static_cast<int>(u), x))].set(
                static_cast<std::size_t>(compact(static_cast<int>(w), y)));
        }
    }
    for (int u = 0; u < n - 1; ++u)
        for (std::size_t w = rows[static_cast<std::size_t>(u)].find_first();
             w < rows[static_cast<std::size_t>(u)].size();
             w = rows[static_cast<std::size_t>(u)].find_next(w))
            e3.emplace_back(u, static_cast<int>(w));

    return ContractResult{
        Triple(Graph::from_edges(n - 1, e1), Graph::from_edges(n - 1, e2), e3), x, y};
}

PackingMap PlacementChain::lift(const PackingMap &inner) const {
    PackingMap f = inner;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) f = it->lift(f);
    return f;
}

PlacementChain extend_by_placements(const Triple &t,
                                    const std::vector<std::pair<int, int>> &placements) {
    PlacementChain chain{t, {}};
    // Placements are given in the coordinates of `t`; track deletions to
    // translate each one into the current triple's index space.
    std::vector<int> deleted1, deleted2;
    auto current_index = [](int orig, const std::vector<int> &deleted) {
        int shift = 0;
        for (int d : deleted) {
            if (d == orig) return -1;
            if (d < orig) ++shift;
        }
        return orig - shift;
    };
    for (std::size_t i = 0; i < placements.size(); ++i) {
        auto [x, y] = placements[i];
        const int cx = current_index(x, deleted1);
        const int cy = current_index(y, deleted2);
        if (cx < 0 || cy < 0)
            throw Error(ErrorKind::IndexOutOfRange,
                        "placement #" + std::to_string(i) + " reuses a deleted vertex");
        try {
            ContractResult step = contract_placement(chain.result, cx, cy);
            chain.result = step.t;
            chain.steps.push_back(std::move(step));
        } catch (const Error &e) {
            throw Error(e.kind(), "placement #" + std::to_string(i) + ": " + e.what());
        }
        deleted1.push_back(x);
        deleted2.push_back(y);
    }
    return chain;
}

} // namespace gt
