#include "gt/theorems.hpp"

#include "gt/families.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>

namespace gt {

std::string Verdict::to_json() const {
    nlohmann::json j;
    j["theorem"] = theorem;
    j["hypothesis_holds"] = hypothesis_holds;
    j["guarantees_packing"] = guarantees_packing;
    if (exception)
        j["exception"] = *exception;
    else
        j["exception"] = nullptr;
    j["margin"] = margin;
    return j.dump();
}

namespace {

// Folds condition slacks per the Verdict contract: the last slack passed is
// the defining inequality's; earlier ones are side conditions.
struct MarginAcc {
    long long worst_violation = 0;
    bool ok = true;
    long long main_slack = 0;

    void side(long long slack) {
        if (slack < 0) {
            ok = false;
            worst_violation = std::min(worst_violation, slack);
        }
    }
    void main(long long slack) {
        main_slack = slack;
        side(slack);
    }
    long long margin() const { return ok ? main_slack : worst_violation; }
};

bool is_perfect_matching(const Graph &g) {
    if (g.order() == 0 || g.order() % 2 != 0) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 1) return false;
    return true;
}

bool is_balanced_biclique(const Graph &g) {
    const int n = g.order();
    if (n == 0 || n % 2 != 0) return false;
    // Part B: neighbors of vertex 0; part A: the rest (including 0).
    const Bitset &b = g.neighbors(0);
    if (static_cast<int>(b.count()) != n / 2) return false;
    Bitset a(static_cast<std::size_t>(n));
    a.set_all();
    a.subtract(b);
    for (int v = 0; v < n; ++v) {
        Bitset expect = b.test(static_cast<std::size_t>(v)) ? a : b;
        if (!(g.neighbors(v) == expect)) return false;
    }
    return true;
}

} // namespace

int max_clique_size(const Graph &g) {
    const int n = g.order();
    if (n > 32) throw Error(ErrorKind::TooLarge, "max clique guarded to n <= 32");
    if (n == 0) return 0;

    // Order vertices by descending degree once; branch and bound with a
    // greedy coloring upper bound.
    std::vector<int> vertices(static_cast<std::size_t>(n));
    std::iota(vertices.begin(), vertices.end(), 0);
    std::stable_sort(vertices.begin(), vertices.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    int best = 0;

    // Greedy coloring of `cands` (as vertex list); returns vertices ordered by
    // color with their color numbers, used as per-branch bound.
    auto expand = [&](auto &&self, std::vector<int> &cands, int depth) -> void {
        if (cands.empty()) {
            best = std::max(best, depth);
            return;
        }
        std::vector<int> color(cands.size());
        std::vector<std::vector<int>> classes;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const int v = cands[i];
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int u : classes[c])
                    if (g.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
            color[i] = static_cast<int>(c) + 1;
        }
        // Re-order candidates by ascending color; branch from the back.
        std::vector<std::pair<int, int>> by_color;
        for (std::size_t i = 0; i < cands.size(); ++i) by_color.emplace_back(color[i], cands[i]);
        std::stable_sort(by_color.begin(), by_color.end(),
                         [](const auto &a, const auto &b) { return a.first < b.first; });
        while (!by_color.empty()) {
            auto [c, v] = by_color.back();
            if (depth + c <= best) return;
            by_color.pop_back();
            std::vector<int> next;
            for (auto [c2, u] : by_color)
                if (g.adjacent(u, v)) next.push_back(u);
            self(self, next, depth + 1);
        }
    };
    expand(expand, vertices, 0);
    return best;
}

Verdict check_sauer_spencer_list(const Triple &t) {
    const TripleStats s = triple_stats(t);
    const long long n = t.order();
    Verdict v;
    v.theorem = "sauer-spencer-list";
    v.margin = n - 2 * (s.delta1 * s.delta2 + s.delta3);
    v.hypothesis_holds = v.margin >= 0;
    if (v.hypothesis_holds && s.delta3 == 0) {
        auto exception_with = [&](const Graph &matching, const Graph &other, const char *tag)
            -> std::optional<std::string> {
            if (!is_perfect_matching(matching)) return std::nullopt;
            if (is_balanced_biclique(other) && (n / 2) % 2 == 1)
                return std::string(tag) + " is a perfect matching, other side is K_{n/2,n/2} with n/2 odd";
            if (max_clique_size(other) >= n / 2 + 1)
                return std::string(tag) + " is a perfect matching, other side contains K_{n/2+1}";
            return std::nullopt;
        };
        v.exception = exception_with(t.g1(), t.g2(), "G1");
        if (!v.exception) v.exception = exception_with(t.g2(), t.g1(), "G2");
    }
    v.guarantees_packing = v.hypothesis_holds && !v.exception;
    return v;
}

bool is_isomorphic(const Graph &g, const Graph &h) {
    if (g.order() != h.order()) return false;
    const int n = g.order();
    if (n > 12) throw Error(ErrorKind::TooLarge, "isomorphism test guarded to n <= 12");
    if (g.degree_sequence() != h.degree_sequence()) return false;

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto place = [&](auto &&self, int u) -> bool {
        if (u == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (g.degree(u) != h.degree(w)) continue;
            bool ok = true;
            for (int u2 = 0; u2 < u && ok; ++u2)
                if (g.adjacent(u, u2) != h.adjacent(w, map[static_cast<std::size_t>(u2)])) ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(u)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (self(self, u + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    };
    return place(place, 0);
}

Verdict check_be_list(const Triple &t) {
    const TripleStats s = triple_stats(t);
    const long long n = t.order();
    Verdict v;
    v.theorem = "bollobas-eldridge-list";
    MarginAcc acc;
    acc.side(n - 2 - s.delta1);
    acc.side(n - 2 - s.delta2);
    acc.side(n - 1 - s.delta3);
    acc.main(2 * n - 3 - (s.e1 + s.e2 + s.e3));
    v.hypothesis_holds = acc.ok;
    v.margin = acc.margin();
    if (v.hypothesis_holds && n <= 12) {
        for (int k = 1; k <= 7 && !v.exception; ++k) {
            const Triple ex = gen_be_exception(k);
            if (ex.order() != n) continue;
            if ((is_isomorphic(t.g1(), ex.g1()) && is_isomorphic(t.g2(), ex.g2())) ||
                (is_isomorphic(t.g1(), ex.g2()) && is_isomorphic(t.g2(), ex.g1())))
                v.exception = "excluded pair #" + std::to_string(k);
        }
    }
    v.guarantees_packing = v.hypothesis_holds && !v.exception;
    return v;
}

Verdict check_zak_conjecture(const Triple &t) {
    if (t.yellow_count() > 0)
        throw Error(ErrorKind::YellowNotAllowed, "zak-conj applies to plain pairs (e3 = 0)");
    const TripleStats s = triple_stats(t);
    const long long n = t.order();
    Verdict v;
    v.theorem = "zak-conjecture";
    MarginAcc acc;
    acc.side(n - 2 - s.delta1);
    acc.side(n - 2 - s.delta2);
    acc.main(3 * n - 7 - (s.e1 + s.e2 + std::max(s.delta1, s.delta2)));
    v.hypothesis_holds = acc.ok;
    v.margin = acc.margin();
    v.guarantees_packing = false;  // conjecture, not a theorem
    return v;
}

namespace {

using int128 = __int128;

// Largest s with (3n - 65 - s)^4 >= 96^4 n^3, i.e. the exact integer
// threshold of s <= 3n - 96 n^{3/4} - 65; LLONG_MIN-ish when none exists.
long long zak_threshold(long long n) {
    const int128 rhs = int128(96) * 96 * 96 * 96 * int128(n) * n * n;
    // binary search the smallest q >= 0 with q^4 >= rhs (q = 3n - 65 - s)
    long long lo = 0, hi = 3 * n + 1;
    while (lo < hi) {
        const long long mid = lo + (hi - lo) / 2;
        const int128 m2 = int128(mid) * mid;
        if (m2 * m2 >= rhs)
            hi = mid;
        else
            lo = mid + 1;
    }
    return 3 * n - 65 - lo;
}

} // namespace

Verdict check_zak_theorem_arith(long long n, long long s) {
    Verdict v;
    v.theorem = "zak-theorem";
    MarginAcc acc;
    acc.main(zak_threshold(n) - s);
    v.hypothesis_holds = acc.ok;
    v.margin = acc.margin();
    v.guarantees_packing = v.hypothesis_holds;
    return v;
}

Verdict check_zak_theorem(const Triple &t) {
    if (t.yellow_count() > 0)
        throw Error(ErrorKind::YellowNotAllowed, "zak-thm applies to plain pairs (e3 = 0)");
    const TripleStats st = triple_stats(t);
    const long long n = t.order();
    const long long s = st.e1 + st.e2 + std::max(st.delta1, st.delta2);
    Verdict v;
    v.theorem = "zak-theorem";
    MarginAcc acc;
    acc.side(n - 2 - st.delta1);
    acc.side(n - 2 - st.delta2);
    acc.main(zak_threshold(n) - s);
    v.hypothesis_holds = acc.ok;
    v.margin = acc.margin();
    v.guarantees_packing = v.hypothesis_holds;
    return v;
}

Verdict check_zak_52_arith(long long n, long long s) {
    Verdict v;
    v.theorem = "zak-5/2";
    MarginAcc acc;
    acc.side(n - 10'000'000'000LL);
    acc.main(5 * n - 4 - 2 * s - 1);  // strict: 2s < 5n - 4
    v.hypothesis_holds = acc.ok;
    v.margin = acc.margin();
    v.guarantees_packing = v.hypothesis_holds;
    return v;
}

Verdict check_zak_52(const Triple &t) {
    if (t.yellow_count() > 0)
        throw Error(ErrorKind::YellowNotAllowed, "zak-52 applies to plain pairs (e3 = 0)");
    const TripleStats st = triple_stats(t);
    return check_zak_52_arith(t.order(), st.e1 + st.e2 + std::max(st.delta1, st.delta2));
}

Verdict check_main_theorem_arith(long long n, long long s, MainVariant variant) {
    Verdict v;
    v.theorem = variant == MainVariant::Pair ? "main-pair" : "main-triple";
    const long long c = variant == MainVariant::Pair ? constants::kCMain : constants::kCDetailed;
    MarginAcc acc;
    acc.main(3 * n - c - s);
    v.hypothesis_holds = acc.ok;
    v.margin = acc.margin();
    v.guarantees_packing = v.hypothesis_holds;
    return v;
}

Verdict check_main_theorem(const Triple &t, MainVariant variant) {
    const TripleStats st = triple_stats(t);
    const long long n = t.order();
    if (variant == MainVariant::Pair && st.e3 > 0)
        throw Error(ErrorKind::YellowNotAllowed, "pair variant requires e3 = 0");
    Verdict v;
    v.theorem = variant == MainVariant::Pair ? "main-pair" : "main-triple";
    const long long c = variant == MainVariant::Pair ? constants::kCMain : constants::kCDetailed;
    MarginAcc acc;
    acc.side(n - 2 - st.delta1);
    acc.side(n - 2 - st.delta2);
    if (variant == MainVariant::TripleForm) acc.side(n - 1 - st.delta3);
    const long long lhs = variant == MainVariant::Pair
                              ? st.e1 + st.e2 + std::max(st.delta1, st.delta2)
                              : st.f_value;
    acc.main(3 * n - c - lhs);
    v.hypothesis_holds = acc.ok;
    v.margin = acc.margin();
    v.guarantees_packing = v.hypothesis_holds;
    return v;
}

ImpliedResult implied_packable(const Triple &t) {
    ImpliedResult res;
    const bool plain = t.yellow_count() == 0;
    std::vector<Verdict> verdicts;
    verdicts.push_back(check_sauer_spencer_list(t));
    verdicts.push_back(check_be_list(t));
    if (plain) {
        verdicts.push_back(check_zak_52(t));
        verdicts.push_back(check_zak_theorem(t));
        verdicts.push_back(check_main_theorem(t, MainVariant::Pair));
    } else {
        verdicts.push_back(check_main_theorem(t, MainVariant::TripleForm));
    }
    for (auto &v : verdicts) {
        if (v.guarantees_packing && !res.guarantee) res.guarantee = v;
        res.all.push_back(std::move(v));
    }
    return res;
}

} // namespace gt
