#include "gt/solver.hpp"

#include "gt/io.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace gt;

TEST_CASE("verify_packing reports every violation in order") {
    SUBCASE("no white edges in G1, no yellow: identity is valid") {
        const Triple t(Graph::empty(4), test::cycle(4), {});
        CHECK(verify_packing(t, {0, 1, 2, 3}).empty());
    }
    SUBCASE("white edge onto white edge") {
        const Triple t(Graph::from_edges(2, {{0, 1}}), Graph::from_edges(2, {{0, 1}}), {});
        const auto v = verify_packing(t, {0, 1});
        REQUIRE(v.size() == 1);
        CHECK(v[0].kind == Violation::Kind::White);
        CHECK(v[0].u == 0);
        CHECK(v[0].v == 1);
    }
    SUBCASE("yellow violation") {
        const Triple t(Graph::empty(2), Graph::empty(2), {{0, 0}});
        const auto v = verify_packing(t, {0, 1});
        REQUIRE(v.size() == 1);
        CHECK(v[0].kind == Violation::Kind::Yellow);
        CHECK(v[0].u == 0);
        CHECK(v[0].fu == 0);
    }
    SUBCASE("non-permutations are rejected") {
        const Triple t(Graph::empty(3), Graph::empty(3), {});
        CHECK_THROWS_AS(verify_packing(t, {0, 0, 1}), Error);
        CHECK_THROWS_AS(verify_packing(t, {0, 1}), Error);
        CHECK_THROWS_AS(verify_packing(t, {0, 1, 5}), Error);
    }
}

TEST_CASE("brute force oracle on tiny instances") {
    SUBCASE("P3 vs P3 cannot pack") {
        const Triple t(test::path(3), test::path(3), {});
        const auto res = brute_force_pack(t);
        CHECK_FALSE(res.packing.has_value());
        CHECK(res.count == 0);
    }
    SUBCASE("K2+K1 vs K2+K1 packs") {
        const Triple t(Graph::from_edges(3, {{0, 1}}), Graph::from_edges(3, {{0, 1}}), {});
        const auto res = brute_force_pack(t);
        REQUIRE(res.packing.has_value());
        CHECK(verify_packing(t, *res.packing).empty());
        CHECK(res.count > 0);
    }
    SUBCASE("3K2 vs K33 do not pack") {
        const Triple t(
            Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}}),
            Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}),
            {});
        CHECK_FALSE(brute_force_pack(t).packing.has_value());
    }
    SUBCASE("n > 8 is rejected") {
        CHECK_THROWS_AS(brute_force_pack(Triple(Graph::empty(9), Graph::empty(9), {})), Error);
    }
}

TEST_CASE("solver returns verified packings and is complete vs the oracle") {
    SplitMix64 rng(101);
    int packable = 0, total = 0;
    for (int rep = 0; rep < 2000; ++rep) {
        const int n = 3 + static_cast<int>(rng.below(4));  // 3..6
        const Triple t = test::random_mixed_triple(rng, n);
        const auto fast = solve_pack(t);
        const auto slow = brute_force_pack(t);
        ++total;
        CHECK(fast.has_value() == slow.packing.has_value());
        if (fast) {
            CHECK(verify_packing(t, *fast).empty());
            ++packable;
        }
    }
    // sanity: the corpus exercises both outcomes
    CHECK(packable > 100);
    CHECK(total - packable > 100);
}

TEST_CASE("solver handles the degenerate orders") {
    CHECK(solve_pack(Triple(Graph::empty(0), Graph::empty(0), {})).has_value());
    const Triple blocked(Graph::empty(1), Graph::empty(1), {{0, 0}});
    CHECK_FALSE(solve_pack(blocked).has_value());
}

TEST_CASE("budgeted solve reports exhaustion without an answer") {
    SplitMix64 rng(131);
    const Triple t = test::random_triple(rng, 12, 18, 18, 0);
    const SolveResult res = solve_pack_limited(t, 1);
    CHECK(res.status == SolveStatus::BudgetExceeded);
    CHECK_FALSE(res.packing.has_value());
}

TEST_CASE("packability survives edge deletion") {
    SplitMix64 rng(151);
    int checked = 0;
    for (int rep = 0; rep < 300 && checked < 100; ++rep) {
        const int n = 4 + static_cast<int>(rng.below(3));
        const Triple t = test::random_mixed_triple(rng, n);
        const auto f = solve_pack(t);
        if (!f) continue;
        ++checked;
        // delete one white edge of G1 and one yellow edge, if present
        auto e1 = t.g1().edges();
        if (!e1.empty()) e1.erase(e1.begin() + static_cast<long>(rng.below(e1.size())));
        auto yellow = t.yellow_edges();
        if (!yellow.empty())
            yellow.erase(yellow.begin() + static_cast<long>(rng.below(yellow.size())));
        const Triple smaller(Graph::from_edges(n, e1), t.g2(), yellow);
        CHECK(verify_packing(smaller, *f).empty());
    }
    CHECK(checked == 100);
}

TEST_CASE("contract_placement basics") {
    SUBCASE("isolated endpoints add no yellow edges") {
        const Triple t(Graph::empty(4), Graph::empty(4), {{1, 2}});
        const auto res = contract_placement(t, 0, 0);
        CHECK(res.t.order() == 3);
        CHECK(res.t.yellow_edges() == std::vector<std::pair<int, int>>{{0, 1}});
    }
    SUBCASE("single neighbors produce exactly one yellow edge") {
        const Triple t(Graph::from_edges(3, {{0, 1}}), Graph::from_edges(3, {{1, 2}}), {});
        const auto res = contract_placement(t, 0, 1);
        // N1(0) = {1} -> compacts to 0; N2(1) = {2} -> compacts to 1
        CHECK(res.t.yellow_edges() == std::vector<std::pair<int, int>>{{0, 1}});
        CHECK(res.t.g1().edge_count() == 0);
        CHECK(res.t.g2().edge_count() == 0);
    }
    SUBCASE("yellow placements are forbidden") {
        const Triple t(Graph::empty(2), Graph::empty(2), {{0, 1}});
        CHECK_THROWS_AS(contract_placement(t, 0, 1), Error);
        CHECK_THROWS_AS(contract_placement(t, 0, 5), Error);
    }
}

TEST_CASE("contract extension property against the oracle") {
    SplitMix64 rng(173);
    int lifted = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 3 + static_cast<int>(rng.below(5));  // 3..7
        const Triple t = test::random_mixed_triple(rng, n);
        const int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (t.yellow(x, y)) continue;
        const auto res = contract_placement(t, x, y);
        const auto inner = brute_force_pack(res.t);
        if (!inner.packing) continue;
        const PackingMap f = res.lift(*inner.packing);
        CHECK(verify_packing(t, f).empty());
        ++lifted;
    }
    CHECK(lifted > 300);
}

TEST_CASE("extend_by_placements folds and lifts through the chain") {
    SUBCASE("empty list is the identity") {
        const Triple t(test::path(4), test::cycle(4), {});
        const auto chain = extend_by_placements(t, {});
        CHECK(chain.result == t);
        CHECK(chain.lift({2, 0, 3, 1}) == PackingMap{2, 0, 3, 1});
    }
    SUBCASE("one placement equals contract_placement") {
        const Triple t(test::path(4), test::cycle(4), {});
        const auto chain = extend_by_placements(t, {{1, 2}});
        CHECK(chain.result == contract_placement(t, 1, 2).t);
    }
    SUBCASE("disjoint placements commute up to isomorphism") {
        SplitMix64 rng(191);
        for (int rep = 0; rep < 50; ++rep) {
            const int n = 5 + static_cast<int>(rng.below(3));
            const Triple t = test::random_mixed_triple(rng, n);
            const int x1 = 0, y1 = 1, x2 = 2, y2 = 3;
            if (t.yellow(x1, y1) || t.yellow(x2, y2)) continue;
            // the first contraction would forbid the second placement
            if (t.g1().adjacent(x1, x2) && t.g2().adjacent(y1, y2)) continue;
            const auto ab = extend_by_placements(t, {{x1, y1}, {x2, y2}});
            const auto ba = extend_by_placements(t, {{x2, y2}, {x1, y1}});
            CHECK(serialize_triple(ab.result) == serialize_triple(ba.result));
        }
    }
    SUBCASE("reusing a deleted vertex fails") {
        const Triple t(Graph::empty(4), Graph::empty(4), {});
        CHECK_THROWS_AS(extend_by_placements(t, {{0, 0}, {0, 1}}), Error);
    }
    SUBCASE("chained lift verifies on the original") {
        SplitMix64 rng(211);
        int lifted = 0;
        for (int rep = 0; rep < 200; ++rep) {
            const Triple t = test::random_mixed_triple(rng, 7);
            if (t.yellow(0, 0) || t.yellow(1, 1)) continue;
            if (t.g1().adjacent(0, 1) && t.g2().adjacent(0, 1)) continue;
            const auto chain = extend_by_placements(t, {{0, 0}, {1, 1}});
            const auto inner = brute_force_pack(chain.result);
            if (!inner.packing) continue;
            CHECK(verify_packing(t, chain.lift(*inner.packing)).empty());
            ++lifted;
        }
        CHECK(lifted > 30);
    }
}

TEST_CASE("label invariance of packability") {
    SplitMix64 rng(229);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 5;
        const Triple t = test::random_mixed_triple(rng, n);
        std::vector<int> p1 = {4, 2, 0, 1, 3}, p2 = {1, 3, 4, 0, 2};
        std::vector<std::pair<int, int>> yellow;
        for (auto [u, w] : t.yellow_edges()) yellow.emplace_back(p1[u], p2[w]);
        const Triple r(t.g1().relabeled(p1), t.g2().relabeled(p2), yellow);
        CHECK(solve_pack(t).has_value() == solve_pack(r).has_value());
    }
}
