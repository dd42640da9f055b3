// End-to-end acceptance suite.  Each test case prints one PASS/FAIL line on
// top of its doctest assertions, so a full run reads as a checklist.

#include "gt/families.hpp"
#include "gt/io.hpp"
#include "gt/search.hpp"
#include "gt/solver.hpp"
#include "gt/theorems.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cstdio>

using namespace gt;

namespace {

struct Criterion {
    const char *name;
    bool ok = true;

    void require(bool cond) {
        ok = ok && cond;
        CHECK(cond);
    }
    ~Criterion() { std::printf("%s: %s\n", ok ? "PASS" : "FAIL", name); }
};

} // namespace

TEST_CASE("criterion 1: small counterexample regression") {
    Criterion c{"criterion 1: small counterexample regression"};
    const Triple t = gen_small_counterexample();
    const TripleStats s = triple_stats(t);
    c.require(s.e1 == 12);
    c.require(s.e2 == 10);
    c.require(std::max(s.delta1, s.delta2) == 4);
    c.require(s.e1 + s.e2 + std::max(s.delta1, s.delta2) == 26);
    c.require(26 == 3 * t.order() - 10);
    c.require(!solve_pack(t).has_value());
    c.require(check_zak_conjecture(t).hypothesis_holds);
}

TEST_CASE("criterion 2: sharp family regression") {
    Criterion c{"criterion 2: sharp family regression"};
    for (int n : {8, 10, 12, 16}) {
        const Triple t = gen_zak_sharp(n);
        const TripleStats s = triple_stats(t);
        c.require(s.e1 + s.e2 + std::max(s.delta1, s.delta2) == 3 * n - 6);
        c.require(!solve_pack(t).has_value());
    }
}

TEST_CASE("criterion 3: bollobas-eldridge exception pairs") {
    Criterion c{"criterion 3: bollobas-eldridge exception pairs"};
    for (int k = 1; k <= 7; ++k) {
        const Triple t = gen_be_exception(k);
        const TripleStats s = triple_stats(t);
        c.require(s.e1 + s.e2 == 2 * t.order() - 3);
        c.require(!solve_pack(t).has_value());
    }
}

TEST_CASE("criterion 4: solver equals oracle on 2000 mixed triples") {
    Criterion c{"criterion 4: solver equals oracle on 2000 mixed triples"};
    SplitMix64 rng(0xACCE5501);
    int mismatches = 0;
    for (int rep = 0; rep < 2000; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(5));  // 2..6
        const Triple t = test::random_mixed_triple(rng, n);
        if (solve_pack(t).has_value() != brute_force_pack(t).packing.has_value()) ++mismatches;
    }
    c.require(mismatches == 0);
}

TEST_CASE("criterion 5: strict sauer-spencer instances always pack") {
    Criterion c{"criterion 5: strict sauer-spencer instances always pack"};
    SplitMix64 rng(0xACCE5502);
    for (int n = 6; n <= 12; ++n) {
        int accepted = 0, failures = 0;
        while (accepted < 500) {
            const int m1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const int m2 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2)));
            const int m3 = static_cast<int>(rng.below(2));
            const Triple t = test::random_triple(rng, n, m1, m2, m3);
            const TripleStats s = triple_stats(t);
            if (2 * s.delta1 * s.delta2 + 2 * s.delta3 > n - 1) continue;
            ++accepted;
            const auto f = solve_pack(t);
            if (!f || !verify_packing(t, *f).empty()) ++failures;
        }
        c.require(failures == 0);
    }
}

TEST_CASE("criterion 6: bollobas-eldridge instances always pack") {
    Criterion c{"criterion 6: bollobas-eldridge instances always pack"};
    SplitMix64 rng(0xACCE5503);
    for (int n = 6; n <= 12; ++n) {
        int accepted = 0, failures = 0;
        while (accepted < 500) {
            const int total = 2 * n - 3;
            const int m3 = static_cast<int>(rng.below(3));
            const int m1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(total - m3 + 1)));
            const int m2 = total - m3 - m1;
            const int cap = n * (n - 1) / 2;
            if (m1 > cap || m2 > cap) continue;
            const Triple t = test::random_triple(rng, n, m1, m2, m3);
            const Verdict v = check_be_list(t);
            if (!v.hypothesis_holds || v.exception) continue;
            ++accepted;
            const auto f = solve_pack(t);
            if (!f || !verify_packing(t, *f).empty()) ++failures;
        }
        c.require(failures == 0);
    }
}

TEST_CASE("criterion 7: contract placements lift oracle packings") {
    Criterion c{"criterion 7: contract placements lift oracle packings"};
    SplitMix64 rng(0xACCE5504);
    int cases = 0, failures = 0;
    while (cases < 1000) {
        const int n = 3 + static_cast<int>(rng.below(5));  // 3..7
        const Triple t = test::random_mixed_triple(rng, n);
        const int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (t.yellow(x, y)) continue;
        const auto res = contract_placement(t, x, y);
        const auto inner = brute_force_pack(res.t);
        if (!inner.packing) continue;
        ++cases;
        if (!verify_packing(t, res.lift(*inner.packing)).empty()) ++failures;
    }
    c.require(failures == 0);
}

TEST_CASE("criterion 8: shared-degree identities on 1000 triples") {
    Criterion c{"criterion 8: shared-degree identities on 1000 triples"};
    SplitMix64 rng(0xACCE5505);
    int failures = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(15));  // 2..16
        const Triple t = test::random_mixed_triple(rng, n);
        const TripleStats s = triple_stats(t);
        for (int side = 1; side <= 2; ++side) {
            long long sum_x3 = 0;
            for (int v = 0; v < n; ++v) sum_x3 += shared_degree_x3(t, side, v);
            const long long ei = side == 1 ? s.e1 : s.e2;
            if (sum_x3 != 3 * (2 * ei + s.e3)) ++failures;
        }
    }
    c.require(failures == 0);
}

TEST_CASE("criterion 9: main-theorem boundary arithmetic") {
    Criterion c{"criterion 9: main-theorem boundary arithmetic"};
    const Verdict boundary = check_main_theorem_arith(139425, 0, MainVariant::Pair);
    c.require(boundary.hypothesis_holds);
    c.require(boundary.margin == 0);
    // nonempty desk-scale inputs: margin strictly negative
    SplitMix64 rng(0xACCE5506);
    bool all_negative = true;
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 3 + static_cast<int>(rng.below(30));
        const Triple t = test::random_triple(
            rng, n, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))), 0, 0);
        if (check_main_theorem(t, MainVariant::Pair).margin >= 0) all_negative = false;
    }
    const Verdict cx = check_main_theorem(gen_small_counterexample(), MainVariant::Pair);
    c.require(cx.margin < 0);
    c.require(all_negative);
}

TEST_CASE("criterion 10: family search rediscovers the small counterexample") {
    Criterion c{"criterion 10: family search rediscovers the small counterexample"};
    SearchConfig cfg;
    cfg.mode = SearchMode::Family;
    cfg.hypothesis = SearchHypothesis::ZakConj;
    cfg.n = 12;
    std::vector<std::string> found;
    const SearchSummary summary = search(cfg, [&](const SearchRecord &rec) {
        if (rec.counterexample()) found.push_back(rec.instance);
    });
    c.require(summary.counterexamples == 1);
    c.require(found.size() == 1);
    c.require(!found.empty() && found[0] == serialize_triple(gen_small_counterexample()));
}
