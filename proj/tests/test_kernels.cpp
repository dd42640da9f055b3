#include "gt/kernels.hpp"

#include "gt/bitset.hpp"
#include "gt/rng.hpp"

#include <doctest.h>

#include <tuple>
#include <vector>

using namespace gt;

namespace {

std::vector<kernels::word> random_words(SplitMix64 &rng, std::size_t n) {
    std::vector<kernels::word> w(n);
    for (auto &x : w) x = rng.next();
    return w;
}

} // namespace

TEST_CASE("scalar and avx2 kernels agree on random inputs") {
    if (!kernels::avx2_available()) return;
    const auto &scalar = kernels::scalar_ops();
    const auto &avx2 = kernels::avx2_ops();
    SplitMix64 rng(0xC0FFEE);
    // odd lengths exercise the scalar tail after the vector body
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4},
                          std::size_t{7}, std::size_t{8}, std::size_t{64}, std::size_t{65}}) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto a = random_words(rng, n);
            const auto b = random_words(rng, n);

            auto sa = a, va = a;
            scalar.and_into(sa.data(), b.data(), n);
            avx2.and_into(va.data(), b.data(), n);
            CHECK(sa == va);

            sa = a, va = a;
            scalar.andnot_into(sa.data(), b.data(), n);
            avx2.andnot_into(va.data(), b.data(), n);
            CHECK(sa == va);

            sa = a, va = a;
            scalar.or_into(sa.data(), b.data(), n);
            avx2.or_into(va.data(), b.data(), n);
            CHECK(sa == va);

            CHECK(scalar.popcount(a.data(), n) == avx2.popcount(a.data(), n));
            CHECK(scalar.popcount_and(a.data(), b.data(), n) ==
                  avx2.popcount_and(a.data(), b.data(), n));
            CHECK(scalar.any(a.data(), n) == avx2.any(a.data(), n));
            CHECK(scalar.equal(a.data(), b.data(), n) == avx2.equal(a.data(), b.data(), n));
            CHECK(scalar.equal(a.data(), a.data(), n));
            CHECK(avx2.equal(a.data(), a.data(), n));
        }
    }
    // all-zero / all-one edges
    std::vector<kernels::word> zeros(9, 0), ones(9, ~kernels::word{0});
    CHECK(avx2.popcount(zeros.data(), 9) == 0);
    CHECK(avx2.popcount(ones.data(), 9) == 9 * 64);
    CHECK_FALSE(avx2.any(zeros.data(), 9));
    CHECK(avx2.any(ones.data(), 9));
}

TEST_CASE("bitset behaves identically under forced scalar and simd backends") {
    auto exercise = [] {
        Bitset a(130), b(130);
        for (std::size_t i = 0; i < 130; i += 3) a.set(i);
        for (std::size_t i = 0; i < 130; i += 5) b.set(i);
        Bitset c = a;
        c.intersect_with(b);
        std::size_t inter = c.count();
        c = a;
        c.subtract(b);
        std::size_t diff = c.count();
        c = a;
        c.unite_with(b);
        return std::make_tuple(inter, diff, c.count(), a.count_and(b), a.find_first(),
                               a.find_next(127));
    };
    kernels::force_ops(kernels::scalar_ops());
    const auto scalar_result = exercise();
    kernels::reset_ops();
    const auto active_result = exercise();
    CHECK(scalar_result == active_result);
}

TEST_CASE("bitset find_first/find_next walk exactly the set bits") {
    Bitset b(200);
    const std::vector<std::size_t> bits = {0, 1, 63, 64, 65, 128, 199};
    for (auto i : bits) b.set(i);
    std::vector<std::size_t> seen;
    for (std::size_t i = b.find_first(); i < b.size(); i = b.find_next(i)) seen.push_back(i);
    CHECK(seen == bits);
    CHECK(b.count() == bits.size());
    Bitset empty(77);
    CHECK(empty.find_first() == 77);
    CHECK(empty.none());
}
