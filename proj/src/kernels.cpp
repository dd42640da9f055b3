#include "gt/kernels.hpp"

#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define GT_X86 1
#else
#define GT_X86 0
#endif

namespace gt::kernels {

namespace {

void scalar_and_into(word *dst, const word *src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void scalar_andnot_into(word *dst, const word *src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

void scalar_or_into(word *dst, const word *src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

std::size_t scalar_popcount(const word *a, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
    return c;
}

std::size_t scalar_popcount_and(const word *a, const word *b, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

bool scalar_any(const word *a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i]) return true;
    return false;
}

bool scalar_equal(const word *a, const word *b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

const Ops g_scalar{scalar_and_into, scalar_andnot_into, scalar_or_into,
                   scalar_popcount, scalar_popcount_and,
                   scalar_any,      scalar_equal,        "scalar"};

#if GT_X86

__attribute__((target("avx2"))) void avx2_and_into(word *dst, const word *src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_and_si256(d, s));
    }
    for (; i < n; ++i) dst[i] &= src[i];
}

__attribute__((target("avx2"))) void avx2_andnot_into(word *dst, const word *src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
        // andnot computes (~s) & d
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_andnot_si256(s, d));
    }
    for (; i < n; ++i) dst[i] &= ~src[i];
}

__attribute__((target("avx2"))) void avx2_or_into(word *dst, const word *src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_or_si256(d, s));
    }
    for (; i < n; ++i) dst[i] |= src[i];
}

// No single-instruction 256-bit popcount below AVX-512; extracting the four
// lanes and using the scalar popcnt instruction wins at these vector lengths.
__attribute__((target("avx2"))) std::size_t avx2_popcount(const word *a, std::size_t n) {
    std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        c0 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i]));
        c1 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i + 1]));
        c2 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i + 2]));
        c3 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i + 3]));
    }
    for (; i < n; ++i) c0 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i]));
    return static_cast<std::size_t>(c0 + c1 + c2 + c3);
}

__attribute__((target("avx2"))) std::size_t avx2_popcount_and(const word *a, const word *b, std::size_t n) {
    std::uint64_t c0 = 0, c1 = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        c0 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
        c1 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i + 1] & b[i + 1]));
    }
    for (; i < n; ++i) c0 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
    return static_cast<std::size_t>(c0 + c1);
}

__attribute__((target("avx2"))) bool avx2_any(const word *a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
        if (!_mm256_testz_si256(v, v)) return true;
    }
    for (; i < n; ++i)
        if (a[i]) return true;
    return false;
}

__attribute__((target("avx2"))) bool avx2_equal(const word *a, const word *b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + i));
        __m256i x = _mm256_xor_si256(va, vb);
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

const Ops g_avx2{avx2_and_into, avx2_andnot_into, avx2_or_into,
                 avx2_popcount, avx2_popcount_and,
                 avx2_any,      avx2_equal,       "avx2"};

#endif // GT_X86

const Ops *g_active = nullptr;

const Ops &detect() {
#if GT_X86
    if (__builtin_cpu_supports("avx2")) return g_avx2;
#endif
    return g_scalar;
}

} // namespace

const Ops &scalar_ops() { return g_scalar; }

bool avx2_available() {
#if GT_X86
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops &avx2_ops() {
#if GT_X86
    return g_avx2;
#else
    return g_scalar;
#endif
}

const Ops &active_ops() {
    if (!g_active) g_active = &detect();
    return *g_active;
}

void force_ops(const Ops &ops) { g_active = &ops; }
void reset_ops() { g_active = &detect(); }

} // namespace gt::kernels
