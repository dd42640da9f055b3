#pragma once

// Word-array kernels behind the bitset type.  Scalar reference versions
// always exist; AVX2 variants are selected once at startup when the CPU
// supports them.  Both must produce identical results on every input
// (see tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>

namespace gt::kernels {

using word = std::uint64_t;

struct Ops {
    void (*and_into)(word *dst, const word *src, std::size_t nwords);
    void (*andnot_into)(word *dst, const word *src, std::size_t nwords);
    void (*or_into)(word *dst, const word *src, std::size_t nwords);
    std::size_t (*popcount)(const word *a, std::size_t nwords);
    std::size_t (*popcount_and)(const word *a, const word *b, std::size_t nwords);
    bool (*any)(const word *a, std::size_t nwords);
    bool (*equal)(const word *a, const word *b, std::size_t nwords);
    const char *name;
};

const Ops &scalar_ops();
const Ops &avx2_ops();   // valid only if avx2_available()
bool avx2_available();

// Active implementation; resolved on first use, overridable for tests.
const Ops &active_ops();
void force_ops(const Ops &ops);
void reset_ops();

} // namespace gt::kernels
