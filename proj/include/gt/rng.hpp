#pragma once

#include <cstdint>

namespace gt {

/// splitmix64: 64-bit state advanced by the golden-ratio constant, output
/// mixed by two xor-shift-multiply rounds.  This exact stream is part of the
/// log-reproducibility contract, so the algorithm is spelled out here:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// Bounded draws use plain modulo (bound below 2^32, bias negligible and,
/// more importantly, identical across ports).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

} // namespace gt
