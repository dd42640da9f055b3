#pragma once

#include "gt/triple.hpp"

namespace gt {

// Deterministic witness and sharpness constructions.  Within each graph,
// vertices are numbered component by component in listed order.

/// G1 = G2 = K3 + K_{1,n-4} (triangle, then star center, then leaves).
/// Requires n >= 8.  e1 + e2 + max{d1, d2} = 3n - 6.
Triple gen_zak_sharp(int n);

/// (4K3, K5 u 7 isolated vertices), n = 12, F = 26 = 3n - 10.
Triple gen_small_counterexample();

/// The k-th excluded pair (1 <= k <= 7):
///   1 {2K2, K1 u K3}        2 {2K1 u K3, K2 u K3}    3 {3K2, 2K1 u K4}
///   4 {3K1 u K3, 2K3}       5 {2K2 u K3, 3K1 u K4}   6 {4K1 u K4, K2 u 2K3}
///   7 {5K1 u K4, 3K3}
/// All satisfy e1 + e2 = 2n - 3 and do not pack.
Triple gen_be_exception(int k);

/// (K_{1,n-2} u K1, C_n), n >= 3.
Triple gen_star_cycle(int n);

/// (K_{k,k}, perfect matching M_k), n = 2k, k >= 1.
Triple gen_matching_biclique(int k);

/// Parses "<family>" by name; families: zak-sharp(n), small-cx,
/// be-exception(k), star-cycle(n), matching-biclique(k).
Triple gen_family(const std::string &name, int param);

} // namespace gt
