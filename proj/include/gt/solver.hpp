#pragma once

#include "gt/triple.hpp"

#include <optional>
#include <vector>

namespace gt {

using PackingMap = std::vector<int>;  // map[u] = f(u), a bijection V1 -> V2

struct Violation {
    enum class Kind { Yellow, White };
    Kind kind;
    // Yellow: u maps onto a forbidden image f(u).  White: edge (u, v) in E1
    // lands on edge (f(u), f(v)) in E2.
    int u = 0, v = -1;
    int fu = 0, fv = -1;

    friend bool operator==(const Violation &, const Violation &) = default;
};

/// All violations of f as a list packing of t, yellow ones first (by u),
/// then white ones by (u, v) lexicographic.  Empty result == valid packing.
std::vector<Violation> verify_packing(const Triple &t, const PackingMap &f);

struct BruteForceResult {
    std::optional<PackingMap> packing;  // first valid bijection in lex order
    long long count = 0;                // number of valid packings
};

/// Exhaustive oracle over all n! bijections; guarded to n <= 8.
BruteForceResult brute_force_pack(const Triple &t);

enum class SolveStatus { Packs, NoPacking, BudgetExceeded };

struct SolveResult {
    SolveStatus status = SolveStatus::NoPacking;
    std::optional<PackingMap> packing;
    long long nodes = 0;  // assignments tried
};

/// Backtracking with forward checking.  Assignment order: descending total
/// degree d(v), ties by index; images tried in ascending index.
/// budget <= 0 means unlimited.
SolveResult solve_pack_limited(const Triple &t, long long budget);

/// Complete search; Some f implies verify_packing(t, f) is empty, None
/// implies no list packing exists.
std::optional<PackingMap> solve_pack(const Triple &t);

/// Result of deleting x from V1 and y from V2 (order-preserving index
/// compaction) and adding yellow edges between N1(x) and N2(y).  Any list
/// packing of `t` lifts to the original by additionally mapping x -> y.
struct ContractResult {
    Triple t;
    int x = 0, y = 0;

    /// Lifts a packing of the contracted triple to the original order.
    PackingMap lift(const PackingMap &inner) const;
};

ContractResult contract_placement(const Triple &t, int x, int y);

/// Left fold of contract_placement over `placements` (given in original
/// coordinates, pairwise disjoint per side); lift() undoes the whole chain.
struct PlacementChain {
    Triple result;
    std::vector<ContractResult> steps;  // innermost last

    PackingMap lift(const PackingMap &inner) const;
};

PlacementChain extend_by_placements(const Triple &t,
                                    const std::vector<std::pair<int, int>> &placements);

} // namespace gt
