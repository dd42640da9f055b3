#pragma once

#include "gt/triple.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gt {

/// Outcome of a packing-theorem hypothesis test.  `margin` is the integer
/// slack of the theorem's defining inequality when every side condition
/// holds; when some condition fails it is the most negative violated slack,
/// so margin >= 0 exactly when hypothesis_holds.
struct Verdict {
    std::string theorem;
    bool hypothesis_holds = false;
    bool guarantees_packing = false;
    std::optional<std::string> exception;
    long long margin = 0;

    std::string to_json() const;
};

/// Delta1*Delta2 + Delta3 <= n/2 (evaluated as 2(D1 D2 + D3) <= n), with
/// the perfect-matching exception characterization.
Verdict check_sauer_spencer_list(const Triple &t);

/// Delta caps plus e1+e2+e3 <= 2n-3, excluding the seven excluded pairs
/// (matched under isomorphism in either component order, ignoring E3).
Verdict check_be_list(const Triple &t);

/// Exact isomorphism test, degree-sequence filter plus permutation
/// backtracking; guarded to n <= 12.
bool is_isomorphic(const Graph &g, const Graph &h);

/// Exact maximum clique via branch and bound with a greedy coloring bound;
/// guarded to n <= 32.
int max_clique_size(const Graph &g);

/// Delta caps plus e1+e2+max{Delta1,Delta2} <= 3n-7; never guarantees
/// packing (conjecture).  Requires e3 = 0.
Verdict check_zak_conjecture(const Triple &t);

/// Delta caps plus s <= 3n - 96 n^{3/4} - 65, evaluated exactly in integers.
/// Requires e3 = 0.
Verdict check_zak_theorem(const Triple &t);
Verdict check_zak_theorem_arith(long long n, long long s);

/// n >= 10^10 and s < 5n/2 - 2 (evaluated as 2s < 5n - 4).  Requires e3 = 0.
Verdict check_zak_52(const Triple &t);
Verdict check_zak_52_arith(long long n, long long s);

enum class MainVariant { Pair, TripleForm };

/// Pair: s <= 3n - 418275 (requires e3 = 0).  TripleForm: F <= 3n - 418279.
Verdict check_main_theorem(const Triple &t, MainVariant variant);
Verdict check_main_theorem_arith(long long n, long long s, MainVariant variant);

struct ImpliedResult {
    std::optional<Verdict> guarantee;  // first predicate that guarantees packing
    std::vector<Verdict> all;          // every applicable verdict, in query order
};

/// Tries, in order: Sauer-Spencer list, B-E list, Zak 5/2, Zak theorem,
/// main theorem.  Pair-only predicates are skipped when e3 > 0.
ImpliedResult implied_packable(const Triple &t);

} // namespace gt
