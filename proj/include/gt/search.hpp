#pragma once

#include "gt/rng.hpp"
#include "gt/solver.hpp"
#include "gt/theorems.hpp"
#include "gt/triple.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gt {

/// Minimum adjacency-matrix bit string (upper triangle, row major) over all
/// vertex permutations, packed into bytes.  Equal strings iff isomorphic.
/// Exact and factorial-time; guarded to n <= 10.
std::string canonical_form(const Graph &g);

/// One representative per isomorphism class of graphs on n vertices,
/// built by extending the classes on n-1 vertices; deterministic order
/// (sorted by canonical form).  Guarded to n <= 7.
std::vector<Graph> nonisomorphic_graphs(int n);

/// Uniform G(n,m): m distinct edges drawn by rejection from the splitmix64
/// stream (endpoints via below(n)).
Graph random_gnm(SplitMix64 &rng, int n, int m);

enum class SearchMode { Exhaustive, Family, Random };
enum class SearchHypothesis { ZakConj, BE, SS, Main };

struct SearchConfig {
    SearchMode mode = SearchMode::Exhaustive;
    SearchHypothesis hypothesis = SearchHypothesis::ZakConj;
    int n = 5;
    std::uint64_t seed = 0;       // random mode
    int samples = 100;            // random mode
    long long budget = 1'000'000; // solver nodes per instance
    std::string grid_file;        // family mode; empty = built-in grid
};

enum class PackOutcome { Packs, NoPacking, BudgetExceeded };

struct SearchRecord {
    std::string instance;  // canonical .gtriple text
    TripleStats stats;
    Verdict verdict;
    PackOutcome pack_result = PackOutcome::Packs;
    long long nodes = 0;

    bool counterexample() const {
        return verdict.hypothesis_holds && pack_result == PackOutcome::NoPacking;
    }
    std::string to_json() const;
};

struct SearchSummary {
    long long scanned = 0;            // instances considered
    long long hypothesis_holds = 0;   // instances that passed the filter
    long long counterexamples = 0;
    long long budget_exceeded = 0;

    std::string to_json() const;
};

/// Runs a search; every hypothesis-passing instance is solved under the node
/// budget and handed to `sink` in generation order.  Deterministic given cfg.
SearchSummary search(const SearchConfig &cfg, const std::function<void(const SearchRecord &)> &sink);

} // namespace gt
