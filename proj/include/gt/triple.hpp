#pragma once

#include "gt/graph.hpp"

#include <optional>
#include <vector>

namespace gt {

// Constants of the main theorem and its detailed variant.
namespace constants {
inline constexpr long long kCMain = 418275;      // 11 * 195^2
inline constexpr long long kCDetailed = 418279;  // kCMain + 4
inline constexpr long long kF = 195;
inline constexpr long long kK = 15;
static_assert(kF * kF * 11 == kCMain);
static_assert(kK * 13 == kF);
static_assert(kCDetailed == kCMain + 4);
} // namespace constants

/// A graph triple: two same-order graphs plus a bipartite set of forbidden
/// assignments ("yellow" edges) between side 1 and side 2.  V1 and V2 are
/// separate index spaces, each 0..n-1.
class Triple {
public:
    Triple() = default;
    Triple(Graph g1, Graph g2, const std::vector<std::pair<int, int>> &yellow_edges);

    int order() const { return g1_.order(); }
    const Graph &g1() const { return g1_; }
    const Graph &g2() const { return g2_; }
    const Graph &side(int i) const { return i == 1 ? g1_ : g2_; }

    bool yellow(int u, int w) const { return yellow1_[u].test(w); }
    /// Forbidden V2-images of u in V1.
    const Bitset &yellow_row1(int u) const { return yellow1_[u]; }
    /// V1 vertices forbidden to map onto w in V2.
    const Bitset &yellow_row2(int w) const { return yellow2_[w]; }

    int yellow_degree(int side, int v) const {
        return static_cast<int>((side == 1 ? yellow1_[v] : yellow2_[v]).count());
    }
    int yellow_count() const;

    /// Sorted yellow edge list (u in V1, w in V2), lexicographic.
    std::vector<std::pair<int, int>> yellow_edges() const;

    /// Total degree d(v) = white + yellow.
    int total_degree(int side_i, int v) const {
        return side(side_i).degree(v) + yellow_degree(side_i, v);
    }

    friend bool operator==(const Triple &a, const Triple &b) {
        return a.g1_ == b.g1_ && a.g2_ == b.g2_ && a.yellow1_ == b.yellow1_;
    }

private:
    Graph g1_, g2_;
    std::vector<Bitset> yellow1_;  // row per V1 vertex, bits over V2
    std::vector<Bitset> yellow2_;  // transpose
};

struct TripleStats {
    long long e1 = 0, e2 = 0, e3 = 0;
    long long delta1 = 0, delta2 = 0;
    long long delta3_1 = 0, delta3_2 = 0;  // max yellow degree over V1 / V2
    long long delta3 = 0;
    long long d1_cap = 0, d2_cap = 0;      // D_i = max{delta_i, delta3_i}
    long long script_d = 0;
    long long f_value = 0;                 // e1 + e2 + e3 + script_d

    friend bool operator==(const TripleStats &, const TripleStats &) = default;
};

TripleStats triple_stats(const Triple &t);

/// F(t1) - F(t2).
long long f_delta(const Triple &t1, const Triple &t2);

/// Shared degree, returned as 3*sd(v) (always an integer).  The white part
/// adjusts d_i(v) by 2/3 per white neighbor across the degree-15 threshold;
/// the yellow degree is added unscaled.
long long shared_degree_x3(const Triple &t, int side, int v);

struct VertexClass {
    int side = 0;   // 1 or 2
    int index = 0;
    bool weak = false;
    bool donor = false;         // side 1 only
    bool supersponsor = false;  // >= 2 weak neighbors
    // The neighbor lists below use global ids: side-1 vertex v is v, side-2
    // vertex w is n + w (yellow neighbors live on the opposite side).
    std::optional<int> sponsor;               // s(index), when weak with a unique deg>=3 neighbor
    std::vector<int> sponsor_of;              // W(v): weak neighbors, ascending global id
    std::vector<int> degree_one_neighbors;    // L(v): neighbors of total degree 1
};

/// Classifies every vertex on both sides (2n entries: side 1 first).
/// Degrees are total (white + yellow); neighborhoods span both edge colors.
std::vector<VertexClass> classify_vertices(const Triple &t);

} // namespace gt
