#include "gt/search.hpp"

#include "gt/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <json.hpp>
#include <numeric>
#include <set>
#include <sstream>

namespace gt {

namespace {

// Upper-triangle edge masks, bit (i,j) placed so that numeric comparison of
// masks equals lexicographic comparison of the row-major bit string.
int tri_bits(int n) { return n * (n - 1) / 2; }

int edge_bit(int i, int j, int n) {
    // row-major index of (i,j), i < j
    const int k = i * n - i * (i + 1) / 2 + (j - i - 1);
    return tri_bits(n) - 1 - k;
}

std::uint64_t mask_of(const Graph &g) {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << edge_bit(u, v, g.order());
    return mask;
}

Graph graph_of(std::uint64_t mask, int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> edge_bit(i, j, n) & 1) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

// Minimum mask over all vertex permutations (perm maps new label -> old).
std::uint64_t canonical_mask(std::uint64_t mask, int n) {
    bool adj[10][10] = {};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> edge_bit(i, j, n) & 1) adj[i][j] = adj[j][i] = true;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t m = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[perm[static_cast<std::size_t>(i)]][perm[static_cast<std::size_t>(j)]])
                    m |= std::uint64_t{1} << edge_bit(i, j, n);
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

std::string canonical_form(const Graph &g) {
    const int n = g.order();
    if (n > 10) throw Error(ErrorKind::TooLarge, "canonical form guarded to n <= 10");
    const std::uint64_t canon = canonical_mask(mask_of(g), n);
    const int bits = tri_bits(n);
    std::string bytes(static_cast<std::size_t>((bits + 7) / 8), '\0');
    for (int k = 0; k < bits; ++k)
        if (canon >> (bits - 1 - k) & 1)
            bytes[static_cast<std::size_t>(k / 8)] |= static_cast<char>(0x80 >> (k % 8));
    return bytes;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n > 7) throw Error(ErrorKind::TooLarge, "exhaustive enumeration guarded to n <= 7");
    if (n <= 0) return {};
    std::set<std::uint64_t> reps = {0};  // classes on 1 vertex
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t rep : reps) {
            // lift the (k-1)-vertex mask into the k-vertex bit layout
            std::uint64_t base = 0;
            for (int i = 0; i < k - 1; ++i)
                for (int j = i + 1; j < k - 1; ++j)
                    if (rep >> edge_bit(i, j, k - 1) & 1)
                        base |= std::uint64_t{1} << edge_bit(i, j, k);
            // attach vertex k-1 with every possible neighborhood
            for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (k - 1)); ++subset) {
                std::uint64_t m = base;
                for (int i = 0; i < k - 1; ++i)
                    if (subset >> i & 1) m |= std::uint64_t{1} << edge_bit(i, k - 1, k);
                next.insert(canonical_mask(m, k));
            }
        }
        reps = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (std::uint64_t m : reps) out.push_back(graph_of(m, n));
    return out;
}

Graph random_gnm(SplitMix64 &rng, int n, int m) {
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges)
        throw Error(ErrorKind::ConfigError, "G(n,m): m out of range");
    std::vector<std::pair<int, int>> es;
    std::set<std::pair<int, int>> seen;
    while (static_cast<int>(es.size()) < m) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        es.emplace_back(u, v);
    }
    return Graph::from_edges(n, es);
}

namespace {

std::vector<std::pair<int, int>> random_yellow(SplitMix64 &rng, int n, int m) {
    std::vector<std::pair<int, int>> es;
    std::set<std::pair<int, int>> seen;
    while (static_cast<int>(es.size()) < m) {
        const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int w = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (!seen.insert({u, w}).second) continue;
        es.emplace_back(u, w);
    }
    return es;
}

Verdict hypothesis_verdict(const Triple &t, SearchHypothesis hyp) {
    switch (hyp) {
        case SearchHypothesis::ZakConj: return check_zak_conjecture(t);
        case SearchHypothesis::BE: return check_be_list(t);
        case SearchHypothesis::SS: return check_sauer_spencer_list(t);
        case SearchHypothesis::Main: return check_main_theorem(t, MainVariant::TripleForm);
    }
    throw Error(ErrorKind::ConfigError, "bad hypothesis");
}

const char *outcome_name(PackOutcome o) {
    switch (o) {
        case PackOutcome::Packs: return "packs";
        case PackOutcome::NoPacking: return "no-packing";
        case PackOutcome::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

struct Driver {
    const SearchConfig &cfg;
    const std::function<void(const SearchRecord &)> &sink;
    SearchSummary summary;

    void consider(const Triple &t) {
        ++summary.scanned;
        const Verdict v = hypothesis_verdict(t, cfg.hypothesis);
        if (!v.hypothesis_holds) return;
        ++summary.hypothesis_holds;
        const SolveResult res = solve_pack_limited(t, cfg.budget);
        SearchRecord rec;
        rec.instance = serialize_triple(t);
        rec.stats = triple_stats(t);
        rec.verdict = v;
        rec.nodes = res.nodes;
        switch (res.status) {
            case SolveStatus::Packs: rec.pack_result = PackOutcome::Packs; break;
            case SolveStatus::NoPacking: rec.pack_result = PackOutcome::NoPacking; break;
            case SolveStatus::BudgetExceeded: rec.pack_result = PackOutcome::BudgetExceeded; break;
        }
        if (rec.counterexample()) ++summary.counterexamples;
        if (rec.pack_result == PackOutcome::BudgetExceeded) ++summary.budget_exceeded;
        sink(rec);
    }
};

struct FamilyGrid {
    std::string family = "triangles-vs-clique";
    int n = 0;
    bool allow_k2 = false;  // include b*K2 components in side 1
};

FamilyGrid load_grid(const SearchConfig &cfg) {
    FamilyGrid grid;
    grid.n = cfg.n;
    if (cfg.grid_file.empty()) return grid;
    std::ifstream in(cfg.grid_file);
    if (!in) throw Error(ErrorKind::ConfigError, "cannot open grid file " + cfg.grid_file);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::ConfigError,
                        "grid file line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "family")
            grid.family = value;
        else if (key == "n")
            grid.n = std::stoi(value);
        else if (key == "allow_k2")
            grid.allow_k2 = value == "1" || value == "true";
        else
            throw Error(ErrorKind::ConfigError, "grid file: unknown key '" + key + "'");
    }
    return grid;
}

// Side-1 member of the grid: a triangles, b single edges, rest isolated.
Graph components_graph(int n, int triangles, int k2s) {
    std::vector<std::pair<int, int>> es;
    int next = 0;
    for (int c = 0; c < triangles; ++c) {
        es.emplace_back(next, next + 1);
        es.emplace_back(next, next + 2);
        es.emplace_back(next + 1, next + 2);
        next += 3;
    }
    for (int c = 0; c < k2s; ++c) {
        es.emplace_back(next, next + 1);
        next += 2;
    }
    return Graph::from_edges(n, es);
}

Graph clique_plus_isolated(int n, int s) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

} // namespace

std::string SearchRecord::to_json() const {
    nlohmann::json j;
    j["instance"] = instance;
    j["stats"] = {{"e1", stats.e1},           {"e2", stats.e2},
                  {"e3", stats.e3},           {"delta1", stats.delta1},
                  {"delta2", stats.delta2},   {"delta3", stats.delta3},
                  {"script_d", stats.script_d}, {"f_value", stats.f_value}};
    j["verdict"] = nlohmann::json::parse(verdict.to_json());
    j["pack_result"] = outcome_name(pack_result);
    j["nodes"] = nodes;
    j["counterexample"] = counterexample();
    return j.dump();
}

std::string SearchSummary::to_json() const {
    nlohmann::json j;
    j["summary"] = {{"scanned", scanned},
                    {"hypothesis_holds", hypothesis_holds},
                    {"counterexamples", counterexamples},
                    {"budget_exceeded", budget_exceeded}};
    return j.dump();
}

SearchSummary search(const SearchConfig &cfg, const std::function<void(const SearchRecord &)> &sink) {
    if (cfg.budget <= 0) throw Error(ErrorKind::ConfigError, "budget must be positive");
    Driver driver{cfg, sink, {}};

    switch (cfg.mode) {
        case SearchMode::Exhaustive: {
            if (cfg.n > 7)
                throw Error(ErrorKind::TooLarge, "exhaustive mode requires n <= 7");
            const std::vector<Graph> reps = nonisomorphic_graphs(cfg.n);
            for (std::size_t i = 0; i < reps.size(); ++i)
                for (std::size_t j = i; j < reps.size(); ++j)
                    driver.consider(Triple(reps[i], reps[j], {}));
            break;
        }
        case SearchMode::Family: {
            const FamilyGrid grid = load_grid(cfg);
            if (grid.family != "triangles-vs-clique")
                throw Error(ErrorKind::ConfigError, "unknown family grid '" + grid.family + "'");
            const int n = grid.n;
            for (int a = 0; 3 * a <= n; ++a) {
                const int max_b = grid.allow_k2 ? (n - 3 * a) / 2 : 0;
                for (int b = 0; b <= max_b; ++b)
                    for (int s = 0; s <= n; ++s)
                        driver.consider(
                            Triple(components_graph(n, a, b), clique_plus_isolated(n, s), {}));
            }
            break;
        }
        case SearchMode::Random: {
            SplitMix64 rng(cfg.seed);
            const int n = cfg.n;
            const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
            for (int i = 0; i < cfg.samples; ++i) {
                // edge budget pinned to the hypothesis boundary
                long long total = 0;
                int m3 = 0;
                switch (cfg.hypothesis) {
                    case SearchHypothesis::ZakConj: total = 3 * n - 10; break;
                    case SearchHypothesis::BE:
                        total = 2 * n - 3;
                        m3 = static_cast<int>(rng.below(3));
                        break;
                    case SearchHypothesis::SS:
                        total = n / 2;
                        m3 = static_cast<int>(rng.below(2));
                        break;
                    case SearchHypothesis::Main: total = n / 2; break;
                }
                total = std::max(total - m3, 0LL);
                const long long m1 = std::min<long long>(
                    static_cast<long long>(rng.below(static_cast<std::uint64_t>(total + 1))),
                    max_edges);
                const long long m2 = std::min(total - m1, max_edges);
                Graph g1 = random_gnm(rng, n, static_cast<int>(m1));
                Graph g2 = random_gnm(rng, n, static_cast<int>(m2));
                driver.consider(Triple(std::move(g1), std::move(g2), random_yellow(rng, n, m3)));
            }
            break;
        }
    }
    return driver.summary;
}

} // namespace gt
