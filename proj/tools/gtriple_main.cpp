#include "gt/families.hpp"
#include "gt/io.hpp"
#include "gt/search.hpp"
#include "gt/solver.hpp"
#include "gt/theorems.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // no packing / counterexample found
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

gt::Triple load_triple(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);  // input error, exit 3
    std::ostringstream buf;
    buf << in.rdbuf();
    return gt::parse_triple(buf.str());
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gt::Error(gt::ErrorKind::ConfigError, "cannot open " + path);
    out << text;
}

int cmd_stats(const std::string &file) {
    const gt::Triple t = load_triple(file);
    const gt::TripleStats s = gt::triple_stats(t);
    std::cout << "n " << t.order() << "\n"
              << "e1 " << s.e1 << "\ne2 " << s.e2 << "\ne3 " << s.e3 << "\n"
              << "delta1 " << s.delta1 << "\ndelta2 " << s.delta2 << "\n"
              << "delta3_1 " << s.delta3_1 << "\ndelta3_2 " << s.delta3_2 << "\n"
              << "delta3 " << s.delta3 << "\n"
              << "D1 " << s.d1_cap << "\nD2 " << s.d2_cap << "\n"
              << "script_D " << s.script_d << "\nF " << s.f_value << "\n";
    return kExitOk;
}

int cmd_solve(const std::string &file, bool brute, bool print_map) {
    const gt::Triple t = load_triple(file);
    std::optional<gt::PackingMap> packing;
    if (brute) {
        const auto res = gt::brute_force_pack(t);
        packing = res.packing;
        std::cerr << "valid packings: " << res.count << "\n";
    } else {
        packing = gt::solve_pack(t);
    }
    if (packing) {
        std::cout << "PACKS\n";
        if (print_map) std::cout << gt::serialize_packing(*packing) << "\n";
        return kExitOk;
    }
    std::cout << "NO PACKING\n";
    return kExitNegative;
}

int cmd_verify(const std::string &file, const std::string &map_text) {
    const gt::Triple t = load_triple(file);
    const auto violations = gt::verify_packing(t, gt::parse_packing(map_text));
    if (violations.empty()) {
        std::cout << "VALID\n";
        return kExitOk;
    }
    for (const auto &v : violations) {
        if (v.kind == gt::Violation::Kind::Yellow)
            std::cout << "yellow violation: " << v.u << " -> " << v.fu << "\n";
        else
            std::cout << "white violation: edge " << v.u << "-" << v.v << " -> " << v.fu << "-"
                      << v.fv << "\n";
    }
    return kExitNegative;
}

int cmd_check(const std::string &file, const std::string &theorem) {
    const gt::Triple t = load_triple(file);
    auto run_one = [&](const std::string &name) -> gt::Verdict {
        if (name == "ss") return gt::check_sauer_spencer_list(t);
        if (name == "be") return gt::check_be_list(t);
        if (name == "zak-conj") return gt::check_zak_conjecture(t);
        if (name == "zak-thm") return gt::check_zak_theorem(t);
        if (name == "zak-52") return gt::check_zak_52(t);
        if (name == "main")
            return gt::check_main_theorem(t, t.yellow_count() == 0 ? gt::MainVariant::Pair
                                                                   : gt::MainVariant::TripleForm);
        throw gt::Error(gt::ErrorKind::ConfigError, "unknown theorem '" + name + "'");
    };
    if (theorem == "all") {
        const auto res = gt::implied_packable(t);
        for (const auto &v : res.all) std::cout << v.to_json() << "\n";
        return kExitOk;
    }
    std::cout << run_one(theorem).to_json() << "\n";
    return kExitOk;
}

int cmd_gen(const std::string &family, int n, int k, const std::string &out) {
    int param = n;
    if (family == "be-exception" || family == "matching-biclique") param = k;
    write_output(out, gt::serialize_triple(gt::gen_family(family, param)));
    return kExitOk;
}

int cmd_contract(const std::string &file, const std::string &place, const std::string &out) {
    const gt::Triple t = load_triple(file);
    const auto colon = place.find(':');
    if (colon == std::string::npos)
        throw gt::Error(gt::ErrorKind::ConfigError, "--place expects u:w");
    const int x = std::stoi(place.substr(0, colon));
    const int y = std::stoi(place.substr(colon + 1));
    write_output(out, gt::serialize_triple(gt::contract_placement(t, x, y).t));
    return kExitOk;
}

int cmd_search(const gt::SearchConfig &cfg, const std::string &out) {
    std::ofstream file;
    std::ostream *log = &std::cout;
    if (!out.empty()) {
        file.open(out, std::ios::binary);
        if (!file) throw gt::Error(gt::ErrorKind::ConfigError, "cannot open " + out);
        log = &file;
    }
    const gt::SearchSummary summary =
        gt::search(cfg, [&](const gt::SearchRecord &rec) { *log << rec.to_json() << "\n"; });
    *log << summary.to_json() << "\n";
    std::cerr << "scanned " << summary.scanned << ", hypothesis held on "
              << summary.hypothesis_holds << ", counterexamples " << summary.counterexamples
              << "\n";
    return summary.counterexamples > 0 ? kExitNegative : kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact graph packing and list packing toolkit"};
    app.require_subcommand(1);

    std::string file, map_text, theorem = "all", family, out, place, mode = "exhaustive",
                hypothesis = "zak-conj", grid_file;
    int n = 8, k = 1, samples = 100;
    long long budget = 1'000'000;
    std::uint64_t seed = 0;
    bool brute = false, print_map = false;

    auto *stats = app.add_subcommand("stats", "degree and potential statistics");
    stats->add_option("file", file)->required();

    auto *solve = app.add_subcommand("solve", "decide list packability");
    solve->add_option("file", file)->required();
    solve->add_flag("--brute", brute, "use the n <= 8 brute-force oracle");
    solve->add_flag("--print-map", print_map, "print the certificate when packable");

    auto *verify = app.add_subcommand("verify", "verify a packing certificate");
    verify->add_option("file", file)->required();
    verify->add_option("--map", map_text, "certificate f(0),f(1),...")->required();

    auto *check = app.add_subcommand("check", "run theorem hypothesis predicates");
    check->add_option("file", file)->required();
    check->add_option("--theorem", theorem, "ss|be|zak-conj|zak-thm|zak-52|main|all");

    auto *gen = app.add_subcommand("gen", "generate a witness family instance");
    gen->add_option("family", family, "zak-sharp|small-cx|be-exception|star-cycle|matching-biclique")
        ->required();
    gen->add_option("--n", n, "order parameter");
    gen->add_option("--k", k, "index/size parameter");
    gen->add_option("-o,--out", out, "output file (default stdout)");

    auto *contract = app.add_subcommand("contract", "apply a contract placement");
    contract->add_option("file", file)->required();
    contract->add_option("--place", place, "u:w")->required();
    contract->add_option("-o,--out", out, "output file (default stdout)");

    auto *searchc = app.add_subcommand("search", "counterexample hunt");
    searchc->add_option("--mode", mode, "exhaustive|family|random")->required();
    searchc->add_option("--n", n, "order");
    searchc->add_option("--seed", seed, "PRNG seed (random mode)");
    searchc->add_option("--budget", budget, "solver node budget per instance");
    searchc->add_option("--samples", samples, "sample count (random mode)");
    searchc->add_option("--hypothesis", hypothesis, "zak-conj|be|ss|main")->required();
    searchc->add_option("--grid", grid_file, "family grid config file");
    searchc->add_option("--out", out, "JSON-lines log file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (stats->parsed()) return cmd_stats(file);
        if (solve->parsed()) return cmd_solve(file, brute, print_map);
        if (verify->parsed()) return cmd_verify(file, map_text);
        if (check->parsed()) return cmd_check(file, theorem);
        if (gen->parsed()) return cmd_gen(family, n, k, out);
        if (contract->parsed()) return cmd_contract(file, place, out);
        if (searchc->parsed()) {
            gt::SearchConfig cfg;
            if (mode == "exhaustive")
                cfg.mode = gt::SearchMode::Exhaustive;
            else if (mode == "family")
                cfg.mode = gt::SearchMode::Family;
            else if (mode == "random")
                cfg.mode = gt::SearchMode::Random;
            else
                throw gt::Error(gt::ErrorKind::ConfigError, "unknown mode '" + mode + "'");
            if (hypothesis == "zak-conj")
                cfg.hypothesis = gt::SearchHypothesis::ZakConj;
            else if (hypothesis == "be")
                cfg.hypothesis = gt::SearchHypothesis::BE;
            else if (hypothesis == "ss")
                cfg.hypothesis = gt::SearchHypothesis::SS;
            else if (hypothesis == "main")
                cfg.hypothesis = gt::SearchHypothesis::Main;
            else
                throw gt::Error(gt::ErrorKind::ConfigError, "unknown hypothesis '" + hypothesis + "'");
            cfg.n = n;
            cfg.seed = seed;
            cfg.budget = budget;
            cfg.samples = samples;
            cfg.grid_file = grid_file;
            return cmd_search(cfg, out);
        }
    } catch (const gt::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == gt::ErrorKind::ConfigError || e.kind() == gt::ErrorKind::BadParam
                   ? kExitUsage
                   : kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
