// tdpcc: decide partial cycle cover and related cycle/path problems on
// graphs supplied with an elimination forest, by counting ordered pairs of
// consistent matchings. Subcommands: solve, count, verify, decompose, bench.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdpcc/count.hpp"
#include "tdpcc/gen.hpp"
#include "tdpcc/io.hpp"
#include "tdpcc/oracle.hpp"
#include "tdpcc/parallel.hpp"
#include "tdpcc/solve.hpp"

using nlohmann::json;
using namespace tdpcc;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Inputs {
    Graph g;
    EliminationForest f;
    std::string graph_path;
    bool forest_from_file = false;
};

Inputs load_inputs(const std::string& graph_path, const std::string& forest_path) {
    Inputs in;
    in.graph_path = graph_path;
    in.g = read_graph_file(graph_path);
    if (!forest_path.empty()) {
        in.f = read_forest_file(forest_path);
        in.forest_from_file = true;
        auto check = validate_forest(in.g, in.f);
        if (!check.ok) throw std::runtime_error("invalid elimination forest: " + check.violation);
    } else {
        in.f = dfs_forest(in.g);
    }
    return in;
}

json stats_json(const CountStats& s) {
    return json{{"calls", s.calls},
                {"call_bound", s.bound},
                {"max_depth", s.max_depth},
                {"forest_depth", s.forest_depth},
                {"runs", s.runs},
                {"dup_free", s.dup_free},
                {"tracked", s.tracked}};
}

int cmd_solve(const std::string& graph_path, const std::string& forest_path,
              const std::string& problem, int k, int l, bool have_k, bool have_l,
              std::uint64_t seed, int reps, bool exact, bool as_json, bool track) {
    Inputs in = load_inputs(graph_path, forest_path);
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.reps = reps;
    cfg.exact_ring = exact;
    cfg.track_calls = track;

    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    bool found_k = false;
    int min_k = 0;
    if (problem == "pcc") {
        if (!have_k || !have_l) throw std::runtime_error("pcc requires both -k and -l");
        v = solve_pcc(in.g, in.f, {k, l}, cfg);
    } else if (problem == "hc") {
        v = solve_hamiltonian_cycle(in.g, in.f, cfg);
    } else if (problem == "hp") {
        v = solve_hamiltonian_path(in.g, in.f, cfg);
    } else if (problem == "long-cycle") {
        if (!have_l) throw std::runtime_error("long-cycle requires -l (minimum cycle length)");
        v = solve_long_cycle(in.g, in.f, l, cfg);
    } else if (problem == "long-path") {
        if (!have_l) throw std::runtime_error("long-path requires -l (minimum path length)");
        v = solve_long_path(in.g, in.f, l, cfg);
    } else if (problem == "min-cycle-cover") {
        auto mc = solve_min_cycle_cover(in.g, in.f, cfg);
        v = mc.verdict;
        found_k = mc.found;
        min_k = mc.k;
        v.yes = mc.found;
    } else {
        throw std::runtime_error("unknown problem '" + problem + "'");
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (as_json) {
        json out{{"command", "solve"},
                 {"problem", problem},
                 {"graph", graph_path},
                 {"n", in.g.n},
                 {"m", in.g.m()},
                 {"tau", in.f.depth()},
                 {"seed", seed},
                 {"reps", reps},
                 {"answer", v.yes ? "yes" : "no"},
                 {"reps_used", v.reps_used},
                 {"witness_w", v.witness_w},
                 {"instrumentation", stats_json(v.stats)},
                 {"wall_ms", ms}};
        if (have_k) out["k"] = k;
        if (have_l) out["l"] = l;
        if (problem == "min-cycle-cover" && found_k) out["min_k"] = min_k;
        std::cout << out.dump() << "\n";
    } else {
        if (problem == "min-cycle-cover")
            std::cout << (found_k ? std::to_string(min_k) : std::string("none")) << "\n";
        else
            std::cout << (v.yes ? "yes" : "no") << "\n";
    }
    return v.yes ? kExitYes : kExitNo;
}

int cmd_count(const std::string& graph_path, const std::string& forest_path, int l, bool have_l,
              bool as_json, bool track) {
    if (!have_l) throw std::runtime_error("count requires -l");
    Inputs in = load_inputs(graph_path, forest_path);
    std::vector<long long> wts = in.g.weighted() ? in.g.weights
                                                 : std::vector<long long>(in.g.m(), 1);
    long long N = 1;
    for (long long w : wts) N = std::max(N, w);

    auto t0 = std::chrono::steady_clock::now();
    PairTable<ExactRing> table;
    CountStats stats;
    bool odd = (l % 2) != 0 || l < 0 || l > in.g.n;
    if (!odd) {
        auto res = count_pairs(in.g, in.f, wts, N, l, ExactRing{}, track);
        table = std::move(res.table);
        stats = res.stats;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (as_json) {
        json tbl = json::object();
        for (const auto& [w, c] : table) tbl[std::to_string(w)] = c.get_str();
        json out{{"command", "count"}, {"graph", graph_path}, {"n", in.g.n},   {"m", in.g.m()},
                 {"tau", in.f.depth()}, {"l", l},             {"table", tbl},
                 {"instrumentation", stats_json(stats)},      {"wall_ms", ms}};
        if (odd) out["note"] = "no pairs: cover size must be even and within [0, n]";
        std::cout << out.dump() << "\n";
    } else {
        if (odd)
            std::cout << "# no pairs: cover size must be even and within [0, n]\n";
        for (const auto& [w, c] : table) std::cout << "w=" << w << ": " << c.get_str() << "\n";
    }
    return kExitYes;
}

// Counter-vs-oracle and solver-vs-backtracking agreement on one instance.
bool verify_instance(const Graph& g, const EliminationForest& f, Rng& rng, std::ostream& log) {
    bool ok = true;
    // exact pair counts against brute-force enumeration, a few weightings
    for (int trial = 0; trial < 3 && ok; ++trial) {
        long long N = 4;
        auto wts = random_weights(rng, g.m(), N);
        for (int l = 0; l <= g.n && ok; l += 2) {
            auto res = count_pairs(g, f, wts, N, l, ExactRing{}, true);
            auto ref = oracle::enumerate_pairs(g, wts, l);
            PairTable<ExactRing> want;
            for (const auto& [w, c] : ref) want[w] = mpz_class(static_cast<unsigned long>(c));
            if (res.table != want) {
                log << "MISMATCH pair counts at l=" << l << "\n";
                ok = false;
            }
            if (!res.stats.dup_free || !res.stats.depth_ok() || !res.stats.calls_ok()) {
                log << "MISMATCH instrumentation bounds at l=" << l << "\n";
                ok = false;
            }
        }
    }
    // randomized solver against the exact backtracking decider
    SolverConfig cfg;
    cfg.seed = rng.next();
    cfg.reps = 16;
    for (int l = 0; l <= g.n && ok; ++l) {
        for (int k = 0; k <= 3 && ok; ++k) {
            bool truth = oracle::decide_pcc_exact(g, k, l);
            bool got = solve_pcc(g, f, {k, l}, cfg).yes;
            if (got != truth) {
                log << "MISMATCH solver k=" << k << " l=" << l << ": solver=" << got
                    << " oracle=" << truth << "\n";
                ok = false;
            }
        }
    }
    return ok;
}

int cmd_verify(const std::string& graph_path, const std::string& forest_path, bool random_mode,
               int rn, int rcount, std::uint64_t rseed) {
    if (random_mode) {
        if (rn > oracle::kMaxPairVertices)
            throw std::invalid_argument("oracle guard: verify limited to n <= " +
                                        std::to_string(oracle::kMaxPairVertices));
        Rng rng(rseed);
        for (int i = 0; i < rcount; ++i) {
            auto inst = random_bounded_depth(rn, 5, 0.35, 0.6, rng);
            if (inst.g.m() > oracle::kMaxPairEdges) {
                --i;  // resample dense outliers
                continue;
            }
            if (!verify_instance(inst.g, inst.f, rng, std::cerr)) {
                std::cerr << "verification failed on random instance " << i << "\n";
                return kExitNo;
            }
        }
        std::cout << "verified " << rcount << " random instances (n=" << rn << ")\n";
        return kExitYes;
    }
    Inputs in = load_inputs(graph_path, forest_path);
    Rng rng(12345);
    if (!verify_instance(in.g, in.f, rng, std::cerr)) return kExitNo;
    std::cout << "verified " << graph_path << "\n";
    return kExitYes;
}

int cmd_decompose(const std::string& graph_path, const std::string& out_path) {
    Graph g = read_graph_file(graph_path);
    auto f = dfs_forest(g);
    if (out_path.empty()) {
        write_forest(std::cout, f);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write forest file '" + out_path + "'");
        write_forest(out, f);
    }
    std::cerr << "depth " << f.depth() << "\n";
    return kExitYes;
}

int cmd_bench(const std::string& family, const std::vector<int>& sizes, const std::string& problem,
              std::uint64_t seed, int reps, bool as_json) {
    json rows = json::array();
    if (!as_json) std::cout << "instance,n,m,tau,calls,bound,millis,verdict\n";
    for (int n : sizes) {
        Graph g;
        EliminationForest f;
        std::string name;
        if (family == "cycle") {
            g = cycle_graph(n);
            f = balanced_cycle_forest(n);
            name = "C" + std::to_string(n);
        } else if (family == "path") {
            g = path_graph(n);
            f = balanced_path_forest(n);
            name = "P" + std::to_string(n);
        } else {
            throw std::runtime_error("unknown family '" + family + "' (cycle|path)");
        }
        SolverConfig cfg;
        cfg.seed = seed;
        cfg.reps = reps;
        cfg.track_calls = true;
        auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        if (problem == "hc") v = solve_hamiltonian_cycle(g, f, cfg);
        else if (problem == "hp") v = solve_hamiltonian_path(g, f, cfg);
        else throw std::runtime_error("bench supports problems hc|hp");
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (!v.stats.dup_free || !v.stats.calls_ok() || !v.stats.depth_ok())
            throw std::runtime_error("instrumentation bound violated on " + name);
        if (as_json) {
            rows.push_back(json{{"instance", name},
                                {"n", g.n},
                                {"m", g.m()},
                                {"tau", f.depth()},
                                {"calls", v.stats.calls},
                                {"bound", v.stats.bound},
                                {"millis", ms},
                                {"verdict", v.yes ? "yes" : "no"}});
        } else {
            std::cout << name << "," << g.n << "," << g.m() << "," << f.depth() << ","
                      << v.stats.calls << "," << v.stats.bound << "," << ms << ","
                      << (v.yes ? "yes" : "no") << "\n";
        }
    }
    if (as_json) std::cout << rows.dump() << "\n";
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial cycle cover / Hamiltonicity solver for graphs of small treedepth"};
    app.require_subcommand(1);
    int threads = -1;
    app.add_option("--threads", threads, "worker threads (1 = serial reference kernels)");

    std::string graph_path, forest_path, problem = "pcc", out_path;
    int k = 0, l = 0, reps = 16;
    std::uint64_t seed = 0;
    bool exact = false, as_json = false, track = false;

    auto* solve = app.add_subcommand("solve", "decide a problem on a graph file");
    solve->add_option("graph", graph_path, "graph file")->required();
    solve->add_option("--problem", problem, "pcc|hc|hp|long-cycle|long-path|min-cycle-cover");
    auto* kopt = solve->add_option("-k", k, "max number of cycles (pcc)");
    auto* lopt = solve->add_option("-l", l, "covered vertices (pcc) or minimum length (long-*)");
    solve->add_option("--seed", seed, "rng seed");
    solve->add_option("--reps", reps, "repetitions (false-negative <= 2^-reps)");
    solve->add_option("--forest", forest_path, "elimination forest file (default: DFS heuristic)");
    solve->add_flag("--exact", exact, "count with exact integers instead of the modular ring");
    solve->add_flag("--json", as_json, "emit a JSON run report");
    solve->add_flag("--track", track, "record (vertex, labels) calls and check for repeats");

    std::string cg_path, cf_path;
    int cl = 0;
    bool c_json = false, c_track = false;
    auto* count = app.add_subcommand("count", "exact table of consistent-matching pair counts");
    count->add_option("graph", cg_path, "graph file")->required();
    auto* clopt = count->add_option("-l", cl, "covered vertices");
    count->add_option("--forest", cf_path, "elimination forest file");
    count->add_flag("--json", c_json, "emit JSON");
    count->add_flag("--track", c_track, "check call instrumentation");

    std::string vg_path, vf_path;
    std::vector<std::string> random_args;
    auto* verify = app.add_subcommand("verify", "cross-check counter and solver against oracles");
    verify->add_option("graph", vg_path, "graph file");
    verify->add_option("--forest", vf_path, "elimination forest file");
    verify->add_option("--random", random_args, "n count seed: generated batch")->expected(3);

    std::string dg_path, dout_path;
    auto* decompose = app.add_subcommand("decompose", "write a DFS elimination forest");
    decompose->add_option("graph", dg_path, "graph file")->required();
    decompose->add_option("-o,--out", dout_path, "output forest file (default stdout)");

    std::string bfamily = "cycle", bproblem = "hc";
    std::vector<int> bsizes;
    std::uint64_t bseed = 0;
    int breps = 1;
    bool b_json = false;
    auto* bench = app.add_subcommand("bench", "timed runs on generated families");
    bench->add_option("--family", bfamily, "cycle|path");
    bench->add_option("--sizes", bsizes, "instance sizes")->required();
    bench->add_option("--problem", bproblem, "hc|hp");
    bench->add_option("--seed", bseed, "rng seed");
    bench->add_option("--reps", breps, "repetitions per instance");
    bench->add_flag("--json", b_json, "emit JSON rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    set_threads(threads);
    try {
        if (solve->parsed())
            return cmd_solve(graph_path, forest_path, problem, k, l, kopt->count() > 0,
                             lopt->count() > 0, seed, reps, exact, as_json, track);
        if (count->parsed())
            return cmd_count(cg_path, cf_path, cl, clopt->count() > 0, c_json, c_track);
        if (verify->parsed()) {
            if (!random_args.empty())
                return cmd_verify("", "", true, std::stoi(random_args[0]),
                                  std::stoi(random_args[1]),
                                  std::stoull(random_args[2]));
            if (vg_path.empty()) throw std::runtime_error("verify needs a graph file or --random");
            return cmd_verify(vg_path, vf_path, false, 0, 0, 0);
        }
        if (decompose->parsed()) return cmd_decompose(dg_path, dout_path);
        if (bench->parsed()) return cmd_bench(bfamily, bsizes, bproblem, bseed, breps, b_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
