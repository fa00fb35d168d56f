#include "tdpcc/solve.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "tdpcc/parallel.hpp"
#include "tdpcc/rng.hpp"

namespace tdpcc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct RepOutcome {
    bool yes = false;
    long long witness = -1;
    CountStats stats;
};

// Lowest weight whose pair count has a nonzero residue mod 2^bits.
template <class Table, class Pred>
long long first_nonzero(const Table& t, Pred nonzero) {
    for (const auto& [w, c] : t)
        if (nonzero(c)) return w;
    return -1;
}

RepOutcome run_repetition(const Graph& g, const EliminationForest& f, int l, int bits,
                          std::uint64_t seed, std::uint64_t rep, bool exact, bool track) {
    const long long N = 2 * g.m();
    auto wts = draw_weights(seed, rep, g.m(), N);
    RepOutcome out;
    if (exact) {
        auto res = count_pairs(g, f, wts, N, l, ExactRing{}, track);
        out.stats = res.stats;
        mpz_class mod = mpz_class(1) << bits;
        out.witness = first_nonzero(res.table, [&](const mpz_class& c) { return (c % mod) != 0; });
    } else {
        auto res = count_pairs(g, f, wts, N, l, ModRing(bits), track);
        out.stats = res.stats;
        out.witness = first_nonzero(res.table, [](std::uint64_t c) { return c != 0; });
    }
    out.yes = out.witness >= 0;
    return out;
}

Verdict trivial_verdict(bool yes) {
    Verdict v;
    v.yes = yes;
    if (yes) v.witness_w = 0;  // the empty/direct cover has weight 0
    return v;
}

}  // namespace

Verdict solve_pcc_bipartite(const Graph& g, const EliminationForest& f, PccInstance inst,
                            const SolverConfig& cfg) {
    auto t0 = Clock::now();
    auto check = validate_forest(g, f);
    if (!check.ok) throw std::invalid_argument("invalid elimination forest: " + check.violation);
    if (!bipartition(g)) throw std::invalid_argument("solve_pcc_bipartite: graph is not bipartite");
    if (inst.l % 2 != 0) throw std::invalid_argument("solve_pcc_bipartite: cover size must be even");
    if (cfg.reps < 1) throw std::invalid_argument("repetitions must be >= 1");
    if (inst.k < 0 || inst.l < 0) throw std::invalid_argument("k and l must be nonnegative");

    if (inst.l == 0) return trivial_verdict(true);
    // a simple bipartite graph has girth >= 4
    if (inst.l < 4 || inst.l > g.n || inst.k == 0 || g.m() < inst.l)
        return trivial_verdict(false);

    // Covers on exactly l vertices of a bipartite graph have at most l/4
    // cycles, so clamping k preserves the answer and keeps the modulus in
    // one word.
    const int k_eff = std::min(inst.k, inst.l / 4);
    const int bits = k_eff + 1;
    if (bits > 63) throw std::invalid_argument("cycle budget too large for the modular ring");

    const int r = cfg.reps;
    std::vector<RepOutcome> outcomes(r);
    // Repetitions are independent; blocks keep the first-success semantics
    // of the serial loop (and its verdict) while running a block in
    // parallel.
    const int block = parallel_enabled() ? std::max(1, max_threads()) : 1;
    int first_yes = -1;
    for (int start = 0; start < r && first_yes < 0; start += block) {
        const int stop = std::min(r, start + block);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (block > 1)
#endif
        for (int i = start; i < stop; ++i)
            outcomes[i] = run_repetition(g, f, inst.l, bits, cfg.seed, i, cfg.exact_ring,
                                         cfg.track_calls);
        for (int i = start; i < stop && first_yes < 0; ++i)
            if (outcomes[i].yes) first_yes = i;
    }

    Verdict v;
    const int used = first_yes >= 0 ? first_yes + 1 : r;
    for (int i = 0; i < used; ++i) v.stats.merge(outcomes[i].stats);
    v.yes = first_yes >= 0;
    v.reps_used = used;
    if (v.yes) v.witness_w = outcomes[first_yes].witness;
    v.wall_ms = ms_since(t0);
    return v;
}

Verdict solve_pcc(const Graph& g, const EliminationForest& f, PccInstance inst,
                  const SolverConfig& cfg) {
    auto t0 = Clock::now();
    auto check = validate_forest(g, f);
    if (!check.ok) throw std::invalid_argument("invalid elimination forest: " + check.violation);
    if (inst.k < 0 || inst.l < 0) throw std::invalid_argument("k and l must be nonnegative");

    if (inst.l == 0) return trivial_verdict(true);
    if (inst.l > g.n || inst.l <= 2 || inst.k == 0) return trivial_verdict(false);

    auto sub = subdivide(g, f);
    Verdict v = solve_pcc_bipartite(sub.graph, sub.forest, {inst.k, 2 * inst.l}, cfg);
    v.wall_ms = ms_since(t0);
    return v;
}

Verdict solve_hamiltonian_cycle(const Graph& g, const EliminationForest& f,
                                const SolverConfig& cfg) {
    if (g.n < 3) return trivial_verdict(false);
    return solve_pcc(g, f, {1, g.n}, cfg);
}

namespace {

// Graph plus one vertex adjacent to everything, rooted above the forest.
std::pair<Graph, EliminationForest> apex_graph(const Graph& g, const EliminationForest& f) {
    const Vertex apex = g.n + 1;
    std::vector<Edge> edges = g.edges;
    for (Vertex v = 1; v <= g.n; ++v) edges.push_back({v, apex});
    std::vector<Vertex> parent = f.parent;
    for (auto& p : parent)
        if (p == 0) p = apex;
    parent.push_back(0);
    return {Graph(g.n + 1, std::move(edges)), EliminationForest{std::move(parent)}};
}

}  // namespace

Verdict solve_hamiltonian_path(const Graph& g, const EliminationForest& f,
                               const SolverConfig& cfg) {
    if (g.n <= 2) {
        // direct answers: the apex construction needs at least 3 vertices
        if (g.n <= 1) return trivial_verdict(true);
        return trivial_verdict(g.m() >= 1);
    }
    auto [ag, af] = apex_graph(g, f);
    return solve_hamiltonian_cycle(ag, af, cfg);
}

Verdict solve_long_cycle(const Graph& g, const EliminationForest& f, int l_min,
                         const SolverConfig& cfg) {
    auto t0 = Clock::now();
    if (l_min < 3) throw std::invalid_argument("solve_long_cycle: l_min must be >= 3");
    Verdict agg;
    for (int l = l_min; l <= g.n; ++l) {
        SolverConfig sub = cfg;
        sub.seed = derive_seed(cfg.seed, 0x4c43u ^ static_cast<std::uint64_t>(l));
        Verdict v = solve_pcc(g, f, {1, l}, sub);
        agg.stats.merge(v.stats);
        agg.reps_used += v.reps_used;
        if (v.yes) {
            agg.yes = true;
            agg.witness_w = v.witness_w;
            break;
        }
    }
    agg.wall_ms = ms_since(t0);
    return agg;
}

Verdict solve_long_path(const Graph& g, const EliminationForest& f, int l_min,
                        const SolverConfig& cfg) {
    if (l_min < 1) throw std::invalid_argument("solve_long_path: l_min must be >= 1");
    if (l_min <= 1) return trivial_verdict(g.n >= 1);
    if (l_min == 2) return trivial_verdict(g.m() >= 1);
    if (l_min > g.n) return trivial_verdict(false);
    // a cycle on l+1 apex-graph vertices yields a path on >= l vertices of
    // g (through the apex or not), and conversely
    auto [ag, af] = apex_graph(g, f);
    return solve_long_cycle(ag, af, l_min + 1, cfg);
}

MinCycleCover solve_min_cycle_cover(const Graph& g, const EliminationForest& f,
                                    const SolverConfig& cfg) {
    MinCycleCover out;
    for (int k = 1; k <= g.n / 3; ++k) {
        SolverConfig sub = cfg;
        sub.seed = derive_seed(cfg.seed, 0x6d6343u ^ static_cast<std::uint64_t>(k));
        Verdict v = solve_pcc(g, f, {k, g.n}, sub);
        out.verdict.stats.merge(v.stats);
        out.verdict.reps_used += v.reps_used;
        if (v.yes) {
            out.found = true;
            out.k = k;
            out.verdict.yes = true;
            out.verdict.witness_w = v.witness_w;
            break;
        }
    }
    return out;
}

}  // namespace tdpcc
