#pragma once

#include <cstdint>
#include <string>

#include "tdpcc/count.hpp"
#include "tdpcc/forest.hpp"
#include "tdpcc/graph.hpp"

namespace tdpcc {

// k: maximum number of vertex-disjoint cycles; l: exact number of covered
// vertices.
struct PccInstance {
    int k = 0;
    int l = 0;
};

// reps repetitions with per-repetition false-negative probability <= 1/2,
// so overall <= 2^-reps. Weight draws come from mt19937_64 substreams
// derived from (seed, repetition index). The modular ring is the default;
// exact_ring counts with arbitrary precision and reduces before the test.
struct SolverConfig {
    std::uint64_t seed = 0;
    int reps = 16;
    bool exact_ring = false;
    bool track_calls = false;
};

struct Verdict {
    bool yes = false;
    int reps_used = 0;        // 1-based index of the first successful repetition, or total run
    long long witness_w = -1; // weight with a nonzero residue, when yes
    double wall_ms = 0;       // excluded from determinism guarantees
    CountStats stats;
};

// Randomized decision for bipartite graphs: no false positives; false
// negative probability at most 2^-reps.
Verdict solve_pcc_bipartite(const Graph& g, const EliminationForest& f, PccInstance inst,
                            const SolverConfig& cfg);

// General graphs: trivial sizes answered directly, otherwise reduce to the
// bipartite case by subdividing every edge (cover size doubles, forest
// depth grows by one).
Verdict solve_pcc(const Graph& g, const EliminationForest& f, PccInstance inst,
                  const SolverConfig& cfg);

Verdict solve_hamiltonian_cycle(const Graph& g, const EliminationForest& f, const SolverConfig& cfg);

// Universal apex vertex above the forest; a Hamiltonian cycle of the apex
// graph traverses the apex between the endpoints of a Hamiltonian path.
Verdict solve_hamiltonian_path(const Graph& g, const EliminationForest& f, const SolverConfig& cfg);

// Yes iff some single cycle covers at least l_min vertices; one full solve
// per candidate length, each with the full repetition budget.
Verdict solve_long_cycle(const Graph& g, const EliminationForest& f, int l_min,
                         const SolverConfig& cfg);

Verdict solve_long_path(const Graph& g, const EliminationForest& f, int l_min,
                        const SolverConfig& cfg);

struct MinCycleCover {
    bool found = false;
    int k = 0;  // smallest k with a yes answer; never smaller than the truth
    Verdict verdict;
};

MinCycleCover solve_min_cycle_cover(const Graph& g, const EliminationForest& f,
                                    const SolverConfig& cfg);

}  // namespace tdpcc
