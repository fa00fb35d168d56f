#include <doctest.h>

#include "tdpcc/gen.hpp"
#include "tdpcc/oracle.hpp"
#include "tdpcc/solve.hpp"
#include "testutil.hpp"

using namespace tdpcc;

namespace {

SolverConfig cfg_with(std::uint64_t seed, int reps = 16) {
    SolverConfig c;
    c.seed = seed;
    c.reps = reps;
    c.track_calls = true;
    return c;
}

}  // namespace

TEST_CASE("bipartite solver on C4 answers yes for every seed and repetition") {
    auto c4 = cycle_graph(4);
    auto f = dfs_forest(c4);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto v = solve_pcc_bipartite(c4, f, {1, 4}, cfg_with(seed, 1));
        CHECK(v.yes);
        CHECK(v.reps_used == 1);
        CHECK(v.witness_w >= 4);
    }
}

TEST_CASE("bipartite solver never answers yes on C6 with l=4") {
    auto c6 = cycle_graph(6);
    auto f = dfs_forest(c6);
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK_FALSE(solve_pcc_bipartite(c6, f, {1, 4}, cfg_with(seed, 4)).yes);
}

TEST_CASE("bipartite solver rejects odd graphs and odd l") {
    auto k3 = complete_graph(3);
    CHECK_THROWS_AS(solve_pcc_bipartite(k3, dfs_forest(k3), {1, 2}, cfg_with(0)),
                    std::invalid_argument);
    auto c4 = cycle_graph(4);
    CHECK_THROWS_AS(solve_pcc_bipartite(c4, dfs_forest(c4), {1, 3}, cfg_with(0)),
                    std::invalid_argument);
}

TEST_CASE("two C6s cannot be covered by one cycle") {
    auto two = disjoint_cycles({6, 6});
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        CHECK_FALSE(solve_pcc_bipartite(two.g, two.f, {1, 12}, cfg_with(seed, 4)).yes);
    CHECK(solve_pcc_bipartite(two.g, two.f, {2, 12}, cfg_with(3)).yes);
}

TEST_CASE("general solver trivial cases") {
    auto p4 = path_graph(4);
    auto f = dfs_forest(p4);
    CHECK(solve_pcc(p4, f, {0, 0}, cfg_with(1)).yes);   // empty cover
    CHECK(solve_pcc(p4, f, {2, 0}, cfg_with(1)).yes);
    CHECK_FALSE(solve_pcc(p4, f, {1, 1}, cfg_with(1)).yes);
    CHECK_FALSE(solve_pcc(p4, f, {1, 2}, cfg_with(1)).yes);
    CHECK_FALSE(solve_pcc(p4, f, {0, 3}, cfg_with(1)).yes);
    CHECK_FALSE(solve_pcc(p4, f, {1, 5}, cfg_with(1)).yes);
    CHECK_THROWS_AS(solve_pcc(p4, EliminationForest{{0, 0, 0, 0}}, {1, 4}, cfg_with(1)),
                    std::invalid_argument);
}

TEST_CASE("general solver on small named graphs") {
    auto cfg = cfg_with(99);
    auto k3 = complete_graph(3);
    CHECK(solve_pcc(k3, dfs_forest(k3), {1, 3}, cfg).yes);
    auto p4 = path_graph(4);
    CHECK_FALSE(solve_pcc(p4, dfs_forest(p4), {1, 4}, cfg).yes);
    auto two = disjoint_cycles({3, 3});
    CHECK(solve_pcc(two.g, two.f, {2, 6}, cfg).yes);
    CHECK_FALSE(solve_pcc(two.g, two.f, {1, 6}, cfg).yes);
    CHECK(oracle::decide_pcc_exact(two.g, 2, 6));
    CHECK_FALSE(oracle::decide_pcc_exact(two.g, 1, 6));
}

TEST_CASE("hamiltonian cycle") {
    auto cfg = cfg_with(5);
    auto c5 = cycle_graph(5);
    CHECK(solve_hamiltonian_cycle(c5, dfs_forest(c5), cfg).yes);
    auto p4 = path_graph(4);
    CHECK_FALSE(solve_hamiltonian_cycle(p4, dfs_forest(p4), cfg).yes);
    Graph tiny(2, {{1, 2}});
    CHECK_FALSE(solve_hamiltonian_cycle(tiny, dfs_forest(tiny), cfg).yes);
}

TEST_CASE("petersen graph is never reported hamiltonian") {
    auto g = petersen_graph();
    auto f = petersen_forest();
    REQUIRE(validate_forest(g, f).ok);
    CHECK_FALSE(oracle::decide_pcc_exact(g, 1, 10));
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        CHECK_FALSE(solve_hamiltonian_cycle(g, f, cfg_with(seed, 2)).yes);
}

TEST_CASE("hamiltonian path via the apex reduction") {
    auto cfg = cfg_with(17);
    auto p4 = path_graph(4);
    CHECK(solve_hamiltonian_path(p4, dfs_forest(p4), cfg).yes);
    auto star = star_graph(3);
    CHECK_FALSE(solve_hamiltonian_path(star, dfs_forest(star), cfg).yes);
    Graph one(1, {});
    CHECK(solve_hamiltonian_path(one, dfs_forest(one), cfg).yes);
    Graph two_iso(2, {});
    CHECK_FALSE(solve_hamiltonian_path(two_iso, dfs_forest(two_iso), cfg).yes);
    Graph two_edge(2, {{1, 2}});
    CHECK(solve_hamiltonian_path(two_edge, dfs_forest(two_edge), cfg).yes);
}

TEST_CASE("long cycle") {
    auto cfg = cfg_with(23);
    Graph c6_chord(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 3}});
    CHECK(solve_long_cycle(c6_chord, dfs_forest(c6_chord), 3, cfg).yes);
    auto c6 = cycle_graph(6);
    CHECK_FALSE(solve_long_cycle(c6, dfs_forest(c6), 7, cfg).yes);
    auto tree = star_graph(4);
    CHECK_FALSE(solve_long_cycle(tree, dfs_forest(tree), 3, cfg).yes);
    CHECK_THROWS_AS(solve_long_cycle(c6, dfs_forest(c6), 2, cfg), std::invalid_argument);
}

TEST_CASE("long path") {
    auto cfg = cfg_with(29);
    auto p4 = path_graph(4);
    CHECK(solve_long_path(p4, dfs_forest(p4), 4, cfg).yes);
    CHECK_FALSE(solve_long_path(p4, dfs_forest(p4), 5, cfg).yes);
    auto k3 = complete_graph(3);
    CHECK(solve_long_path(k3, dfs_forest(k3), 3, cfg).yes);
    CHECK(solve_long_path(k3, dfs_forest(k3), 1, cfg).yes);
    CHECK(solve_long_path(k3, dfs_forest(k3), 2, cfg).yes);
}

TEST_CASE("min cycle cover") {
    auto cfg = cfg_with(31);
    auto c6 = cycle_graph(6);
    auto r1 = solve_min_cycle_cover(c6, dfs_forest(c6), cfg);
    CHECK(r1.found);
    CHECK(r1.k == 1);
    auto two = disjoint_cycles({3, 3});
    auto r2 = solve_min_cycle_cover(two.g, two.f, cfg);
    CHECK(r2.found);
    CHECK(r2.k == 2);
    auto p4 = path_graph(4);
    CHECK_FALSE(solve_min_cycle_cover(p4, dfs_forest(p4), cfg).found);
}

TEST_CASE("verdicts are deterministic under a fixed seed") {
    Rng rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        auto inst = random_bounded_depth(9, 4, 0.4, 0.7, rng);
        int k = 1 + static_cast<int>(rng.below(2));
        int l = static_cast<int>(rng.below(inst.g.n + 1));
        auto a = solve_pcc(inst.g, inst.f, {k, l}, cfg_with(777, 4));
        auto b = solve_pcc(inst.g, inst.f, {k, l}, cfg_with(777, 4));
        CHECK(a.yes == b.yes);
        CHECK(a.reps_used == b.reps_used);
        CHECK(a.witness_w == b.witness_w);
        CHECK(a.stats.calls == b.stats.calls);
    }
}

TEST_CASE("exact-ring solving agrees with the modular ring") {
    Rng rng(666);
    for (int trial = 0; trial < 8; ++trial) {
        auto inst = random_bounded_depth(8, 4, 0.4, 0.7, rng);
        int k = 1 + static_cast<int>(rng.below(2));
        int l = static_cast<int>(rng.below(inst.g.n + 1));
        auto mod_cfg = cfg_with(42, 3);
        auto exact_cfg = mod_cfg;
        exact_cfg.exact_ring = true;
        auto a = solve_pcc(inst.g, inst.f, {k, l}, mod_cfg);
        auto b = solve_pcc(inst.g, inst.f, {k, l}, exact_cfg);
        CHECK(a.yes == b.yes);
        CHECK(a.reps_used == b.reps_used);
        CHECK(a.witness_w == b.witness_w);
    }
}

TEST_CASE("solver agrees with the exact decider on random small instances") {
    Rng rng(912);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = random_bounded_depth(8, 4, 0.4, 0.7, rng);
        int k = static_cast<int>(rng.below(3));
        int l = static_cast<int>(rng.below(inst.g.n + 1));
        bool truth = oracle::decide_pcc_exact(inst.g, k, l);
        bool got = solve_pcc(inst.g, inst.f, {k, l}, cfg_with(rng.next(), 16)).yes;
        CHECK(got == truth);
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("isolation weights come from {1..2m}") {
    // structural wiring check: N = 2|E| makes the uniqueness probability
    // at least 1 - m/N = 1/2
    auto ws = draw_weights(123, 0, 20, 40);
    CHECK(ws.size() == 20);
    for (long long w : ws) {
        CHECK(w >= 1);
        CHECK(w <= 40);
    }
    // substreams differ per repetition
    CHECK(draw_weights(123, 1, 20, 40) != ws);
    CHECK(draw_weights(123, 0, 20, 40) == ws);
}
