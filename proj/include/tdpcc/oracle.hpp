#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tdpcc/graph.hpp"

// Brute-force reference implementations used for cross-validation only;
// nothing here is on the solve path. Hard size guards keep runtimes
// deterministic; exceeding a guard throws std::invalid_argument.
namespace tdpcc::oracle {

inline constexpr int kMaxPairVertices = 14;
inline constexpr int kMaxPairEdges = 20;
inline constexpr int kMaxCoverVertices = 24;
inline constexpr int kMaxCoverEdges = 32;

using PairCounts = std::map<long long, unsigned long long>;

// Ordered pairs of disjoint matchings of l/2 edges each with equal vertex
// sets, tabulated by total weight.
PairCounts enumerate_pairs(const Graph& g, const std::vector<long long>& wts, int l);

// Literal alternating sum over all subsets of the 2n requirements: each
// subset contributes (-1)^|I| times the number of (E1,E2,L) triples that
// avoid every requirement in I.
long long eval_inclusion_exclusion(const Graph& g, const std::vector<long long>& wts, int l,
                                   long long w);
// Same sum for every weight at once.
std::map<long long, long long> eval_inclusion_exclusion_table(const Graph& g,
                                                              const std::vector<long long>& wts,
                                                              int l);

struct CoverStats {
    unsigned long long count = 0;                  // covers on exactly l vertices with <= k cycles
    std::map<int, unsigned long long> by_cycles;   // cycle count -> covers on exactly l vertices
    unsigned long long even_pair_sum = 0;          // sum of 2^p over even-cycle-only covers
};

// All edge subsets in which every vertex has degree 0 or 2, restricted to
// exactly l covered vertices.
CoverStats enumerate_cycle_covers(const Graph& g, int l, int k);

bool decide_pcc_exact(const Graph& g, int k, int l);

// (covered vertices, cycle count) -> number of covers; one enumeration
// serves every (l,k) query.
std::map<std::pair<int, int>, unsigned long long> cover_histogram(const Graph& g);

// Longest simple path (vertex count) via subset DP; guard n <= 20.
int longest_path_vertices(const Graph& g);
bool has_hamiltonian_path(const Graph& g);

}  // namespace tdpcc::oracle
