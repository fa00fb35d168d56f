#pragma once

#include <map>
#include <vector>

#include "tdpcc/count.hpp"
#include "tdpcc/gen.hpp"
#include "tdpcc/oracle.hpp"

namespace testutil {

using namespace tdpcc;

inline std::vector<long long> unit_weights(const Graph& g) {
    return std::vector<long long>(g.m(), 1);
}

inline PairTable<ExactRing> to_exact(const oracle::PairCounts& counts) {
    PairTable<ExactRing> t;
    for (const auto& [w, c] : counts) t[w] = mpz_class(static_cast<unsigned long>(c));
    return t;
}

// Exact pipeline count for one (graph, weights, l); tight caps.
inline PairTable<ExactRing> exact_count(const Graph& g, const EliminationForest& f,
                                        const std::vector<long long>& wts, long long N, int l,
                                        CountStats* stats = nullptr) {
    auto res = count_pairs(g, f, wts, N, l, ExactRing{}, true);
    if (stats) *stats = res.stats;
    return res.table;
}

}  // namespace testutil
