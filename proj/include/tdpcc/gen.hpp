#pragma once

#include <vector>

#include "tdpcc/forest.hpp"
#include "tdpcc/graph.hpp"
#include "tdpcc/rng.hpp"

namespace tdpcc {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

// 1 -> 2 -> ... -> n
EliminationForest chain_forest(int n);
// Balanced elimination tree for path_graph(n): recursive midpoints,
// depth ceil(log2(n+1)).
EliminationForest balanced_path_forest(int n);
// For cycle_graph(n): vertex 1 on top, balanced tree of the remaining path
// underneath; depth 1 + ceil(log2 n).
EliminationForest balanced_cycle_forest(int n);
// Hand-derived depth-7 elimination tree for petersen_graph().
EliminationForest petersen_forest();

struct GraphForest {
    Graph g;
    EliminationForest f;
};

// Disjoint cycles (lengths >= 3) with a balanced forest per cycle.
GraphForest disjoint_cycles(const std::vector<int>& lengths);

// Random graph sampled forest-first: a random rooted forest of depth at
// most max_depth, then each ancestor-descendant pair becomes an edge with
// probability edge_prob (parent-child pairs with probability
// parent_edge_prob). The forest is a valid certificate by construction.
GraphForest random_bounded_depth(int n, int max_depth, double edge_prob, double parent_edge_prob,
                                 Rng& rng);

// Random connected labeled graph via rejection; edge probability p.
Graph random_connected(int n, double p, Rng& rng);

// All labeled connected graphs on n vertices (n <= 6).
std::vector<Graph> all_connected_graphs(int n);
// All labeled graphs on n vertices (n <= 5), including disconnected ones.
std::vector<Graph> all_graphs(int n);

std::vector<long long> random_weights(Rng& rng, int m, long long N);

}  // namespace tdpcc
