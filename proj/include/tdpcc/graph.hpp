#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tdpcc {

// Vertices are 1..n throughout.
using Vertex = int;

struct Edge {
    Vertex u = 0, v = 0;  // normalized u < v
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Edge weights are optional positive integers;
// an empty weight vector means "unweighted".
struct Graph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<long long> weights;  // per edge, same order as `edges`, or empty

    Graph() = default;
    Graph(int n, std::vector<Edge> edges, std::vector<long long> weights = {});

    int m() const { return static_cast<int>(edges.size()); }
    bool weighted() const { return !weights.empty(); }
};

// Neighbor lists indexed v-1, each sorted ascending.
std::vector<std::vector<Vertex>> adjacency(const Graph& g);

bool is_connected(const Graph& g);

// 0/1 side per vertex (index v-1) if bipartite, nullopt otherwise.
std::optional<std::vector<int>> bipartition(const Graph& g);

struct Component {
    Graph graph;                   // relabeled 1..n_i
    std::vector<Vertex> to_orig;   // to_orig[v-1] = original vertex
    std::vector<int> edge_to_orig; // component edge index -> original edge index
};

// Connected components as standalone graphs, ordered by smallest original
// vertex; relabeling preserves relative vertex order and edge weights.
std::vector<Component> components(const Graph& g);

}  // namespace tdpcc
