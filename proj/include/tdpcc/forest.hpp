#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tdpcc/graph.hpp"

namespace tdpcc {

// Rooted forest on the graph's vertex set. parent[v-1] is the parent of v,
// 0 marks a root. Depth counts vertices on a root-to-leaf path.
struct EliminationForest {
    std::vector<Vertex> parent;

    int n() const { return static_cast<int>(parent.size()); }
    // Per-vertex depth (roots have depth 1). Throws if the parent pointers
    // contain a cycle.
    std::vector<int> depths() const;
    int depth() const;
    std::vector<Vertex> roots() const;
};

struct ForestCheck {
    bool ok = true;
    std::string violation;  // names the first offending edge or cycle
};

// Total validity check: parent length, acyclicity, and every graph edge
// joining an ancestor-descendant pair. A connected graph split across two
// trees necessarily has a crossing edge, so component containment follows.
ForestCheck validate_forest(const Graph& g, const EliminationForest& f);

// Strict ancestors of v, ordered root-first.
std::vector<Vertex> ancestor_path(const EliminationForest& f, Vertex v);

// Edges joining v to a strict ancestor, ancestors root-first.
std::vector<Edge> up_edges(const Graph& g, const EliminationForest& f, Vertex v);
// Same edges as indices into g.edges.
std::vector<int> up_edge_indices(const Graph& g, const EliminationForest& f, Vertex v);

struct Subdivided {
    Graph graph;                  // n+m vertices, 2m edges, bipartite
    EliminationForest forest;     // depth <= depth(f) + 1
    std::vector<int> origin_edge; // origin_edge[i] = edge index replaced by vertex n+1+i
};

// Replace each edge {u,v} by a fresh vertex adjacent to u and v. The fresh
// vertex becomes a child of the deeper endpoint, which is well defined
// because the endpoints are ancestor-related in any valid forest.
Subdivided subdivide(const Graph& g, const EliminationForest& f);

// DFS-tree heuristic: valid elimination forest (every non-tree edge is a
// back edge), depth may exceed treedepth. Roots are the lowest-numbered
// vertex of each component; neighbors are explored in ascending order.
EliminationForest dfs_forest(const Graph& g);

// Restriction of f to the vertices of one component (given as the
// component's to_orig map): each vertex keeps its nearest ancestor inside
// the component. Ancestor relations among kept vertices are preserved.
EliminationForest induced_forest(const EliminationForest& f, const std::vector<Vertex>& to_orig);

// Sum over vertices of 4^(depth(v)-1), saturating at UINT64_MAX.
std::uint64_t branch_bound(const EliminationForest& f);

}  // namespace tdpcc
