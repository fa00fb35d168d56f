#include "tdpcc/forest.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tdpcc {

std::vector<int> EliminationForest::depths() const {
    const int nv = n();
    std::vector<int> d(nv, 0);
    for (Vertex v = 1; v <= nv; ++v) {
        if (d[v - 1]) continue;
        // walk up to a root or an already-resolved vertex
        std::vector<Vertex> chain;
        Vertex w = v;
        while (w != 0 && d[w - 1] == 0) {
            chain.push_back(w);
            if (static_cast<int>(chain.size()) > nv)
                throw std::invalid_argument("forest: parent pointers contain a cycle");
            w = parent[w - 1];
        }
        int base = (w == 0) ? 0 : d[w - 1];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) d[*it - 1] = ++base;
    }
    return d;
}

int EliminationForest::depth() const {
    int t = 0;
    for (int d : depths()) t = std::max(t, d);
    return t;
}

std::vector<Vertex> EliminationForest::roots() const {
    std::vector<Vertex> r;
    for (Vertex v = 1; v <= n(); ++v)
        if (parent[v - 1] == 0) r.push_back(v);
    return r;
}

ForestCheck validate_forest(const Graph& g, const EliminationForest& f) {
    if (f.n() != g.n)
        return {false, "parent array has length " + std::to_string(f.n()) + ", expected " +
                           std::to_string(g.n)};
    for (Vertex v = 1; v <= g.n; ++v) {
        Vertex p = f.parent[v - 1];
        if (p < 0 || p > g.n)
            return {false, "parent of vertex " + std::to_string(v) + " out of range"};
        if (p == v) return {false, "not a forest: vertex " + std::to_string(v) + " is its own parent"};
    }
    // acyclicity: colors 0 unseen, 1 on current walk, 2 done
    std::vector<int> color(g.n, 0);
    for (Vertex v = 1; v <= g.n; ++v) {
        if (color[v - 1]) continue;
        std::vector<Vertex> walk;
        Vertex w = v;
        while (w != 0 && color[w - 1] == 0) {
            color[w - 1] = 1;
            walk.push_back(w);
            w = f.parent[w - 1];
        }
        if (w != 0 && color[w - 1] == 1)
            return {false, "not a forest: cycle through vertex " + std::to_string(w)};
        for (Vertex u : walk) color[u - 1] = 2;
    }
    // ancestor compatibility per edge
    auto d = f.depths();
    auto is_ancestor = [&](Vertex a, Vertex b) {  // a strict ancestor of b?
        Vertex w = f.parent[b - 1];
        while (w != 0) {
            if (w == a) return true;
            w = f.parent[w - 1];
        }
        return false;
    };
    for (const auto& e : g.edges) {
        Vertex deep = d[e.u - 1] >= d[e.v - 1] ? e.u : e.v;
        Vertex high = deep == e.u ? e.v : e.u;
        if (!is_ancestor(high, deep))
            return {false, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               "} endpoints are not in ancestor-descendant relation"};
    }
    return {};
}

std::vector<Vertex> ancestor_path(const EliminationForest& f, Vertex v) {
    std::vector<Vertex> path;
    Vertex w = f.parent[v - 1];
    while (w != 0) {
        path.push_back(w);
        if (static_cast<int>(path.size()) > f.n())
            throw std::invalid_argument("forest: parent pointers contain a cycle");
        w = f.parent[w - 1];
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> up_edge_indices(const Graph& g, const EliminationForest& f, Vertex v) {
    std::unordered_map<Vertex, int> incident;  // other endpoint -> edge index
    for (int i = 0; i < g.m(); ++i) {
        const Edge& e = g.edges[i];
        if (e.u == v) incident[e.v] = i;
        else if (e.v == v) incident[e.u] = i;
    }
    std::vector<int> out;
    for (Vertex a : ancestor_path(f, v)) {
        auto it = incident.find(a);
        if (it != incident.end()) out.push_back(it->second);
    }
    return out;
}

std::vector<Edge> up_edges(const Graph& g, const EliminationForest& f, Vertex v) {
    std::vector<Edge> out;
    for (int i : up_edge_indices(g, f, v)) out.push_back(g.edges[i]);
    return out;
}

Subdivided subdivide(const Graph& g, const EliminationForest& f) {
    auto d = f.depths();
    Subdivided s;
    std::vector<Edge> edges;
    edges.reserve(2 * g.m());
    std::vector<Vertex> parent = f.parent;
    parent.resize(g.n + g.m());
    for (int i = 0; i < g.m(); ++i) {
        const Edge& e = g.edges[i];
        Vertex p = g.n + 1 + i;
        edges.push_back({e.u, p});
        edges.push_back({e.v, p});
        if (d[e.u - 1] == d[e.v - 1])
            throw std::logic_error("subdivide: endpoints at equal depth in a validated forest");
        parent[p - 1] = d[e.u - 1] > d[e.v - 1] ? e.u : e.v;
        s.origin_edge.push_back(i);
    }
    s.graph = Graph(g.n + g.m(), std::move(edges));
    s.forest = EliminationForest{std::move(parent)};
    return s;
}

EliminationForest dfs_forest(const Graph& g) {
    auto adj = adjacency(g);
    std::vector<Vertex> parent(g.n, 0);
    std::vector<bool> seen(g.n, false);
    for (Vertex s = 1; s <= g.n; ++s) {
        if (seen[s - 1]) continue;
        seen[s - 1] = true;
        // iterative DFS; next[v] = neighbor cursor
        std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i == adj[v - 1].size()) {
                stack.pop_back();
                continue;
            }
            Vertex u = adj[v - 1][i++];
            if (!seen[u - 1]) {
                seen[u - 1] = true;
                parent[u - 1] = v;
                stack.push_back({u, 0});
            }
        }
    }
    return EliminationForest{std::move(parent)};
}

EliminationForest induced_forest(const EliminationForest& f, const std::vector<Vertex>& to_orig) {
    std::unordered_map<Vertex, int> local;  // original vertex -> local index 1..k
    for (std::size_t i = 0; i < to_orig.size(); ++i) local[to_orig[i]] = static_cast<int>(i) + 1;
    std::vector<Vertex> parent(to_orig.size(), 0);
    for (std::size_t i = 0; i < to_orig.size(); ++i) {
        Vertex w = f.parent[to_orig[i] - 1];
        while (w != 0 && !local.count(w)) w = f.parent[w - 1];
        parent[i] = (w == 0) ? 0 : local[w];
    }
    return EliminationForest{std::move(parent)};
}

std::uint64_t branch_bound(const EliminationForest& f) {
    std::uint64_t total = 0;
    for (int d : f.depths()) {
        if (d - 1 >= 32) return UINT64_MAX;
        std::uint64_t term = std::uint64_t{1} << (2 * (d - 1));
        if (total > UINT64_MAX - term) return UINT64_MAX;
        total += term;
    }
    return total;
}

}  // namespace tdpcc
