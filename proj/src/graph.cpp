#include "tdpcc/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tdpcc {

Graph::Graph(int n_, std::vector<Edge> edges_, std::vector<long long> weights_)
    : n(n_), edges(std::move(edges_)), weights(std::move(weights_)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (!weights.empty() && weights.size() != edges.size())
        throw std::invalid_argument("graph: weight count does not match edge count");
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
        if (e.u < 1 || e.v > n) throw std::invalid_argument("graph: edge endpoint out of range");
        if (!seen.insert({e.u, e.v}).second)
            throw std::invalid_argument("graph: duplicate edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
    }
    for (long long w : weights)
        if (w <= 0) throw std::invalid_argument("graph: edge weights must be positive");
}

std::vector<std::vector<Vertex>> adjacency(const Graph& g) {
    std::vector<std::vector<Vertex>> adj(g.n);
    for (const auto& e : g.edges) {
        adj[e.u - 1].push_back(e.v);
        adj[e.v - 1].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

namespace {

std::vector<int> component_ids(const Graph& g) {
    auto adj = adjacency(g);
    std::vector<int> comp(g.n, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 1; s <= g.n; ++s) {
        if (comp[s - 1] >= 0) continue;
        comp[s - 1] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : adj[v - 1])
                if (comp[u - 1] < 0) {
                    comp[u - 1] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto comp = component_ids(g);
    for (int c : comp)
        if (c != 0) return false;
    return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    auto adj = adjacency(g);
    std::vector<int> side(g.n, -1);
    std::vector<Vertex> stack;
    for (Vertex s = 1; s <= g.n; ++s) {
        if (side[s - 1] >= 0) continue;
        side[s - 1] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : adj[v - 1]) {
                if (side[u - 1] < 0) {
                    side[u - 1] = 1 - side[v - 1];
                    stack.push_back(u);
                } else if (side[u - 1] == side[v - 1]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

std::vector<Component> components(const Graph& g) {
    auto comp = component_ids(g);
    int nc = 0;
    for (int c : comp) nc = std::max(nc, c + 1);

    std::vector<Component> out(nc);
    std::vector<int> new_id(g.n, 0);  // original v-1 -> component-local vertex
    for (Vertex v = 1; v <= g.n; ++v) {
        auto& c = out[comp[v - 1]];
        c.to_orig.push_back(v);
        new_id[v - 1] = static_cast<int>(c.to_orig.size());
    }
    std::vector<std::vector<Edge>> es(nc);
    std::vector<std::vector<long long>> ws(nc);
    for (int i = 0; i < g.m(); ++i) {
        const Edge& e = g.edges[i];
        int c = comp[e.u - 1];
        es[c].push_back({new_id[e.u - 1], new_id[e.v - 1]});
        if (g.weighted()) ws[c].push_back(g.weights[i]);
        out[c].edge_to_orig.push_back(i);
    }
    for (int c = 0; c < nc; ++c)
        out[c].graph = Graph(static_cast<int>(out[c].to_orig.size()), std::move(es[c]), std::move(ws[c]));
    return out;
}

}  // namespace tdpcc
