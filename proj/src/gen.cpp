#include "tdpcc/gen.hpp"

#include <functional>
#include <stdexcept>

namespace tdpcc {

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.push_back({v, v + 1});
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.push_back({v, v + 1});
    e.push_back({1, n});
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int v = 2; v <= leaves + 1; ++v) e.push_back({1, v});
    return Graph(leaves + 1, std::move(e));
}

Graph petersen_graph() {
    std::vector<Edge> e = {{1, 2}, {2, 3}, {3, 4}, {4, 5},  {1, 5},   // outer cycle
                           {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9},  // inner pentagram
                           {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}};  // spokes
    return Graph(10, std::move(e));
}

EliminationForest chain_forest(int n) {
    std::vector<Vertex> parent(n, 0);
    for (int v = 2; v <= n; ++v) parent[v - 1] = v - 1;
    return EliminationForest{std::move(parent)};
}

namespace {

void build_balanced(std::vector<Vertex>& parent, int lo, int hi, Vertex up) {
    if (lo > hi) return;
    int mid = (lo + hi) / 2;
    parent[mid - 1] = up;
    build_balanced(parent, lo, mid - 1, mid);
    build_balanced(parent, mid + 1, hi, mid);
}

}  // namespace

EliminationForest balanced_path_forest(int n) {
    std::vector<Vertex> parent(n, 0);
    build_balanced(parent, 1, n, 0);
    return EliminationForest{std::move(parent)};
}

EliminationForest balanced_cycle_forest(int n) {
    std::vector<Vertex> parent(n, 0);
    build_balanced(parent, 2, n, 1);
    return EliminationForest{std::move(parent)};
}

EliminationForest petersen_forest() {
    //      1 - 6 - 10 - 3 - {8, 9 - {7 - 2, 4 - 5}}
    std::vector<Vertex> parent(10, 0);
    auto set = [&](Vertex v, Vertex p) { parent[v - 1] = p; };
    set(6, 1);
    set(10, 6);
    set(3, 10);
    set(8, 3);
    set(9, 3);
    set(7, 9);
    set(4, 9);
    set(2, 7);
    set(5, 4);
    return EliminationForest{std::move(parent)};
}

GraphForest disjoint_cycles(const std::vector<int>& lengths) {
    std::vector<Edge> edges;
    std::vector<Vertex> parent;
    int base = 0;
    for (int len : lengths) {
        if (len < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
        for (int v = 1; v < len; ++v) edges.push_back({base + v, base + v + 1});
        edges.push_back({base + 1, base + len});
        auto f = balanced_cycle_forest(len);
        for (Vertex p : f.parent) parent.push_back(p == 0 ? 0 : base + p);
        base += len;
    }
    return {Graph(base, std::move(edges)), EliminationForest{std::move(parent)}};
}

GraphForest random_bounded_depth(int n, int max_depth, double edge_prob, double parent_edge_prob,
                                 Rng& rng) {
    if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
    std::vector<Vertex> parent(n, 0);
    std::vector<int> depth(n, 1);
    for (int v = 2; v <= n; ++v) {
        if (rng.unit() < 0.12) continue;  // new root
        // pick among earlier vertices that still have room below them
        std::vector<Vertex> cand;
        for (int u = 1; u < v; ++u)
            if (depth[u - 1] < max_depth) cand.push_back(u);
        if (cand.empty()) continue;
        Vertex p = cand[rng.below(cand.size())];
        parent[v - 1] = p;
        depth[v - 1] = depth[p - 1] + 1;
    }
    EliminationForest f{parent};
    std::vector<Edge> edges;
    for (int v = 1; v <= n; ++v) {
        Vertex p = parent[v - 1];
        for (Vertex a : ancestor_path(f, v)) {
            double prob = (a == p) ? parent_edge_prob : edge_prob;
            if (rng.unit() < prob) edges.push_back({a, v});
        }
    }
    return {Graph(n, std::move(edges)), std::move(f)};
}

Graph random_connected(int n, double p, Rng& rng) {
    for (int tries = 0; tries < 100000; ++tries) {
        std::vector<Edge> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.unit() < p) edges.push_back({u, v});
        Graph g(n, std::move(edges));
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected: rejection sampling failed");
}

namespace {

std::vector<Graph> graphs_from_masks(int n, bool connected_only) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.push_back({u, v});
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1) edges.push_back({slots[i].first, slots[i].second});
        Graph g(n, std::move(edges));
        if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

std::vector<Graph> all_connected_graphs(int n) {
    if (n > 6) throw std::invalid_argument("all_connected_graphs limited to n <= 6");
    return graphs_from_masks(n, true);
}

std::vector<Graph> all_graphs(int n) {
    if (n > 5) throw std::invalid_argument("all_graphs limited to n <= 5");
    return graphs_from_masks(n, false);
}

std::vector<long long> random_weights(Rng& rng, int m, long long N) {
    std::vector<long long> w(m);
    for (auto& x : w) x = rng.weight(N);
    return w;
}

}  // namespace tdpcc
