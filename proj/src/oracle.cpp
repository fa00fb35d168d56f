#include "tdpcc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace tdpcc::oracle {

namespace {

void check_pair_guard(const Graph& g) {
    if (g.n > kMaxPairVertices || g.m() > kMaxPairEdges)
        throw std::invalid_argument("oracle guard: pair enumeration limited to n <= " +
                                    std::to_string(kMaxPairVertices) + ", m <= " +
                                    std::to_string(kMaxPairEdges));
}

void check_cover_guard(const Graph& g) {
    if (g.n > kMaxCoverVertices || g.m() > kMaxCoverEdges)
        throw std::invalid_argument("oracle guard: cycle-cover enumeration limited to n <= " +
                                    std::to_string(kMaxCoverVertices) + ", m <= " +
                                    std::to_string(kMaxCoverEdges));
}

struct Matching {
    std::uint32_t edge_mask = 0;
    std::uint32_t vertex_mask = 0;
    long long weight = 0;
};

void collect_matchings(const Graph& g, const std::vector<long long>& wts, int want, int from,
                       Matching cur, int chosen, std::vector<Matching>& out) {
    if (chosen == want) {
        out.push_back(cur);
        return;
    }
    if (g.m() - from < want - chosen) return;
    for (int i = from; i < g.m(); ++i) {
        if (g.m() - i < want - chosen) break;
        const Edge& e = g.edges[i];
        std::uint32_t vm = (1u << (e.u - 1)) | (1u << (e.v - 1));
        if (cur.vertex_mask & vm) continue;
        Matching nxt{cur.edge_mask | (1u << i), cur.vertex_mask | vm, cur.weight + wts[i]};
        collect_matchings(g, wts, want, i + 1, nxt, chosen + 1, out);
    }
}

}  // namespace

PairCounts enumerate_pairs(const Graph& g, const std::vector<long long>& wts, int l) {
    check_pair_guard(g);
    if (wts.size() != static_cast<std::size_t>(g.m()))
        throw std::invalid_argument("oracle: weight vector length mismatch");
    PairCounts table;
    if (l < 0 || l > g.n || l % 2 != 0) return table;
    if (l == 0) {
        table[0] = 1;
        return table;
    }
    std::vector<Matching> all;
    collect_matchings(g, wts, l / 2, 0, {}, 0, all);
    std::unordered_map<std::uint32_t, std::vector<const Matching*>> by_vertices;
    for (const auto& m : all) by_vertices[m.vertex_mask].push_back(&m);
    for (const auto& [vm, bucket] : by_vertices)
        for (const Matching* m1 : bucket)
            for (const Matching* m2 : bucket)
                if ((m1->edge_mask & m2->edge_mask) == 0) ++table[m1->weight + m2->weight];
    return table;
}

std::map<long long, long long> eval_inclusion_exclusion_table(const Graph& g,
                                                              const std::vector<long long>& wts,
                                                              int l) {
    if (g.n > 5) throw std::invalid_argument("oracle guard: inclusion-exclusion limited to n <= 5");
    if (wts.size() != static_cast<std::size_t>(g.m()))
        throw std::invalid_argument("oracle: weight vector length mismatch");
    std::map<long long, long long> table;
    if (l < 0 || l > g.n || l % 2 != 0) return table;
    const int n = g.n;

    // members of the ground set: disjoint l/2-subsets E1, E2 plus an
    // (n-l)-subset L, each remembered as (avoided-requirements mask, weight)
    struct Member {
        std::uint32_t block = 0;  // requirements i with member NOT in A_i... inverse: see below
        long long w = 0;
    };
    // block bit i set <=> the triple fails requirement-avoidance for i,
    // i.e. i in V(E1) u L (first n bits) or i-n in V(E2) u L (second n).
    // E1/E2 in the ground set are arbitrary disjoint edge sets of size l/2,
    // not matchings.
    std::vector<Member> members;
    auto subsets_of_size = [&](int want) {
        std::vector<std::pair<std::uint32_t, long long>> out;  // (edge mask, weight)
        std::uint32_t m = g.m();
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) != want) continue;
            long long w = 0;
            for (std::uint32_t t = mask; t; t &= t - 1) w += wts[std::countr_zero(t)];
            out.push_back({mask, w});
        }
        return out;
    };
    auto vertex_mask_of = [&](std::uint32_t edge_mask) {
        std::uint32_t vm = 0;
        for (std::uint32_t t = edge_mask; t; t &= t - 1) {
            const Edge& e = g.edges[std::countr_zero(t)];
            vm |= (1u << (e.u - 1)) | (1u << (e.v - 1));
        }
        return vm;
    };
    auto halves = subsets_of_size(l / 2);
    for (const auto& [m1, w1] : halves)
        for (const auto& [m2, w2] : halves) {
            if (m1 & m2) continue;
            std::uint32_t v1 = vertex_mask_of(m1), v2 = vertex_mask_of(m2);
            for (std::uint32_t lmask = 0; lmask < (1u << n); ++lmask) {
                if (std::popcount(lmask) != n - l) continue;
                std::uint32_t block = (v1 | lmask) | ((v2 | lmask) << n);
                members.push_back({block, w1 + w2});
            }
        }

    for (std::uint32_t I = 0; I < (1u << (2 * n)); ++I) {
        const long long sign = (std::popcount(I) & 1) ? -1 : 1;
        for (const auto& mem : members)
            if ((I & mem.block) == 0) table[mem.w] += sign;
    }
    std::erase_if(table, [](const auto& kv) { return kv.second == 0; });
    return table;
}

long long eval_inclusion_exclusion(const Graph& g, const std::vector<long long>& wts, int l,
                                   long long w) {
    auto t = eval_inclusion_exclusion_table(g, wts, l);
    auto it = t.find(w);
    return it == t.end() ? 0 : it->second;
}

namespace {

struct CoverSearch {
    const Graph& g;
    std::vector<std::vector<int>> edges_of;  // per vertex, incident edge indices
    std::vector<int> last_edge;              // per vertex, largest incident edge index
    std::vector<int> deg;
    std::vector<int> chosen;
    int covered = 0;  // vertices at degree 2
    // visitor(edge list) -> keep searching?
    bool (*visit)(CoverSearch&, void*);
    void* user;
    bool stopped = false;

    explicit CoverSearch(const Graph& graph) : g(graph) {
        edges_of.resize(g.n);
        last_edge.assign(g.n, -1);
        deg.assign(g.n, 0);
        for (int i = 0; i < g.m(); ++i) {
            edges_of[g.edges[i].u - 1].push_back(i);
            edges_of[g.edges[i].v - 1].push_back(i);
            last_edge[g.edges[i].u - 1] = i;
            last_edge[g.edges[i].v - 1] = i;
        }
    }

    bool vertex_final_ok(Vertex v) const { return deg[v - 1] == 0 || deg[v - 1] == 2; }

    void run(int idx) {
        if (stopped) return;
        if (idx == g.m()) {
            if (!visit(*this, user)) stopped = true;
            return;
        }
        const Edge& e = g.edges[idx];
        // take
        if (deg[e.u - 1] < 2 && deg[e.v - 1] < 2) {
            deg[e.u - 1]++;
            deg[e.v - 1]++;
            chosen.push_back(idx);
            bool ok = true;
            if (last_edge[e.u - 1] == idx && !vertex_final_ok(e.u)) ok = false;
            if (last_edge[e.v - 1] == idx && !vertex_final_ok(e.v)) ok = false;
            if (ok) run(idx + 1);
            chosen.pop_back();
            deg[e.u - 1]--;
            deg[e.v - 1]--;
            if (stopped) return;
        }
        // skip
        if (last_edge[e.u - 1] == idx && !vertex_final_ok(e.u)) return;
        if (last_edge[e.v - 1] == idx && !vertex_final_ok(e.v)) return;
        run(idx + 1);
    }
};

struct CycleShape {
    int covered = 0;
    int cycles = 0;
    bool all_even = true;
};

CycleShape classify(const Graph& g, const std::vector<int>& chosen) {
    CycleShape s;
    std::vector<std::vector<Vertex>> adj(g.n);
    for (int i : chosen) {
        adj[g.edges[i].u - 1].push_back(g.edges[i].v);
        adj[g.edges[i].v - 1].push_back(g.edges[i].u);
    }
    std::vector<bool> seen(g.n, false);
    for (Vertex v = 1; v <= g.n; ++v) {
        if (adj[v - 1].empty() || seen[v - 1]) continue;
        // every vertex with edges has degree exactly 2, so the component is
        // a simple cycle; walk it
        int len = 0;
        Vertex prev = 0, cur = v;
        do {
            seen[cur - 1] = true;
            ++len;
            Vertex nxt = (adj[cur - 1][0] == prev) ? adj[cur - 1][1] : adj[cur - 1][0];
            prev = cur;
            cur = nxt;
        } while (cur != v);
        ++s.cycles;
        s.covered += len;
        if (len % 2) s.all_even = false;
    }
    return s;
}

}  // namespace

CoverStats enumerate_cycle_covers(const Graph& g, int l, int k) {
    check_cover_guard(g);
    CoverStats stats;
    if (l < 0 || l > g.n) return stats;
    struct Ctx {
        const Graph* g;
        int l, k;
        CoverStats* stats;
    } ctx{&g, l, k, &stats};
    CoverSearch search(g);
    search.user = &ctx;
    search.visit = [](CoverSearch& s, void* u) {
        auto* c = static_cast<Ctx*>(u);
        auto shape = classify(*c->g, s.chosen);
        if (shape.covered != c->l) return true;
        c->stats->by_cycles[shape.cycles]++;
        if (shape.cycles <= c->k) c->stats->count++;
        if (shape.all_even) c->stats->even_pair_sum += 1ull << shape.cycles;
        return true;
    };
    search.run(0);
    return stats;
}

bool decide_pcc_exact(const Graph& g, int k, int l) {
    check_cover_guard(g);
    if (l < 0 || l > g.n || k < 0) return false;
    if (l == 0) return true;  // empty cover
    struct Ctx {
        const Graph* g;
        int l, k;
        bool found = false;
    } ctx{&g, l, k};
    CoverSearch search(g);
    search.user = &ctx;
    search.visit = [](CoverSearch& s, void* u) {
        auto* c = static_cast<Ctx*>(u);
        auto shape = classify(*c->g, s.chosen);
        if (shape.covered == c->l && shape.cycles <= c->k) {
            c->found = true;
            return false;
        }
        return true;
    };
    search.run(0);
    return ctx.found;
}

std::map<std::pair<int, int>, unsigned long long> cover_histogram(const Graph& g) {
    check_cover_guard(g);
    std::map<std::pair<int, int>, unsigned long long> hist;
    struct Ctx {
        const Graph* g;
        std::map<std::pair<int, int>, unsigned long long>* hist;
    } ctx{&g, &hist};
    CoverSearch search(g);
    search.user = &ctx;
    search.visit = [](CoverSearch& s, void* u) {
        auto* c = static_cast<Ctx*>(u);
        auto shape = classify(*c->g, s.chosen);
        (*c->hist)[{shape.covered, shape.cycles}]++;
        return true;
    };
    search.run(0);
    return hist;
}

int longest_path_vertices(const Graph& g) {
    if (g.n > 20) throw std::invalid_argument("oracle guard: longest path limited to n <= 20");
    if (g.n == 0) return 0;
    const int n = g.n;
    std::vector<std::uint32_t> nbr(n, 0);
    for (const auto& e : g.edges) {
        nbr[e.u - 1] |= 1u << (e.v - 1);
        nbr[e.v - 1] |= 1u << (e.u - 1);
    }
    // ends[mask] = set of vertices at which a simple path on `mask` can end
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
    int best = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::uint32_t e = ends[mask];
        if (!e) continue;
        best = std::max(best, std::popcount(mask));
        for (std::uint32_t t = e; t; t &= t - 1) {
            int v = std::countr_zero(t);
            std::uint32_t ext = nbr[v] & ~mask;
            for (std::uint32_t s = ext; s; s &= s - 1) {
                int u = std::countr_zero(s);
                ends[mask | (1u << u)] |= 1u << u;
            }
        }
    }
    return best;
}

bool has_hamiltonian_path(const Graph& g) {
    if (g.n == 0) return true;
    return longest_path_vertices(g) == g.n;
}

}  // namespace tdpcc::oracle
