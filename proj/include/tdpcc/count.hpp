#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "tdpcc/forest.hpp"
#include "tdpcc/graph.hpp"
#include "tdpcc/poly.hpp"
#include "tdpcc/rng.hpp"

namespace tdpcc {

// Requirement-label subset for one node, indexed by ancestor-path position:
// bit 2i selects the first-matching requirement of the ancestor at position
// i (root-first), bit 2i+1 the second-matching one. Membership, union and
// parity are O(1); width 2*depth <= 62 bits.
struct LabelSet {
    std::uint64_t bits = 0;

    bool contains(int pos, bool second) const { return (bits >> (2 * pos + (second ? 1 : 0))) & 1; }
    LabelSet with(int pos, bool second) const {
        return LabelSet{bits | (std::uint64_t{1} << (2 * pos + (second ? 1 : 0)))};
    }
    int size() const { return std::popcount(bits); }
    friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

struct CountStats {
    std::uint64_t calls = 0;
    int max_depth = 0;            // deepest recursion level reached
    std::uint64_t bound = 0;      // sum over vertices of 4^(depth-1), all evaluations
    int forest_depth = 0;         // depth of the deepest forest evaluated
    int runs = 0;                 // completed root evaluations
    bool tracked = false;
    bool dup_free = true;         // no repeated (v, labels) call, when tracked

    bool depth_ok() const { return max_depth <= forest_depth; }
    bool calls_ok() const { return calls <= bound; }

    void merge(const CountStats& o) {
        calls += o.calls;
        max_depth = std::max(max_depth, o.max_depth);
        bound = (bound > UINT64_MAX - o.bound) ? UINT64_MAX : bound + o.bound;
        forest_depth = std::max(forest_depth, o.forest_depth);
        runs += o.runs;
        tracked = tracked || o.tracked;
        dup_free = dup_free && o.dup_free;
    }
};

// Everything one recursive evaluation needs: validated (graph, forest)
// pair, edge weights in {1..N}, degree caps, coefficient ring, and
// instrumentation counters (always on; per-(v,labels) call tracking is
// optional).
template <class R>
class CountingContext {
  public:
    CountingContext(Graph g, EliminationForest f, std::vector<long long> wts, long long N,
                    DegreeCaps caps, R ring, bool track_calls = false)
        : g_(std::move(g)),
          f_(std::move(f)),
          wts_(std::move(wts)),
          N_(N),
          caps_(caps),
          ring_(ring),
          track_(track_calls) {
        auto check = validate_forest(g_, f_);
        if (!check.ok) throw std::invalid_argument("invalid elimination forest: " + check.violation);
        if (g_.n > 1023 || g_.m() > 1023)
            throw std::invalid_argument("counting supports at most 1023 vertices/edges");
        if (wts_.size() != static_cast<std::size_t>(g_.m()))
            throw std::invalid_argument("weight vector length mismatch");
        for (long long w : wts_)
            if (w < 1 || w > N_) throw std::invalid_argument("edge weight outside [1,N]");

        depth_ = f_.depths();
        int tau = 0;
        for (int d : depth_) tau = std::max(tau, d);
        if (tau > 31) throw std::invalid_argument("forest depth > 31 not supported");
        tau_ = tau;

        children_.assign(g_.n, {});
        for (Vertex v = 1; v <= g_.n; ++v)
            if (f_.parent[v - 1] != 0) children_[f_.parent[v - 1] - 1].push_back(v);
        for (Vertex v = 1; v <= g_.n; ++v)
            if (f_.parent[v - 1] == 0) roots_.push_back(v);

        // up-edges with the ancestor's path position, ancestors root-first
        up_.assign(g_.n, {});
        for (Vertex v = 1; v <= g_.n; ++v) {
            auto path = ancestor_path(f_, v);
            std::vector<int> pos_of(g_.n + 1, -1);
            for (std::size_t i = 0; i < path.size(); ++i) pos_of[path[i]] = static_cast<int>(i);
            std::vector<std::pair<int, long long>> found;  // (position, weight)
            for (int ei = 0; ei < g_.m(); ++ei) {
                const Edge& e = g_.edges[ei];
                Vertex other = e.u == v ? e.v : (e.v == v ? e.u : 0);
                if (other == 0) continue;
                if (pos_of[other] >= 0) found.push_back({pos_of[other], wts_[ei]});
            }
            std::sort(found.begin(), found.end());
            for (auto& [p, w] : found) up_[v - 1].push_back({p, w});
        }
        if (track_) seen_.assign(g_.n, {});
    }

    const Graph& graph() const { return g_; }
    const EliminationForest& forest() const { return f_; }
    const DegreeCaps& caps() const { return caps_; }
    const R& ring() const { return ring_; }
    long long N() const { return N_; }
    int tau() const { return tau_; }
    const std::vector<Vertex>& roots() const { return roots_; }

    CountStats stats() const {
        CountStats s;
        s.calls = calls_;
        s.max_depth = max_depth_;
        s.bound = branch_bound(f_);
        s.forest_depth = tau_;
        s.runs = runs_;
        s.tracked = track_;
        s.dup_free = !dup_;
        return s;
    }

    // Test hooks: evaluation order must not matter.
    void shuffle_children(std::uint64_t seed) {
        Rng rng(seed);
        for (auto& cs : children_)
            for (std::size_t i = cs.size(); i > 1; --i) std::swap(cs[i - 1], cs[rng.below(i)]);
    }
    void set_selection_order(std::array<unsigned, 4> order) { sel_order_ = order; }

    struct UpEdge {
        int pos;
        long long w;
    };

    // internal state shared with the recursion
    Graph g_;
    EliminationForest f_;
    std::vector<long long> wts_;
    long long N_;
    DegreeCaps caps_;
    R ring_;
    bool track_;
    int tau_ = 0;
    std::vector<int> depth_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<std::vector<UpEdge>> up_;
    std::vector<Vertex> roots_;
    std::array<unsigned, 4> sel_order_{0, 1, 2, 3};

    std::uint64_t calls_ = 0;
    int max_depth_ = 0;
    int runs_ = 0;
    bool dup_ = false;
    std::vector<std::unordered_set<std::uint64_t>> seen_;
};

// Signed generating polynomial of the partial assignments on the subtree of
// v, given the requirement labels already fixed on v's ancestor path. The
// four label choices for v itself are branched here; each branch multiplies
// the uncovered-vertex option, one factor per edge to an ancestor, and the
// child polynomials.
template <class R>
Poly<R> subtree_poly(CountingContext<R>& ctx, Vertex v, LabelSet labels) {
    const int depth = ctx.depth_[v - 1];
    const int pos = depth - 1;
    if (labels.bits >> (2 * pos))
        throw std::logic_error("label outside the ancestor path of vertex " + std::to_string(v));

    ++ctx.calls_;
    ctx.max_depth_ = std::max(ctx.max_depth_, depth);
    if (ctx.track_ && !ctx.seen_[v - 1].insert(labels.bits).second) ctx.dup_ = true;

    const R& ring = ctx.ring_;
    Poly<R> result(ctx.caps_, ring);
    for (unsigned si = 0; si < 4; ++si) {
        const unsigned sel = ctx.sel_order_[si];  // bit0: require v, bit1: require v+n
        const std::uint64_t full = labels.bits | (std::uint64_t{sel} << (2 * pos));

        // (-1)^|sel| and, when no requirement is placed on v, the option of
        // leaving v uncovered
        const auto unit = (std::popcount(sel) & 1) ? ring.neg(ring.one()) : ring.one();
        std::vector<std::tuple<int, int, int, long long, typename R::Value>> base;
        base.push_back({0, 0, 0, 0, unit});
        if (sel == 0) base.push_back({0, 0, 1, 0, unit});
        Poly<R> summand = Poly<R>::from_terms(ctx.caps_, ring, std::move(base));

        const bool v_first = (full >> (2 * pos)) & 1;
        const bool v_second = (full >> (2 * pos + 1)) & 1;
        for (const auto& ue : ctx.up_[v - 1]) {
            const bool first_free = !v_first && !((full >> (2 * ue.pos)) & 1);
            const bool second_free = !v_second && !((full >> (2 * ue.pos + 1)) & 1);
            if (!first_free && !second_free) continue;  // factor is 1
            std::vector<std::tuple<int, int, int, long long, typename R::Value>> ft;
            ft.push_back({0, 0, 0, 0, ring.one()});
            if (first_free) ft.push_back({1, 0, 0, ue.w, ring.one()});
            if (second_free) ft.push_back({0, 1, 0, ue.w, ring.one()});
            summand = poly_mul(summand, Poly<R>::from_terms(ctx.caps_, ring, std::move(ft)));
            if (summand.empty()) break;
        }
        if (!summand.empty()) {
            for (Vertex u : ctx.children_[v - 1]) {
                summand = poly_mul(summand, subtree_poly(ctx, u, LabelSet{full}));
                if (summand.empty()) break;
            }
        }
        result = poly_add(result, summand);
    }
    return result;
}

template <class R>
using PairTable = std::map<long long, typename R::Value>;

// Counts of ordered consistent-matching pairs covering exactly l vertices,
// keyed by total weight, for a connected graph. One root evaluation yields
// the counts for every weight.
template <class R>
PairTable<R> count_pairs_connected(CountingContext<R>& ctx, int l) {
    const int n = ctx.graph().n;
    if (l < 0 || l > n || (l % 2) != 0)
        throw std::invalid_argument("cover size must be even and within [0, n]");
    PairTable<R> table;
    if (l == 0) {
        table[0] = ctx.ring().one();
        return table;
    }
    if (ctx.roots().size() != 1)
        throw std::invalid_argument("count_pairs_connected requires a connected graph");
    if (ctx.caps().e1 < l / 2 || ctx.caps().e2 < l / 2 || ctx.caps().unc < n - l)
        throw std::invalid_argument("degree caps too small for requested cover size");

    auto P = subtree_poly(ctx, ctx.roots()[0], LabelSet{});
    ++ctx.runs_;
    for (long long w = 0; w <= ctx.caps().wt; ++w) {
        auto c = P.coefficient(l / 2, l / 2, n - l, w);
        if (!ctx.ring().is_zero(c)) table[w] = c;
    }
    return table;
}

// Caps for the standard solve/count pipeline: only the coefficient row
// (l/2, l/2, n-l, *) is read at the root.
inline DegreeCaps pipeline_caps(int n, int l, long long N) {
    return DegreeCaps{l / 2, l / 2, n - l, static_cast<long long>(l) * N};
}

template <class R>
struct CountResult {
    PairTable<R> table;
    CountStats stats;
};

// General entry point: splits into connected components, computes a
// per-component table for every even cover size, and combines them by
// convolution over (weight, cover size).
template <class R>
CountResult<R> count_pairs(const Graph& g, const EliminationForest& f,
                           const std::vector<long long>& wts, long long N, int l, R ring,
                           bool track_calls = false) {
    if (l < 0 || l > g.n || (l % 2) != 0)
        throw std::invalid_argument("cover size must be even and within [0, n]");
    CountResult<R> res;
    if (l == 0) {
        res.table[0] = ring.one();
        return res;
    }
    auto comps = components(g);
    if (comps.size() == 1) {
        CountingContext<R> ctx(g, f, wts, N, pipeline_caps(g.n, l, N), ring, track_calls);
        res.table = count_pairs_connected(ctx, l);
        res.stats = ctx.stats();
        return res;
    }

    // rows[half] = table for cover size 2*half, per component
    int acc_half_max = 0;
    std::vector<std::map<long long, typename R::Value>> dp(l / 2 + 1);
    dp[0][0] = ring.one();
    for (const auto& comp : comps) {
        const int ni = comp.graph.n;
        int li_max = std::min(l, ni - (ni % 2 ? 1 : 0));
        std::vector<PairTable<R>> rows(li_max / 2 + 1);
        rows[0][0] = ring.one();
        if (li_max >= 2) {
            std::vector<long long> cw(comp.edge_to_orig.size());
            for (std::size_t i = 0; i < cw.size(); ++i) cw[i] = wts[comp.edge_to_orig[i]];
            DegreeCaps caps{li_max / 2, li_max / 2, ni, static_cast<long long>(li_max) * N};
            CountingContext<R> ctx(comp.graph, induced_forest(f, comp.to_orig), std::move(cw), N,
                                   caps, ring, track_calls);
            auto P = subtree_poly(ctx, ctx.roots()[0], LabelSet{});
            ++ctx.runs_;
            for (int half = 1; half <= li_max / 2; ++half)
                for (long long w = 0; w <= caps.wt; ++w) {
                    auto c = P.coefficient(half, half, ni - 2 * half, w);
                    if (!ring.is_zero(c)) rows[half][w] = c;
                }
            res.stats.merge(ctx.stats());
        }
        std::vector<std::map<long long, typename R::Value>> next(l / 2 + 1);
        for (int h1 = 0; h1 <= acc_half_max; ++h1)
            for (const auto& [w1, c1] : dp[h1])
                for (int h2 = 0; h2 <= li_max / 2 && h1 + h2 <= l / 2; ++h2)
                    for (const auto& [w2, c2] : rows[h2]) {
                        auto& cell = next[h1 + h2][w1 + w2];  // default-constructed = zero
                        cell = ring.add(cell, ring.mul(c1, c2));
                    }
        dp = std::move(next);
        acc_half_max = std::min(l / 2, acc_half_max + li_max / 2);
    }
    for (auto& [w, c] : dp[l / 2])
        if (!ring.is_zero(c)) res.table[w] = c;
    return res;
}

}  // namespace tdpcc
