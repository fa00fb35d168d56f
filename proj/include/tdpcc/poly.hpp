#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tdpcc/parallel.hpp"
#include "tdpcc/ring.hpp"

namespace tdpcc {

// Hard per-indeterminate degree caps. Exponents only ever grow along the
// recursion, so discarding over-cap terms can never change an in-cap
// coefficient.
struct DegreeCaps {
    int e1 = 0;        // edges assigned to the first matching
    int e2 = 0;        // edges assigned to the second matching
    int unc = 0;       // uncovered vertices
    long long wt = 0;  // total edge weight
    friend bool operator==(const DegreeCaps&, const DegreeCaps&) = default;
};

// Truncated polynomial in four indeterminates over ring R. Terms are stored
// as runs keyed by the (e1,e2,unc) exponents, each run holding a dense
// vector of coefficients along the weight exponent starting at `lo`.
// Canonical form: runs sorted by key, first and last coefficient of every
// run nonzero, no empty runs.
template <class R>
class Poly {
  public:
    using Coef = typename R::Value;

    struct Run {
        std::uint32_t key = 0;
        long long lo = 0;
        std::vector<Coef> c;
    };

    Poly(DegreeCaps caps, R ring) : caps_(caps), ring_(ring) {
        if (caps.e1 < 0 || caps.e1 > 1023 || caps.e2 < 0 || caps.e2 > 1023 || caps.unc < 0 ||
            caps.unc > 1023 || caps.wt < 0)
            throw std::invalid_argument("degree caps out of supported range");
    }

    static std::uint32_t pack(int a, int b, int c) {
        return (static_cast<std::uint32_t>(a) << 20) | (static_cast<std::uint32_t>(b) << 10) |
               static_cast<std::uint32_t>(c);
    }
    static int key_e1(std::uint32_t k) { return static_cast<int>(k >> 20); }
    static int key_e2(std::uint32_t k) { return static_cast<int>((k >> 10) & 1023u); }
    static int key_unc(std::uint32_t k) { return static_cast<int>(k & 1023u); }

    static Poly constant(DegreeCaps caps, R ring, Coef v) {
        Poly p(caps, ring);
        if (!ring.is_zero(v)) p.runs_.push_back({pack(0, 0, 0), 0, {v}});
        return p;
    }
    static Poly one(DegreeCaps caps, R ring) { return constant(caps, ring, ring.one()); }

    // Build from explicit (a,b,c,d,coef) terms; over-cap terms are dropped.
    static Poly from_terms(DegreeCaps caps, R ring,
                           std::vector<std::tuple<int, int, int, long long, Coef>> terms) {
        Poly p(caps, ring);
        std::sort(terms.begin(), terms.end(),
                  [](const auto& x, const auto& y) {
                      return std::make_tuple(std::get<0>(x), std::get<1>(x), std::get<2>(x),
                                             std::get<3>(x)) <
                             std::make_tuple(std::get<0>(y), std::get<1>(y), std::get<2>(y),
                                             std::get<3>(y));
                  });
        for (auto& [a, b, c, d, coef] : terms) {
            if (a < 0 || b < 0 || c < 0 || d < 0) throw std::invalid_argument("negative exponent");
            if (a > caps.e1 || b > caps.e2 || c > caps.unc || d > caps.wt) continue;
            std::uint32_t key = pack(a, b, c);
            if (!p.runs_.empty() && p.runs_.back().key == key) {
                Run& r = p.runs_.back();
                long long idx = d - r.lo;
                if (idx < static_cast<long long>(r.c.size())) {
                    r.c[idx] = ring.add(r.c[idx], coef);
                } else {
                    r.c.resize(idx + 1, ring.zero());
                    r.c[idx] = coef;
                }
            } else {
                p.runs_.push_back({key, d, {coef}});
            }
        }
        for (auto& r : p.runs_) canon_run(ring, r);
        p.runs_.erase(std::remove_if(p.runs_.begin(), p.runs_.end(),
                                     [](const Run& r) { return r.c.empty(); }),
                      p.runs_.end());
        return p;
    }

    const DegreeCaps& caps() const { return caps_; }
    const R& ring() const { return ring_; }
    const std::vector<Run>& runs() const { return runs_; }
    std::vector<Run>& runs_mut() { return runs_; }
    bool empty() const { return runs_.empty(); }

    std::size_t term_count() const {
        std::size_t k = 0;
        for (const auto& r : runs_)
            for (const auto& v : r.c)
                if (!ring_.is_zero(v)) ++k;
        return k;
    }

    Coef coefficient(int a, int b, int c, long long d) const {
        if (a < 0 || b < 0 || c < 0 || d < 0 || a > 1023 || b > 1023 || c > 1023) return ring_.zero();
        std::uint32_t key = pack(a, b, c);
        auto it = std::lower_bound(runs_.begin(), runs_.end(), key,
                                   [](const Run& r, std::uint32_t k) { return r.key < k; });
        if (it == runs_.end() || it->key != key) return ring_.zero();
        long long idx = d - it->lo;
        if (idx < 0 || idx >= static_cast<long long>(it->c.size())) return ring_.zero();
        return it->c[idx];
    }

    // Sorted lines "a b c d coeff", zero coefficients skipped.
    std::string dump() const {
        std::ostringstream out;
        for (const auto& r : runs_)
            for (std::size_t i = 0; i < r.c.size(); ++i)
                if (!ring_.is_zero(r.c[i]))
                    out << key_e1(r.key) << " " << key_e2(r.key) << " " << key_unc(r.key) << " "
                        << (r.lo + static_cast<long long>(i)) << " " << R::str(r.c[i]) << "\n";
        return out.str();
    }

    static void canon_run(const R& ring, Run& r) {
        std::size_t first = 0, last = r.c.size();
        while (first < last && ring.is_zero(r.c[first])) ++first;
        while (last > first && ring.is_zero(r.c[last - 1])) --last;
        if (first == last) {
            r.c.clear();
            return;
        }
        if (first > 0) {
            r.c.erase(r.c.begin(), r.c.begin() + first);
            r.lo += static_cast<long long>(first);
        }
        r.c.resize(last - first);
    }

    friend bool operator==(const Poly& p, const Poly& q) {
        if (!(p.caps_ == q.caps_) || !p.ring_.same(q.ring_)) return false;
        if (p.term_count() != q.term_count()) return false;
        for (const auto& r : p.runs_)
            for (std::size_t i = 0; i < r.c.size(); ++i) {
                if (p.ring_.is_zero(r.c[i])) continue;
                auto other = q.coefficient(key_e1(r.key), key_e2(r.key), key_unc(r.key),
                                           r.lo + static_cast<long long>(i));
                if (!(other == r.c[i])) return false;
            }
        return true;
    }

  private:
    DegreeCaps caps_;
    R ring_;
    std::vector<Run> runs_;
};

namespace detail {
template <class R>
void check_compat(const Poly<R>& p, const Poly<R>& q) {
    if (!(p.caps() == q.caps()) || !p.ring().same(q.ring()))
        throw std::logic_error("polynomial caps/ring mismatch");
}
}  // namespace detail

template <class R>
Poly<R> poly_zero(DegreeCaps caps, R ring) {
    return Poly<R>(caps, ring);
}
template <class R>
Poly<R> poly_one(DegreeCaps caps, R ring) {
    return Poly<R>::one(caps, ring);
}

template <class R>
Poly<R> poly_add(const Poly<R>& p, const Poly<R>& q) {
    detail::check_compat(p, q);
    const R& ring = p.ring();
    Poly<R> out(p.caps(), ring);
    auto& runs = out.runs_mut();
    const auto& a = p.runs();
    const auto& b = q.runs();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
            runs.push_back(a[i++]);
        } else if (i == a.size() || b[j].key < a[i].key) {
            runs.push_back(b[j++]);
        } else {
            const auto& ra = a[i++];
            const auto& rb = b[j++];
            typename Poly<R>::Run r;
            r.key = ra.key;
            r.lo = std::min(ra.lo, rb.lo);
            long long hi = std::max(ra.lo + static_cast<long long>(ra.c.size()),
                                    rb.lo + static_cast<long long>(rb.c.size())) -
                           1;
            r.c.assign(hi - r.lo + 1, ring.zero());
            for (std::size_t t = 0; t < ra.c.size(); ++t) r.c[ra.lo - r.lo + t] = ra.c[t];
            for (std::size_t t = 0; t < rb.c.size(); ++t) {
                auto& cell = r.c[rb.lo - r.lo + t];
                cell = ring.add(cell, rb.c[t]);
            }
            Poly<R>::canon_run(ring, r);
            if (!r.c.empty()) runs.push_back(std::move(r));
        }
    }
    return out;
}

template <class R>
Poly<R> poly_negate(const Poly<R>& p) {
    Poly<R> out = p;
    for (auto& r : out.runs_mut())
        for (auto& v : r.c) v = p.ring().neg(v);
    return out;
}

namespace detail {

// Work threshold above which a single output run's convolution is spread
// over OpenMP threads (cell-parallel; each cell keeps a fixed summation
// order, so results are identical to the serial kernel).
inline constexpr long long kParallelWork = 1 << 16;

template <class R>
struct RunPair {
    const typename Poly<R>::Run* a;
    const typename Poly<R>::Run* b;
};

// Accumulate the pair's convolution restricted to output cells
// [win_lo, win_hi]; `out` points at cell win_lo. Forward strides only, so
// the inner loop vectorizes.
template <class R>
void accumulate_window(const R& ring, typename R::Value* out, long long win_lo, long long win_hi,
                       const RunPair<R>& pr) {
    const auto& ra = *pr.a;
    const auto& rb = *pr.b;
    const long long base = ra.lo + rb.lo;
    const long long len_b = static_cast<long long>(rb.c.size());
    for (std::size_t i = 0; i < ra.c.size(); ++i) {
        const long long d0 = base + static_cast<long long>(i);
        if (d0 > win_hi) break;
        const auto& av = ra.c[i];
        if (ring.is_zero(av)) continue;
        const long long jlo = std::max<long long>(0, win_lo - d0);
        const long long jhi = std::min(len_b - 1, win_hi - d0);
        if (jlo > jhi) continue;
        auto* o = out + (d0 + jlo - win_lo);
        const auto* b = rb.c.data() + jlo;
        const long long cnt = jhi - jlo + 1;
        for (long long j = 0; j < cnt; ++j) add_mul(ring, o[j], av, b[j]);
    }
}

// Disjoint output chunks, each filled by the serial kernel in the same
// pair/index order, so the result is identical to one serial pass.
template <class R>
void accumulate_chunked(const R& ring, typename R::Value* out, long long out_lo, long long out_hi,
                        const std::vector<RunPair<R>>& prs) {
    const long long len = out_hi - out_lo + 1;
    const int nchunks =
        static_cast<int>(std::min<long long>(len / 2048 + 1, 4ll * max_threads()));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int c = 0; c < nchunks; ++c) {
        const long long clo = out_lo + len * c / nchunks;
        const long long chi = out_lo + len * (c + 1) / nchunks - 1;
        for (const auto& pr : prs) accumulate_window(ring, out + (clo - out_lo), clo, chi, pr);
    }
}

}  // namespace detail

template <class R>
Poly<R> poly_mul(const Poly<R>& p, const Poly<R>& q) {
    detail::check_compat(p, q);
    const R& ring = p.ring();
    const DegreeCaps& caps = p.caps();
    Poly<R> out(caps, ring);
    if (p.empty() || q.empty()) return out;

    // Pass 1: surviving run pairs grouped by output key. Runs are sorted
    // with the e1 exponent in the top bits, so the inner loop can stop as
    // soon as e1 overflows the cap.
    std::vector<std::pair<std::uint32_t, detail::RunPair<R>>> pairs;
    for (const auto& ra : p.runs()) {
        const int a1 = Poly<R>::key_e1(ra.key), b1 = Poly<R>::key_e2(ra.key),
                  c1 = Poly<R>::key_unc(ra.key);
        for (const auto& rb : q.runs()) {
            const int a2 = Poly<R>::key_e1(rb.key);
            if (a1 + a2 > caps.e1) break;
            if (b1 + Poly<R>::key_e2(rb.key) > caps.e2) continue;
            if (c1 + Poly<R>::key_unc(rb.key) > caps.unc) continue;
            if (ra.lo + rb.lo > caps.wt) continue;
            pairs.push_back({Poly<R>::pack(a1 + a2, b1 + Poly<R>::key_e2(rb.key),
                                           c1 + Poly<R>::key_unc(rb.key)),
                             {&ra, &rb}});
        }
    }
    if (pairs.empty()) return out;
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });

    // Pass 2: per output key, allocate the exact range and accumulate.
    auto& runs = out.runs_mut();
    std::size_t g = 0;
    while (g < pairs.size()) {
        std::size_t h = g;
        const std::uint32_t key = pairs[g].first;
        long long lo = caps.wt + 1, hi = -1, work = 0;
        while (h < pairs.size() && pairs[h].first == key) {
            const auto& pr = pairs[h].second;
            const long long plo = pr.a->lo + pr.b->lo;
            const long long phi = std::min(caps.wt, plo + static_cast<long long>(pr.a->c.size()) +
                                                        static_cast<long long>(pr.b->c.size()) - 2);
            lo = std::min(lo, plo);
            hi = std::max(hi, phi);
            work += static_cast<long long>(pr.a->c.size()) * static_cast<long long>(pr.b->c.size());
            ++h;
        }
        typename Poly<R>::Run r;
        r.key = key;
        r.lo = lo;
        r.c.assign(hi - lo + 1, ring.zero());
        bool wide = parallel_enabled() && work >= detail::kParallelWork && (hi - lo + 1) >= 4096;
        if (wide) {
            std::vector<detail::RunPair<R>> prs;
            prs.reserve(h - g);
            for (std::size_t t = g; t < h; ++t) prs.push_back(pairs[t].second);
            detail::accumulate_chunked(ring, r.c.data(), lo, hi, prs);
        } else {
            for (std::size_t t = g; t < h; ++t)
                detail::accumulate_window(ring, r.c.data(), lo, hi, pairs[t].second);
        }
        Poly<R>::canon_run(ring, r);
        if (!r.c.empty()) runs.push_back(std::move(r));
        g = h;
    }
    return out;
}

// Multiply by the monomial with exponents (a,b,c,d).
template <class R>
Poly<R> poly_scale_monomial(const Poly<R>& p, int a, int b, int c, long long d) {
    if (a < 0 || b < 0 || c < 0 || d < 0) throw std::invalid_argument("negative monomial exponent");
    const DegreeCaps& caps = p.caps();
    Poly<R> out(caps, p.ring());
    auto& runs = out.runs_mut();
    for (const auto& r : p.runs()) {
        const int na = Poly<R>::key_e1(r.key) + a;
        const int nb = Poly<R>::key_e2(r.key) + b;
        const int nc = Poly<R>::key_unc(r.key) + c;
        if (na > caps.e1 || nb > caps.e2 || nc > caps.unc) continue;
        const long long nlo = r.lo + d;
        if (nlo > caps.wt) continue;
        typename Poly<R>::Run nr;
        nr.key = Poly<R>::pack(na, nb, nc);
        nr.lo = nlo;
        const long long keep = std::min<long long>(static_cast<long long>(r.c.size()), caps.wt - nlo + 1);
        nr.c.assign(r.c.begin(), r.c.begin() + keep);
        Poly<R>::canon_run(p.ring(), nr);
        if (!nr.c.empty()) runs.push_back(std::move(nr));
    }
    return out;
}

}  // namespace tdpcc
