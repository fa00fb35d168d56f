// Times the serial reference kernels against the OpenMP ones on the same
// workloads and checks that the outputs are identical. Build target only;
// not part of the test suite.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tdpcc/count.hpp"
#include "tdpcc/gen.hpp"
#include "tdpcc/parallel.hpp"
#include "tdpcc/poly.hpp"
#include "tdpcc/rng.hpp"
#include "tdpcc/solve.hpp"

using namespace tdpcc;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct Row {
    std::string name;
    double serial_ms;
    double parallel_ms;
    bool identical;
};

Poly<ModRing> wide_poly(const DegreeCaps& caps, const ModRing& ring, int stripes, long long len,
                        std::uint64_t seed, bool second_axis) {
    Rng rng(seed);
    std::vector<std::tuple<int, int, int, long long, std::uint64_t>> terms;
    for (int a = 0; a < stripes; ++a)
        for (long long d = 0; d < len; ++d)
            terms.push_back({second_axis ? 0 : a, second_axis ? a : 0, 0, d, rng.below(16)});
    return Poly<ModRing>::from_terms(caps, ring, std::move(terms));
}

}  // namespace

int main() {
    std::vector<Row> rows;

    {
        DegreeCaps caps{4, 4, 0, 80000};
        ModRing ring(4);
        auto p = wide_poly(caps, ring, 3, 16000, 1, false);
        auto q = wide_poly(caps, ring, 3, 16000, 2, true);
        Poly<ModRing> rs(caps, ring), rp(caps, ring);
        set_threads(1);
        double s = time_ms([&] { rs = poly_mul(p, q); });
        set_threads(-1);
        double par = time_ms([&] { rp = poly_mul(p, q); });
        rows.push_back({"poly_mul 48k x 48k terms", s, par, rs == rp});
    }

    {
        auto g = cycle_graph(96);
        auto f = balanced_cycle_forest(96);
        SolverConfig cfg;
        cfg.seed = 11;
        cfg.reps = 1;
        Verdict vs, vp;
        set_threads(1);
        double s = time_ms([&] { vs = solve_hamiltonian_cycle(g, f, cfg); });
        set_threads(-1);
        double par = time_ms([&] { vp = solve_hamiltonian_cycle(g, f, cfg); });
        rows.push_back({"hamiltonian cycle C96, 1 rep", s, par,
                        vs.yes == vp.yes && vs.witness_w == vp.witness_w &&
                            vs.stats.calls == vp.stats.calls});
    }

    {
        auto g = cycle_graph(32);
        auto f = balanced_cycle_forest(32);
        SolverConfig cfg;
        cfg.seed = 5;
        cfg.reps = 8;
        Verdict vs, vp;
        set_threads(1);
        double s = time_ms([&] { vs = solve_pcc(g, f, {1, 30}, cfg); });  // always no: 8 full reps
        set_threads(-1);
        double par = time_ms([&] { vp = solve_pcc(g, f, {1, 30}, cfg); });
        rows.push_back({"pcc C32 no-instance, 8 reps", s, par,
                        vs.yes == vp.yes && vs.reps_used == vp.reps_used &&
                            vs.stats.calls == vp.stats.calls});
    }

    std::printf("%-32s %12s %12s %9s %s\n", "workload", "serial ms", "openmp ms", "speedup",
                "identical");
    bool all_same = true;
    for (const auto& r : rows) {
        std::printf("%-32s %12.1f %12.1f %8.2fx %s\n", r.name.c_str(), r.serial_ms, r.parallel_ms,
                    r.serial_ms / r.parallel_ms, r.identical ? "yes" : "NO");
        all_same = all_same && r.identical;
    }
    if (!all_same) {
        std::printf("FAIL: serial and OpenMP kernels disagreed\n");
        return 1;
    }
    return 0;
}
