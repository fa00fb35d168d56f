#include "tdpcc/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tdpcc {

namespace {
std::atomic<int> g_threads{-1};
}

void set_threads(int n) {
    g_threads.store(n);
#ifdef _OPENMP
    if (n > 1) omp_set_num_threads(n);
#endif
}

int max_threads() {
#ifdef _OPENMP
    int n = g_threads.load();
    if (n == -1) return omp_get_max_threads();
    return n < 1 ? 1 : n;
#else
    return 1;
#endif
}

bool parallel_enabled() {
#ifdef _OPENMP
    int n = g_threads.load();
    return n == -1 ? omp_get_max_threads() > 1 : n > 1;
#else
    return false;
#endif
}

}  // namespace tdpcc
