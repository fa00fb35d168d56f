#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tdpcc {

// splitmix64 step; used to derive independent substream seeds by counter.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (salt + 1));
    return splitmix64(s);
}

// mt19937_64 with a portable bounded draw (std distributions are
// implementation-defined; rejection sampling keeps runs reproducible
// across standard libraries).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    // uniform in [1, n]
    long long weight(long long n) { return static_cast<long long>(below(static_cast<std::uint64_t>(n))) + 1; }

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 eng_;
};

// Per-repetition weight draw for the solver: independent substream per
// (seed, rep), each weight uniform in {1..N}.
inline std::vector<long long> draw_weights(std::uint64_t seed, std::uint64_t rep, std::size_t m,
                                           long long N) {
    Rng rng(derive_seed(seed, rep));
    std::vector<long long> w(m);
    for (auto& x : w) x = rng.weight(N);
    return w;
}

}  // namespace tdpcc
