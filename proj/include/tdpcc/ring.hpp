#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tdpcc {

// Residues mod 2^bits stored in [0, 2^bits). Power-of-two modulus, so
// reduction is a mask and wraparound of uint64 arithmetic is compatible.
struct ModRing {
    using Value = std::uint64_t;

    int bits = 1;
    std::uint64_t mask = 1;

    ModRing() = default;
    explicit ModRing(int bits_) : bits(bits_) {
        if (bits_ < 1 || bits_ > 63) throw std::invalid_argument("ModRing: bits must be in [1,63]");
        mask = (std::uint64_t{1} << bits_) - 1;
    }

    Value zero() const { return 0; }
    Value one() const { return 1 & mask; }
    Value add(Value a, Value b) const { return (a + b) & mask; }
    Value sub(Value a, Value b) const { return (a - b) & mask; }
    Value mul(Value a, Value b) const { return (a * b) & mask; }
    Value neg(Value a) const { return (0 - a) & mask; }
    Value from_int(long long x) const { return static_cast<Value>(x) & mask; }
    bool is_zero(Value a) const { return a == 0; }
    bool same(const ModRing& o) const { return bits == o.bits; }
    static std::string str(Value v) { return std::to_string(v); }
};

// Arbitrary-precision signed integers; coefficients can grow past any fixed
// width, so no overflow is possible here.
struct ExactRing {
    using Value = mpz_class;

    Value zero() const { return Value(0); }
    Value one() const { return Value(1); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
    Value from_int(long long x) const { return Value(static_cast<long>(x)); }
    bool is_zero(const Value& a) const { return sgn(a) == 0; }
    bool same(const ExactRing&) const { return true; }
    static std::string str(const Value& v) { return v.get_str(); }
};

// out += a*b without temporaries where the backend allows it.
inline void add_mul(const ModRing& r, ModRing::Value& out, ModRing::Value a, ModRing::Value b) {
    out = (out + a * b) & r.mask;
}
inline void add_mul(const ExactRing&, ExactRing::Value& out, const ExactRing::Value& a,
                    const ExactRing::Value& b) {
    mpz_addmul(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace tdpcc
