#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>

#include "fermat/errors.hpp"

namespace fermat {

/// Exact arbitrary-precision signed integer. All identity checks and
/// searches in this library run on exact integers; doubles appear only in
/// the transcendental-exponent evaluations, which report residuals.
using Int = boost::multiprecision::cpp_int;

/// Nonnegative gcd, sign-insensitive. gcd(0, 0) == 0.
inline Int gcd(const Int& a, const Int& b)
{
    Int g = boost::multiprecision::gcd(a, b);
    return g < 0 ? Int(-g) : g;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

/// base^exp by binary exponentiation, exact.
inline Int pow_int(Int base, unsigned exp)
{
    Int r = 1;
    while (exp != 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

/// Floor square root by Newton iteration on integers. No floating point.
inline Int isqrt(const Int& n)
{
    if (n < 0) throw PreconditionViolated("isqrt: negative argument");
    if (n == 0) return 0;
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    Int x = Int(1) << ((bits + 1) / 2); // x >= sqrt(n)
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

/// Floor square root for machine words, same Newton scheme.
inline std::uint64_t isqrt_u64(std::uint64_t n)
{
    if (n == 0) return 0;
    const int bits = 64 - __builtin_clzll(n);
    std::uint64_t x = std::uint64_t(1) << ((bits + 1) / 2);
    for (;;) {
        std::uint64_t y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

/// Exact square detection: returns r with r*r == n when such r exists.
inline std::optional<Int> is_perfect_square(const Int& n)
{
    if (n < 0) return std::nullopt;
    // squares end in 0,1,4,9 mod 16; cheap rejection before isqrt
    const unsigned m16 = static_cast<unsigned>(n & 15);
    if (m16 != 0 && m16 != 1 && m16 != 4 && m16 != 9) return std::nullopt;
    Int r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline std::optional<std::uint64_t> is_perfect_square_u64(std::uint64_t n)
{
    const unsigned m16 = n & 15;
    if (m16 != 0 && m16 != 1 && m16 != 4 && m16 != 9) return std::nullopt;
    std::uint64_t r = isqrt_u64(n);
    if (r * r == n) return r;
    return std::nullopt;
}

} // namespace fermat
