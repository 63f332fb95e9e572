#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fermat/int.hpp"

namespace fermat {

/// Complete prime factorization of a positive 64-bit integer.
/// factors is sorted by prime, every exponent >= 1, and
/// prod p^e reconstructs value. value == 1 has an empty factor list.
struct Factorization {
    std::uint64_t value = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;
};

/// n = core * cofactor^2 with core square-free.
struct SquareFreeDecomp {
    std::uint64_t core = 1;
    std::uint64_t cofactor = 1;
};

/// Largest input the factorization routines accept. Exceeding it raises
/// BoundExceeded; there is no silent truncation.
struct FactorConfig {
    std::uint64_t bound = UINT64_MAX;
};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// Trial division up to 10^6, then Brent's rho with a seed derived from n
/// (deterministic for a given input). Throws BoundExceeded above cfg.bound.
Factorization factorize(std::uint64_t n, const FactorConfig& cfg = {});
Factorization factorize(const Int& n, const FactorConfig& cfg = {});

SquareFreeDecomp squarefree_decompose(std::uint64_t n, const FactorConfig& cfg = {});

/// (p, e) iff n == p^e with p prime, e >= 1. 1 yields nullopt.
std::optional<std::pair<std::uint64_t, int>> is_prime_power(std::uint64_t n,
                                                            const FactorConfig& cfg = {});

/// True iff x^2 = t (mod m) is solvable, for square-free m >= 1.
/// Decided per prime factor (Euler criterion; t = 0 mod p always solvable)
/// and combined over the factorization. Throws NotSquareFree when m has a
/// square factor.
bool is_qr(const Int& t, std::uint64_t m, const FactorConfig& cfg = {});

} // namespace fermat
