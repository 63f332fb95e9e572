#include "fermat/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fermat {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    if (m == 1) return 0;
    std::uint64_t r = 1;
    b %= m;
    while (e != 0) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this witness set decides primality for all n < 2^64
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Brent's cycle-finding rho. The increment constant is derived from the
// input, so repeated runs on the same value take the same path.
std::uint64_t rho_factor(std::uint64_t n)
{
    if ((n & 1) == 0) return 2;
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t c = splitmix64(n + attempt) % (n - 1) + 1;
        std::uint64_t x = splitmix64(n ^ (attempt * 0x9e3779b97f4a7c15ULL)) % n;
        std::uint64_t y = x, d = 1;
        std::uint64_t saved = 0;
        for (std::uint64_t size = 1; d == 1; size *= 2) {
            y = x;
            for (std::uint64_t i = 0; i < size && d == 1; i += 128) {
                std::uint64_t prod = 1;
                saved = x;
                const std::uint64_t steps = std::min<std::uint64_t>(128, size - i);
                for (std::uint64_t j = 0; j < steps; ++j) {
                    x = mulmod_u64(x, x, n) + c;
                    if (x >= n) x -= n;
                    std::uint64_t diff = x > y ? x - y : y - x;
                    if (diff == 0) diff = 1;
                    prod = mulmod_u64(prod, diff, n);
                }
                d = std::gcd(prod, n);
            }
        }
        if (d == n) {
            // batching overshot; replay one step at a time
            d = 1;
            std::uint64_t x2 = saved;
            while (d == 1 || d == n) {
                x2 = mulmod_u64(x2, x2, n) + c;
                if (x2 >= n) x2 -= n;
                std::uint64_t diff = x2 > y ? x2 - y : y - x2;
                if (diff == 0) break;
                d = std::gcd(diff, n);
            }
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(std::uint64_t n, std::map<std::uint64_t, int>& out)
{
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    const std::uint64_t d = rho_factor(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

Factorization factorize(std::uint64_t n, const FactorConfig& cfg)
{
    if (n < 1) throw PreconditionViolated("factorize: n must be >= 1");
    if (n > cfg.bound) throw BoundExceeded("factorize: input above configured bound");

    Factorization f;
    f.value = n;
    for (std::uint64_t p = 2; p <= kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.factors.emplace_back(p, e);
        }
    }
    if (n > 1) {
        std::map<std::uint64_t, int> rest;
        factor_rec(n, rest);
        for (const auto& [p, e] : rest) f.factors.emplace_back(p, e);
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

Factorization factorize(const Int& n, const FactorConfig& cfg)
{
    if (n < 1) throw PreconditionViolated("factorize: n must be >= 1");
    if (n > Int(cfg.bound)) throw BoundExceeded("factorize: input above configured bound");
    return factorize(static_cast<std::uint64_t>(n), cfg);
}

SquareFreeDecomp squarefree_decompose(std::uint64_t n, const FactorConfig& cfg)
{
    const Factorization f = factorize(n, cfg);
    SquareFreeDecomp d;
    for (const auto& [p, e] : f.factors) {
        if (e & 1) d.core *= p;
        for (int i = 0; i < e / 2; ++i) d.cofactor *= p;
    }
    return d;
}

std::optional<std::pair<std::uint64_t, int>> is_prime_power(std::uint64_t n, const FactorConfig& cfg)
{
    const Factorization f = factorize(n, cfg);
    if (f.factors.size() != 1) return std::nullopt;
    return f.factors.front();
}

bool is_qr(const Int& t, std::uint64_t m, const FactorConfig& cfg)
{
    if (m < 1) throw PreconditionViolated("is_qr: modulus must be >= 1");
    if (m <= 2) return true;
    const Factorization f = factorize(m, cfg);
    for (const auto& [p, e] : f.factors) {
        if (e > 1) throw NotSquareFree("is_qr: modulus has a square factor");
    }
    for (const auto& [p, e] : f.factors) {
        (void)e;
        if (p == 2) continue; // 0 and 1 are both squares mod 2
        Int r = t % Int(p);
        if (r < 0) r += p;
        const std::uint64_t tp = static_cast<std::uint64_t>(r);
        if (tp == 0) continue;
        if (powmod_u64(tp, (p - 1) / 2, p) != 1) return false;
    }
    return true;
}

} // namespace fermat
