#include "fermat/quadratic_ring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "fermat/errors.hpp"
#include "fermat/parallel.hpp"

namespace fermat::quad {

int embedding_sign(const RootTwoInt& z)
{
    if (z.p == 0 && z.q == 0) return 0;
    if (z.p >= 0 && z.q >= 0) return 1;
    if (z.p <= 0 && z.q <= 0) return -1;
    // mixed signs: compare p^2 against 2 q^2
    const Int p2 = z.p * z.p;
    const Int q2_twice = 2 * z.q * z.q;
    if (z.p > 0) { // q < 0: positive iff p > |q| sqrt 2
        if (p2 == q2_twice) return 0; // impossible for integers, kept for clarity
        return p2 > q2_twice ? 1 : -1;
    }
    // p < 0, q > 0: positive iff q sqrt 2 > |p|
    if (p2 == q2_twice) return 0;
    return q2_twice > p2 ? 1 : -1;
}

std::complex<double> qpow(const Int& base, const GaussianInt& e)
{
    if (base < 1) throw PreconditionViolated("qpow: base must be a positive integer");
    if (base == 1) return {1.0, 0.0};

    const double b = static_cast<double>(base);
    const double mag = std::pow(b, static_cast<double>(e.p));
    if (!std::isfinite(mag)) throw Overflow("qpow: base^p not representable");

    const double angle = static_cast<double>(abs(e.q)) * std::log(b);
    if (!std::isfinite(angle)) throw Overflow("qpow: rotation angle not representable");
    const double re = std::cos(angle);
    const double im = (e.q < 0 ? -1.0 : 1.0) * std::sin(angle);
    return {mag * re, mag * im};
}

double conj_identity_residual(const Int& a, const Int& b, const GaussianInt& u,
                              const GaussianInt& v)
{
    const std::complex<double> lhs = std::conj(qpow(a, u) + qpow(b, v));
    const std::complex<double> rhs = qpow(a, conj(u)) + qpow(b, conj(v));
    return std::abs(lhs - rhs);
}

ConjIdentitySweepResult conj_identity_sweep(std::uint64_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> base(1, 20);
    std::uniform_int_distribution<int> part(-5, 5);

    ConjIdentitySweepResult res;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const std::int64_t a = base(rng), b = base(rng);
        const GaussianInt u{part(rng), part(rng)};
        const GaussianInt v{part(rng), part(rng)};
        const double residual = conj_identity_residual(Int(a), Int(b), u, v);
        ++res.samples;
        if (residual > res.max_residual) {
            res.max_residual = residual;
            res.worst_a = a;
            res.worst_b = b;
            res.worst_u = u;
            res.worst_v = v;
        }
    }
    return res;
}

GaussianScanResult gaussian_exponent_scan(std::int64_t xmax, int prange, int jobs)
{
    if (prange < 1) throw PreconditionViolated("gaussian_exponent_scan: prange must be >= 1");
    GaussianScanResult res;
    if (xmax < 2) return res; // degenerate grid, reported vacuous

    // v^(2+it) for v in [1, xmax], t in [-prange, prange]
    const int tspan = 2 * prange + 1;
    std::vector<std::complex<double>> table(static_cast<std::size_t>((xmax + 1) * tspan));
    auto power = [&](std::int64_t v, int t) -> const std::complex<double>& {
        return table[static_cast<std::size_t>(v * tspan + (t + prange))];
    };
    for (std::int64_t v = 1; v <= xmax; ++v)
        for (int t = -prange; t <= prange; ++t)
            table[static_cast<std::size_t>(v * tspan + (t + prange))] =
                qpow(Int(v), GaussianInt{2, t});

    auto scan_chunk = [&, prange](std::int64_t x_lo, std::int64_t x_hi) {
        GaussianScanResult part;
        part.min_residual = std::numeric_limits<double>::infinity();
        for (std::int64_t x = x_lo; x < x_hi; ++x) {
            for (std::int64_t y = 1; y <= xmax; ++y) {
                if (std::gcd(x, y) != 1) continue;
                for (std::int64_t z = 1; z <= xmax; ++z) {
                    if (std::gcd(x, z) != 1 || std::gcd(y, z) != 1) continue;
                    for (int p = -prange; p <= prange; ++p) {
                        if (p == 0) continue;
                        const std::complex<double> xp = power(x, p);
                        for (int q = -prange; q <= prange; ++q) {
                            if (q == 0) continue;
                            const std::complex<double> sum = xp + power(y, q);
                            for (int r = -prange; r <= prange; ++r) {
                                const double residual = std::abs(sum - power(z, r));
                                ++part.evaluated;
                                if (residual < part.min_residual) {
                                    part.min_residual = residual;
                                    part.witness = {x, y, z, p, q, r};
                                }
                            }
                        }
                    }
                }
            }
        }
        part.vacuous = part.evaluated == 0;
        return part;
    };

    res.min_residual = std::numeric_limits<double>::infinity();
    res = chunked_reduce(std::int64_t{1}, xmax + 1, jobs, res, scan_chunk,
                         [](GaussianScanResult& acc, GaussianScanResult&& part) {
                             acc.evaluated += part.evaluated;
                             // chunks ascend in x, so strict < keeps the
                             // lexicographically earliest witness on ties
                             if (!part.vacuous && part.min_residual < acc.min_residual) {
                                 acc.min_residual = part.min_residual;
                                 acc.witness = part.witness;
                             }
                         });
    res.vacuous = res.evaluated == 0;
    return res;
}

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void require_system_exponents(const RootTwoInt& u, const RootTwoInt& v, const RootTwoInt& w)
{
    // u + conj(u) = 2p must be a positive rational integer
    if (u.p < 1 || v.p < 1 || w.p < 1)
        throw PreconditionViolated("system exponents need positive rational part");
    if (u.q == 0 || v.q == 0)
        throw PreconditionViolated("system needs (u - conj u)(v - conj v) != 0");
}

void require_pairwise_coprime(std::int64_t a, std::int64_t b, std::int64_t c)
{
    if (a < 1 || b < 1 || c < 1)
        throw PreconditionViolated("coefficients must be positive");
    if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
        throw PreconditionViolated("coefficients must be pairwise coprime");
}

double real_power(std::int64_t base, const RootTwoInt& e, int embedding)
{
    // exponent image p + q sqrt(2) (embedding +1) or p - q sqrt(2) (-1)
    const double expo = static_cast<double>(e.p) +
                        (embedding > 0 ? 1.0 : -1.0) * static_cast<double>(e.q) * kSqrt2;
    return std::pow(static_cast<double>(base), expo);
}

double system_residual_unchecked(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x,
                                 std::int64_t y, std::int64_t z, const RootTwoInt& u,
                                 const RootTwoInt& v, const RootTwoInt& w)
{
    const double eq1 = static_cast<double>(a) * real_power(x, u, +1) -
                       static_cast<double>(b) * real_power(y, v, +1) -
                       static_cast<double>(c) * real_power(z, w, +1);
    const double eq2 = static_cast<double>(a) * real_power(x, u, -1) +
                       static_cast<double>(b) * real_power(y, v, -1) -
                       static_cast<double>(c) * real_power(z, w, -1);
    if (!std::isfinite(eq1) || !std::isfinite(eq2))
        throw Overflow("system residual not representable");
    return std::max(std::fabs(eq1), std::fabs(eq2));
}

} // namespace

double root_two_system_residual(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x,
                                std::int64_t y, std::int64_t z, const RootTwoInt& u,
                                const RootTwoInt& v, const RootTwoInt& w)
{
    require_pairwise_coprime(a, b, c);
    require_system_exponents(u, v, w);
    if (x < 1 || y < 1 || z < 1)
        throw PreconditionViolated("variables must be positive integers");
    return system_residual_unchecked(a, b, c, x, y, z, u, v, w);
}

RootTwoSystemScanResult root_two_system_scan(std::int64_t a, std::int64_t b, std::int64_t c,
                                             std::int64_t xmax, int pmax, int qmax, int jobs)
{
    require_pairwise_coprime(a, b, c);
    if (pmax < 1 || qmax < 1)
        throw PreconditionViolated("root_two_system_scan: exponent ranges must be >= 1");

    RootTwoSystemScanResult res;
    if (xmax < 1) return res;

    // exponent grids: p >= 1 keeps u + conj(u) positive; q != 0 for u, v
    std::vector<RootTwoInt> uv_grid, w_grid;
    for (int p = 1; p <= pmax; ++p) {
        for (int q = -qmax; q <= qmax; ++q) {
            if (q != 0) uv_grid.push_back(RootTwoInt{p, q});
            w_grid.push_back(RootTwoInt{p, q});
        }
    }

    auto scan_chunk = [&](std::int64_t x_lo, std::int64_t x_hi) {
        RootTwoSystemScanResult part;
        part.min_residual = std::numeric_limits<double>::infinity();
        for (std::int64_t x = x_lo; x < x_hi; ++x) {
            for (std::int64_t y = 1; y <= xmax; ++y) {
                for (std::int64_t z = 1; z <= xmax; ++z) {
                    if (x == 1 && y == 1 && z == 1) continue; // xyz != 1
                    if (std::gcd(std::gcd(x, y), z) != 1) continue;
                    for (const RootTwoInt& u : uv_grid) {
                        for (const RootTwoInt& v : uv_grid) {
                            for (const RootTwoInt& w : w_grid) {
                                const double residual =
                                    system_residual_unchecked(a, b, c, x, y, z, u, v, w);
                                ++part.evaluated;
                                if (residual < part.min_residual) {
                                    part.min_residual = residual;
                                    part.witness = {x, y, z, u, v, w};
                                }
                            }
                        }
                    }
                }
            }
        }
        part.vacuous = part.evaluated == 0;
        return part;
    };

    res.min_residual = std::numeric_limits<double>::infinity();
    res = chunked_reduce(std::int64_t{1}, xmax + 1, jobs, res, scan_chunk,
                         [](RootTwoSystemScanResult& acc, RootTwoSystemScanResult&& part) {
                             acc.evaluated += part.evaluated;
                             if (!part.vacuous && part.min_residual < acc.min_residual) {
                                 acc.min_residual = part.min_residual;
                                 acc.witness = part.witness;
                             }
                         });
    res.vacuous = res.evaluated == 0;
    return res;
}

std::vector<RingTriple> fermat_search(unsigned n, std::int64_t cbound)
{
    if (n < 2) throw PreconditionViolated("fermat_search: n must be >= 2");
    std::vector<RingTriple> out;
    if (cbound < 0) return out;

    // positive elements in (p, q) order
    std::vector<RootTwoInt> elems;
    for (std::int64_t p = -cbound; p <= cbound; ++p)
        for (std::int64_t q = -cbound; q <= cbound; ++q) {
            RootTwoInt e{p, q};
            if (embedding_sign(e) > 0) elems.push_back(std::move(e));
        }

    std::vector<RootTwoInt> powers(elems.size());
    std::map<std::pair<Int, Int>, std::size_t> power_index;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        powers[i] = pow(elems[i], n);
        power_index[{powers[i].p, powers[i].q}] = i;
    }

    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i; j < elems.size(); ++j) {
            const RootTwoInt sum = powers[i] + powers[j];
            const auto hit = power_index.find({sum.p, sum.q});
            if (hit == power_index.end()) continue;
            const RingTriple t{elems[i], elems[j], elems[hit->second]};
            if (!(pow(t.x, n) + pow(t.y, n) == pow(t.z, n)))
                throw Error("fermat_search: re-substitution failed");
            out.push_back(t);
        }
    }
    return out;
}

TriangleKind classify_triangle(double x, double y, double z, double tol)
{
    if (!(x > 0) || !(y > 0) || !(z > 0) || !std::isfinite(x) || !std::isfinite(y) ||
        !std::isfinite(z))
        throw NonPositiveInput("classify_triangle: sides must be positive and finite");

    double s[3] = {x, y, z};
    std::sort(s, s + 3);
    const double longest = s[2];
    const double sum = s[0] + s[1];
    const double lscale = std::max(longest, sum);
    if (longest > sum + tol * lscale) return TriangleKind::NotATriangle;
    if (std::fabs(longest - sum) <= tol * lscale) return TriangleKind::DegenerateLine;

    const double lhs = longest * longest;
    const double rhs = s[0] * s[0] + s[1] * s[1];
    const double qscale = std::max(lhs, rhs);
    if (std::fabs(lhs - rhs) <= tol * qscale) return TriangleKind::Right;
    return lhs < rhs ? TriangleKind::Acute : TriangleKind::Obtuse;
}

TriangleKind classify_triangle_exact(const Int& x, const Int& y, const Int& z)
{
    if (x < 1 || y < 1 || z < 1)
        throw NonPositiveInput("classify_triangle_exact: sides must be positive");
    Int s[3] = {x, y, z};
    std::sort(s, s + 3);
    if (s[2] > s[0] + s[1]) return TriangleKind::NotATriangle;
    if (s[2] == s[0] + s[1]) return TriangleKind::DegenerateLine;
    const Int lhs = s[2] * s[2];
    const Int rhs = s[0] * s[0] + s[1] * s[1];
    if (lhs == rhs) return TriangleKind::Right;
    return lhs < rhs ? TriangleKind::Acute : TriangleKind::Obtuse;
}

} // namespace fermat::quad
