#include "fermat/zmodule.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "fermat/errors.hpp"
#include "fermat/parallel.hpp"

namespace fermat::zmodule {

bool in_S(const Int& a, const Int& b, const Int& c)
{
    if (!(a >= 1 && a < b && b < c)) return false;
    return gcd(a, b) == 1 && gcd(a * b, c) == 1;
}

bool in_L(const Vec3& v, const SParams& s)
{
    if (!in_S(s)) throw PreconditionViolated("in_L: parameters are not in S");
    return s.a * v[0] + s.b * v[1] - s.c * v[2] == 0;
}

Int wedge3(const Vec3& v0, const Vec3& v1, const Vec3& v2)
{
    return v0[0] * (v1[1] * v2[2] - v1[2] * v2[1]) - v0[1] * (v1[0] * v2[2] - v1[2] * v2[0]) +
           v0[2] * (v1[0] * v2[1] - v1[1] * v2[0]);
}

namespace {

Int det3_cols(const Vec4& r0, const Vec4& r1, const Vec4& r2, int c0, int c1, int c2)
{
    const auto minor2 = [&](const Vec4& p, const Vec4& q, int i, int j) {
        return p[i] * q[j] - p[j] * q[i];
    };
    return r0[c0] * minor2(r1, r2, c1, c2) - r0[c1] * minor2(r1, r2, c0, c2) +
           r0[c2] * minor2(r1, r2, c0, c1);
}

} // namespace

Int wedge4(const Vec4& v0, const Vec4& v1, const Vec4& v2, const Vec4& v3)
{
    Int det = 0;
    int sign = 1;
    for (int col = 0; col < 4; ++col) {
        int rest[3], idx = 0;
        for (int c = 0; c < 4; ++c)
            if (c != col) rest[idx++] = c;
        det += sign * v0[col] * det3_cols(v1, v2, v3, rest[0], rest[1], rest[2]);
        sign = -sign;
    }
    return det;
}

bool independent(const Vec3& v0, const Vec3& v1)
{
    const Int cx = v0[1] * v1[2] - v0[2] * v1[1];
    const Int cy = v0[2] * v1[0] - v0[0] * v1[2];
    const Int cz = v0[0] * v1[1] - v0[1] * v1[0];
    return cx != 0 || cy != 0 || cz != 0;
}

namespace {

// g = gcd(a, b) together with p, q satisfying a p + b q = g
std::tuple<Int, Int, Int> extended_gcd(Int a, Int b)
{
    Int old_r = std::move(a), r = std::move(b);
    Int old_p = 1, p = 0;
    Int old_q = 0, q = 1;
    while (r != 0) {
        const Int quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_p -= quot * p;
        std::swap(old_p, p);
        old_q -= quot * q;
        std::swap(old_q, q);
    }
    return {old_r, old_p, old_q};
}

} // namespace

std::pair<Vec3, Vec3> basis_of_L(const SParams& s)
{
    if (!in_S(s)) throw PreconditionViolated("basis_of_L: parameters are not in S");

    auto [g, p, q] = extended_gcd(s.a, s.b);
    // a > 0, so g > 0 here
    const Int bg = s.b / g;
    const Int ag = s.a / g;

    const Vec3 v1{bg, -ag, 0};
    // a (p c) + b (q c) = c g, so (pc, qc, g) solves the relation; shift by
    // multiples of v1 to bring the first entry into [0, b/g)
    Int x0 = p * s.c;
    Int y0 = q * s.c;
    Int shift = x0 / bg;
    if (x0 % bg < 0) shift -= 1; // floor division
    x0 -= shift * bg;
    y0 += shift * ag;
    const Vec3 v2{x0, y0, g};
    return {v1, v2};
}

bool powers_independent(const Vec3& l0, const Vec3& l1, const SParams& s, unsigned k)
{
    if (k < 2) throw PreconditionViolated("powers_independent: k must be >= 2");
    if (!in_L(l0, s) || !in_L(l1, s))
        throw PreconditionViolated("powers_independent: vectors must lie in L");
    if (!independent(l0, l1))
        throw PreconditionViolated("powers_independent: vectors must be independent");
    const Vec3 powers{pow_int(s.a, k), pow_int(s.b, k), pow_int(s.c, k)};
    return wedge3(l0, l1, powers) != 0;
}

ExclusionResult dependent_exclusion_check(const Vec3& m0, const Vec3& m1, const SParams& s,
                                          unsigned k)
{
    if (k < 2) throw PreconditionViolated("dependent_exclusion_check: k must be >= 2");
    if (!in_S(s)) throw PreconditionViolated("dependent_exclusion_check: parameters not in S");
    if (!independent(m0, m1))
        throw PreconditionViolated("dependent_exclusion_check: vectors must be independent");

    ExclusionResult r;
    const Vec3 powers{pow_int(s.a, k), pow_int(s.b, k), pow_int(s.c, k)};
    r.det = wedge3(m0, m1, powers);
    r.m0_in_L = in_L(m0, s);
    r.m1_in_L = in_L(m1, s);
    if (r.det != 0) {
        r.verdict = ExclusionVerdict::Vacuous;
    } else {
        r.verdict = ExclusionVerdict::AtLeastOneOutside;
        r.contradiction = r.m0_in_L && r.m1_in_L;
    }
    return r;
}

bool valid_s4(const S4Params& p)
{
    const Int* vals[4] = {&p.a, &p.b, &p.c, &p.d};
    for (const Int* v : vals)
        if (*v < 1) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (gcd(*vals[i], *vals[j]) != 1) return false;
    return true;
}

bool quad_powers_independent(const Vec4& l0, const Vec4& l1, const Vec4& l2, const S4Params& p,
                             unsigned k)
{
    if (k < 3) throw PreconditionViolated("quad_powers_independent: k must be >= 3");
    if (!valid_s4(p))
        throw PreconditionViolated("quad_powers_independent: parameters must be positive and pairwise coprime");
    const auto on_plane = [&p](const Vec4& v) {
        return p.a * v[0] + p.b * v[1] + p.c * v[2] - p.d * v[3] == 0;
    };
    if (!on_plane(l0) || !on_plane(l1) || !on_plane(l2))
        throw PreconditionViolated("quad_powers_independent: vectors must satisfy the relation");

    // rank 3 <=> some 3x3 minor of the stacked 3x4 matrix is nonzero
    bool rank3 = false;
    for (int drop = 0; drop < 4 && !rank3; ++drop) {
        int cols[3], idx = 0;
        for (int c = 0; c < 4; ++c)
            if (c != drop) cols[idx++] = c;
        if (det3_cols(l0, l1, l2, cols[0], cols[1], cols[2]) != 0) rank3 = true;
    }
    if (!rank3) throw PreconditionViolated("quad_powers_independent: vectors must be independent");

    const Vec4 powers{pow_int(p.a, k), pow_int(p.b, k), pow_int(p.c, k), pow_int(p.d, k)};
    return wedge4(l0, l1, l2, powers) != 0;
}

IndependenceSweepResult random_independence_sweep(std::uint64_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> entry(1, 100);
    std::uniform_int_distribution<std::int64_t> coeff(-100, 100);
    std::uniform_int_distribution<unsigned> kdist(2, 6);
    const Int entry_limit = 1'000'000;

    IndependenceSweepResult res;
    for (std::uint64_t i = 0; i < samples; ++i) {
        SParams s;
        for (;;) {
            std::int64_t vals[3] = {entry(rng), entry(rng), entry(rng)};
            std::sort(vals, vals + 3);
            if (in_S(Int(vals[0]), Int(vals[1]), Int(vals[2]))) {
                s = SParams{Int(vals[0]), Int(vals[1]), Int(vals[2])};
                break;
            }
        }
        const auto [v1, v2] = basis_of_L(s);

        Vec3 l0, l1;
        for (;;) {
            const std::int64_t m00 = coeff(rng), m01 = coeff(rng);
            const std::int64_t m10 = coeff(rng), m11 = coeff(rng);
            if (m00 * m11 - m01 * m10 == 0) continue; // dependent combination
            bool in_range = true;
            for (int j = 0; j < 3; ++j) {
                l0[j] = m00 * v1[j] + m01 * v2[j];
                l1[j] = m10 * v1[j] + m11 * v2[j];
                if (abs(l0[j]) > entry_limit || abs(l1[j]) > entry_limit) in_range = false;
            }
            if (in_range) break;
        }

        const unsigned k = kdist(rng);
        ++res.samples;
        if (!powers_independent(l0, l1, s, k)) {
            ++res.failures;
            if (!res.first_failure) res.first_failure = IndependenceInstance{s, l0, l1, k};
        }
    }
    return res;
}

std::optional<EulerWitness> euler_counterexample_scan(unsigned n, std::int64_t bound, int jobs)
{
    if (n < 4) throw PreconditionViolated("euler_counterexample_scan: n must be >= 4");
    if (bound < 1) return std::nullopt;

    // powers are accumulated in 128 bits exactly; reject ranges that would wrap
    const __uint128_t kMax = ~static_cast<__uint128_t>(0) / 4;
    std::vector<__uint128_t> pw(static_cast<std::size_t>(bound) + 1);
    for (std::int64_t i = 0; i <= bound; ++i) {
        __uint128_t v = 1;
        for (unsigned e = 0; e < n; ++e) {
            if (i > 1 && v > kMax / static_cast<__uint128_t>(i))
                throw PreconditionViolated("euler_counterexample_scan: bound^n exceeds exact range");
            v *= static_cast<__uint128_t>(i);
        }
        pw[static_cast<std::size_t>(i)] = v;
    }

    // chunks ordered by descending u so the merged first hit matches a
    // sequential descending scan; inside a fixed u, (z, y, x) ascend
    auto scan_chunk = [&pw, bound](std::int64_t lo, std::int64_t hi) -> std::optional<EulerWitness> {
        for (std::int64_t i = lo; i < hi; ++i) {
            const std::int64_t u = bound - i; // i indexes u downward
            const __uint128_t target = pw[static_cast<std::size_t>(u)];
            for (std::int64_t z = 1; z < u; ++z) {
                const __uint128_t pz = pw[static_cast<std::size_t>(z)];
                if (3 * pz < target) continue; // x, y <= z cannot reach the sum
                if (std::gcd(z, u) != 1) continue;
                for (std::int64_t y = 1; y <= z; ++y) {
                    const __uint128_t py = pw[static_cast<std::size_t>(y)];
                    if (pz + 2 * py < target) continue; // x <= y keeps the sum short
                    if (pz + py >= target) break;       // no room left for x >= 1
                    if (std::gcd(y, z) != 1 || std::gcd(y, u) != 1) continue;
                    for (std::int64_t x = 1; x <= y; ++x) {
                        const __uint128_t sum = pw[static_cast<std::size_t>(x)] + py + pz;
                        if (sum > target) break;
                        if (sum != target) continue;
                        if (std::gcd(x, y) == 1 && std::gcd(x, z) == 1 && std::gcd(x, u) == 1)
                            return EulerWitness{x, y, z, u};
                    }
                }
            }
        }
        return std::nullopt;
    };

    return chunked_reduce(
        std::int64_t{0}, bound - 1, jobs, std::optional<EulerWitness>{}, scan_chunk,
        [](std::optional<EulerWitness>& acc, std::optional<EulerWitness>&& part) {
            if (!acc && part) acc = std::move(part);
        });
}

} // namespace fermat::zmodule
