#include "fermat/legendre.hpp"

#include <numeric>

#include "fermat/errors.hpp"

namespace fermat::legendre {

namespace {

std::uint64_t strip_square_part(std::uint64_t v, const FactorConfig& cfg)
{
    return squarefree_decompose(v, cfg).core;
}

} // namespace

LegendreForm normalize(std::uint64_t a0, std::uint64_t b0, std::uint64_t c0,
                       const FactorConfig& cfg)
{
    if (a0 == 0 || b0 == 0 || c0 == 0) throw DegenerateForm("normalize: zero coefficient");

    const auto da = squarefree_decompose(a0, cfg);
    const auto db = squarefree_decompose(b0, cfg);
    const auto dc = squarefree_decompose(c0, cfg);

    std::uint64_t a = da.core, b = db.core, c = dc.core;

    // migrate shared primes of any pair into the third coefficient and
    // re-strip; abc decreases each round, so this reaches a fixpoint
    for (;;) {
        std::uint64_t g;
        if ((g = std::gcd(a, b)) > 1) {
            const std::uint64_t p = factorize(g, cfg).factors.front().first;
            a /= p;
            b /= p;
            c = strip_square_part(c * p, cfg);
        } else if ((g = std::gcd(a, c)) > 1) {
            const std::uint64_t p = factorize(g, cfg).factors.front().first;
            a /= p;
            c /= p;
            b = strip_square_part(b * p, cfg);
        } else if ((g = std::gcd(b, c)) > 1) {
            const std::uint64_t p = factorize(g, cfg).factors.front().first;
            b /= p;
            c /= p;
            a = strip_square_part(a * p, cfg);
        } else {
            break;
        }
    }
    if (a == 0 || b == 0 || c == 0) throw DegenerateForm("normalize: coefficient collapsed to 0");

    LegendreForm f;
    f.a = a;
    f.b = b;
    f.c = c;
    f.original = {a0, b0, c0};
    f.square_cofactors = {da.cofactor, db.cofactor, dc.cofactor};
    return f;
}

SolvabilityReport is_solvable(const LegendreForm& f)
{
    SolvabilityReport r;
    r.bc_qr_mod_a = is_qr(Int(f.b) * f.c, f.a);
    r.ac_qr_mod_b = is_qr(Int(f.a) * f.c, f.b);
    r.neg_ab_qr_mod_c = is_qr(-(Int(f.a) * f.b), f.c);
    r.solvable = r.bc_qr_mod_a && r.ac_qr_mod_b && r.neg_ab_qr_mod_c;
    return r;
}

std::optional<Triple> find_solution(const LegendreForm& f)
{
    const bool solvable = is_solvable(f).solvable;

    const std::uint64_t bx = isqrt_u64(f.b * f.c);
    const std::uint64_t by = isqrt_u64(f.a * f.c);
    const std::uint64_t bz = isqrt_u64(f.a * f.b);

    for (std::uint64_t x = 0; x <= bx; ++x) {
        const Int ax2 = Int(f.a) * x * x;
        for (std::uint64_t y = 0; y <= by; ++y) {
            const Int lhs = ax2 + Int(f.b) * y * y;
            for (std::uint64_t z = 0; z <= bz; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (lhs != Int(f.c) * z * z) continue;
                if (std::gcd(std::gcd(x, y), z) != 1) continue;
                if (!solvable)
                    throw Error("find_solution: solution found but criterion says unsolvable");
                return Triple{Int(x), Int(y), Int(z)};
            }
        }
    }
    if (solvable)
        throw SearchExhausted("find_solution: criterion says solvable but the Holzer box is empty");
    return std::nullopt;
}

std::vector<Triple> enumerate_solutions(const LegendreForm& f, std::int64_t bound)
{
    std::vector<Triple> out;
    if (bound < 0) return out;
    for (std::int64_t x = 0; x <= bound; ++x) {
        const Int ax2 = Int(f.a) * x * x;
        for (std::int64_t y = 0; y <= bound; ++y) {
            const Int lhs = ax2 + Int(f.b) * y * y;
            for (std::int64_t z = 0; z <= bound; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (lhs != Int(f.c) * z * z) continue;
                if (std::gcd(std::gcd(x, y), z) != 1) continue;
                out.push_back(Triple{Int(x), Int(y), Int(z)});
            }
        }
    }
    return out; // loop order is already lexicographic
}

FermatReduction fermat_to_legendre(std::uint64_t a, std::uint64_t b, std::uint64_t c, unsigned n,
                                   const FactorConfig& cfg)
{
    if (a < 1 || b < 1 || c < 1) throw PreconditionViolated("fermat_to_legendre: need positive a, b, c");
    if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
        throw PreconditionViolated("fermat_to_legendre: a, b, c must be pairwise coprime");
    if (n < 3 || n % 2 == 0) throw PreconditionViolated("fermat_to_legendre: n must be odd and >= 3");

    const auto da = squarefree_decompose(a, cfg);
    const auto db = squarefree_decompose(b, cfg);
    const auto dc = squarefree_decompose(c, cfg);

    FermatReduction r;
    r.form.a = da.core;
    r.form.b = db.core;
    r.form.c = dc.core;
    r.form.original = {a, b, c};
    r.form.square_cofactors = {da.cofactor, db.cofactor, dc.cofactor};
    r.d1 = da.cofactor;
    r.d2 = db.cofactor;
    r.d3 = dc.cofactor;
    r.n = n;
    r.k = (n - 1) / 2;
    r.x = pow_int(Int(da.core), r.k) * pow_int(Int(da.cofactor), n);
    r.y = pow_int(Int(db.core), r.k) * pow_int(Int(db.cofactor), n);
    r.z = pow_int(Int(dc.core), r.k) * pow_int(Int(dc.cofactor), n);

    r.on_form = (Int(r.form.a) * r.x * r.x + Int(r.form.b) * r.y * r.y == Int(r.form.c) * r.z * r.z);
    // alpha x^2 = (alpha d1^2)^n = a^n exactly, so membership must agree
    // with the power equation itself
    const bool power_eq = (pow_int(Int(a), n) + pow_int(Int(b), n) == pow_int(Int(c), n));
    if (r.on_form != power_eq) throw Error("fermat_to_legendre: reduction identity failed");
    return r;
}

std::optional<ReductionCounterexample> reduction_scan(const LegendreForm& f, unsigned n,
                                                      std::int64_t dbound)
{
    if (n < 3 || n % 2 == 0) throw PreconditionViolated("reduction_scan: n must be odd and >= 3");
    for (std::int64_t d1 = 1; d1 <= dbound; ++d1) {
        const Int base_x = Int(f.a) * d1 * d1;
        const Int px = pow_int(base_x, n);
        for (std::int64_t d2 = 1; d2 <= dbound; ++d2) {
            const Int base_y = Int(f.b) * d2 * d2;
            if (gcd(base_x, base_y) != 1) continue;
            const Int sum = px + pow_int(base_y, n);
            for (std::int64_t d3 = 1; d3 <= dbound; ++d3) {
                const Int base_z = Int(f.c) * d3 * d3;
                if (gcd(base_x, base_z) != 1 || gcd(base_y, base_z) != 1) continue;
                if (sum == pow_int(base_z, n)) {
                    return ReductionCounterexample{d1, d2, d3, base_x, base_y, base_z};
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<PrimePowerFlag> prime_power_scan(const LegendreForm& f, std::int64_t bound)
{
    std::vector<PrimePowerFlag> out;
    for (const Triple& t : enumerate_solutions(f, bound)) {
        if (t.x * t.y * t.z == 1) continue;
        PrimePowerFlag flag;
        flag.solution = t;
        bool any = false;
        const Int* coords[3] = {&t.x, &t.y, &t.z};
        for (int i = 0; i < 3; ++i) {
            const Int& v = *coords[i];
            if (v >= 2 && is_prime_power(static_cast<std::uint64_t>(v)).has_value()) {
                flag.prime_power[static_cast<std::size_t>(i)] = true;
                any = true;
            }
        }
        if (any) out.push_back(std::move(flag));
    }
    return out;
}

FreyCurve frey_curve(std::uint64_t a, std::uint64_t b, std::uint64_t c, unsigned n)
{
    if (a < 1 || b < 1 || c < 1) throw PreconditionViolated("frey_curve: need positive a, b, c");
    // the curve is built from a^n and -b^n alone; c enters only through the
    // power-sum flag, so (a, b) is the pair that must be primitive
    if (std::gcd(a, b) != 1) throw PreconditionViolated("frey_curve: gcd(a, b) must be 1");
    if (n < 3) throw PreconditionViolated("frey_curve: n must be >= 3");

    FreyCurve e;
    e.a = a;
    e.b = b;
    e.c = c;
    e.n = n;
    e.a_pow = pow_int(Int(a), n);
    e.b_pow = pow_int(Int(b), n);
    // x (x - a^n) (x + b^n) = x^3 + (b^n - a^n) x^2 - a^n b^n x
    e.coeff_x2 = e.b_pow - e.a_pow;
    e.coeff_x1 = -(e.a_pow * e.b_pow);
    const Int root_product = e.a_pow * e.b_pow * (e.a_pow + e.b_pow);
    e.discriminant = 16 * root_product * root_product;
    e.fermat_holds = (e.a_pow + e.b_pow == pow_int(Int(c), n));
    return e;
}

} // namespace fermat::legendre
