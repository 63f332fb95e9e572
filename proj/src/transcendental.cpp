#include "fermat/transcendental.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "fermat/errors.hpp"
#include "fermat/parallel.hpp"

namespace fermat::realexp {

namespace {

// z^2 vs x^2 + y^2 in 128 bits; exact for any int64 input
int square_trichotomy(std::int64_t x, std::int64_t y, std::int64_t z)
{
    const __int128 lhs = static_cast<__int128>(z) * z;
    const __int128 rhs = static_cast<__int128>(x) * x + static_cast<__int128>(y) * y;
    if (lhs < rhs) return -1;
    if (lhs == rhs) return 0;
    return 1;
}

} // namespace

bool in_F(std::int64_t a, std::int64_t b, std::int64_t c)
{
    if (!(1 <= a && a < b && b < c)) return false;
    return square_trichotomy(a, b, c) < 0;
}

RootSolveResult solve_exponent(std::int64_t a, std::int64_t b, std::int64_t c, double tol)
{
    if (!in_F(a, b, c)) throw PreconditionViolated("solve_exponent: (a, b, c) must be in F");
    if (!(tol > 0)) throw PreconditionViolated("solve_exponent: tol must be positive");

    const double la = std::log(static_cast<double>(a) / static_cast<double>(c));
    const double lb = std::log(static_cast<double>(b) / static_cast<double>(c));
    const auto g = [la, lb](double x) { return std::exp(x * la) + std::exp(x * lb); };

    RootSolveResult r;
    double lo = 2.0; // g(2) > 1 exactly, by membership in F
    double hi = 4.0;
    while (g(hi) >= 1.0) hi *= 2.0;
    while (hi - lo > tol) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break; // double resolution reached
        (g(mid) >= 1.0 ? lo : hi) = mid;
        ++r.iterations;
    }
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    r.alpha = lo + (hi - lo) / 2;
    r.residual = std::fabs(g(r.alpha) - 1.0);
    r.nearest_integer = std::llround(r.alpha);
    r.integer_distance = std::fabs(r.alpha - static_cast<double>(r.nearest_integer));
    return r;
}

NoRootCertificate certify_no_root(std::int64_t a, std::int64_t b, std::int64_t c)
{
    if (!(1 <= a && a < b && b < c))
        throw PreconditionViolated("certify_no_root: need 1 <= a < b < c");
    if (square_trichotomy(a, b, c) <= 0)
        throw PreconditionViolated("certify_no_root: need c^2 > a^2 + b^2");

    NoRootCertificate cert;
    cert.g2_numerator = Int(a) * a + Int(b) * b;
    cert.g2_denominator = Int(c) * c;
    // g(2) < 1 and g strictly decreasing (both ratios below 1), so no
    // root exists at or beyond 2
    cert.certified = cert.g2_numerator < cert.g2_denominator;
    return cert;
}

Solvability solvability(std::int64_t x, std::int64_t y, std::int64_t z)
{
    if (!(1 <= x && x < y && y < z))
        throw PreconditionViolated("solvability: need 1 <= x < y < z");
    switch (square_trichotomy(x, y, z)) {
    case -1: return Solvability::SolvableWithAlpha;
    case 0: return Solvability::BoundaryAlphaTwo;
    default: return Solvability::Unsolvable;
    }
}

ProximityReport integer_proximity_scan(std::int64_t cmax, double threshold, double tol)
{
    ProximityReport rep;
    rep.min_distance = std::numeric_limits<double>::infinity();
    for (std::int64_t c = 3; c <= cmax; ++c) {
        for (std::int64_t b = 2; b < c; ++b) {
            for (std::int64_t a = 1; a < b; ++a) {
                if (!in_F(a, b, c)) continue;
                const RootSolveResult root = solve_exponent(a, b, c, tol);
                ++rep.instances;
                if (root.nearest_integer < 3) continue;
                ++rep.considered;
                const ProximityEntry entry{a, b, c, root.alpha, root.nearest_integer,
                                           root.integer_distance};
                if (entry.distance < rep.min_distance) {
                    rep.min_distance = entry.distance;
                    rep.minimum = entry;
                }
                if (entry.distance < threshold) rep.flagged.push_back(entry);
            }
        }
    }
    rep.vacuous = rep.considered == 0;
    return rep;
}

ConstantScanReport special_constant_scan(std::int64_t cmax)
{
    ConstantScanReport rep;
    rep.at_e.residual = std::numeric_limits<double>::infinity();
    rep.at_pi.residual = std::numeric_limits<double>::infinity();
    constexpr double kE = std::numbers::e_v<double>;
    constexpr double kPi = std::numbers::pi_v<double>;
    for (std::int64_t c = 3; c <= cmax; ++c) {
        for (std::int64_t b = 2; b < c; ++b) {
            for (std::int64_t a = 1; a < b; ++a) {
                if (!in_F(a, b, c)) continue;
                ++rep.instances;
                const double ad = static_cast<double>(a);
                const double bd = static_cast<double>(b);
                const double cd = static_cast<double>(c);
                const double res_e =
                    std::fabs(std::pow(ad, kE) + std::pow(bd, kE) - std::pow(cd, kE));
                const double res_pi =
                    std::fabs(std::pow(ad, kPi) + std::pow(bd, kPi) - std::pow(cd, kPi));
                if (res_e < rep.at_e.residual) rep.at_e = {a, b, c, res_e};
                if (res_pi < rep.at_pi.residual) rep.at_pi = {a, b, c, res_pi};
            }
        }
    }
    rep.vacuous = rep.instances == 0;
    return rep;
}

std::optional<PowerEquationWitness> power_equation_scan(unsigned nmax, std::int64_t zmax,
                                                        int jobs)
{
    if (nmax < 3) throw PreconditionViolated("power_equation_scan: nmax must be >= 3");
    if (zmax < 3) return std::nullopt;

    auto scan_chunk = [zmax, nmax](std::int64_t n_lo,
                                   std::int64_t n_hi) -> std::optional<PowerEquationWitness> {
        for (std::int64_t ni = n_lo; ni < n_hi; ++ni) {
            const unsigned n = static_cast<unsigned>(ni);
            std::vector<Int> pw(static_cast<std::size_t>(zmax) + 1);
            for (std::int64_t i = 0; i <= zmax; ++i) pw[static_cast<std::size_t>(i)] = pow_int(Int(i), n);
            for (std::int64_t x = 1; x <= zmax; ++x) {
                for (std::int64_t y = x; y <= zmax; ++y) {
                    if (std::gcd(x, y) != 1) continue;
                    const Int sum = pw[static_cast<std::size_t>(x)] + pw[static_cast<std::size_t>(y)];
                    const auto it = std::lower_bound(pw.begin() + y + 1, pw.end(), sum);
                    if (it != pw.end() && *it == sum) {
                        const std::int64_t z = it - pw.begin();
                        return PowerEquationWitness{x, y, z, n};
                    }
                }
            }
        }
        return std::nullopt;
    };

    // partition over n; first hit in ascending n order wins
    return chunked_reduce(std::int64_t{3}, static_cast<std::int64_t>(nmax) + 1, jobs,
                          std::optional<PowerEquationWitness>{}, scan_chunk,
                          [](std::optional<PowerEquationWitness>& acc,
                             std::optional<PowerEquationWitness>&& part) {
                              if (!acc && part) acc = std::move(part);
                          });
}

} // namespace fermat::realexp
