#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fermat/int.hpp"

namespace fermat::realexp {

/// Exact membership in F = { a < b < c, c^2 < a^2 + b^2 }. These are
/// precisely the integer triples whose exponent equation has a real root
/// above 2.
bool in_F(std::int64_t a, std::int64_t b, std::int64_t c);

/// The unique root alpha > 2 of a^x + b^x = c^x, located by bracketing and
/// bisection on g(x) = (a/c)^x + (b/c)^x, which decreases strictly.
struct RootSolveResult {
    double alpha = 0.0;
    /// |(a/c)^alpha + (b/c)^alpha - 1|, i.e. |a^alpha + b^alpha - c^alpha|
    /// scaled by c^alpha. The scaled form is the one double precision can
    /// certify; the raw difference inherits c^alpha-sized rounding.
    double residual = 0.0;
    double bracket_lo = 2.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    long long nearest_integer = 0;
    double integer_distance = 0.0;
};

/// Requires (a, b, c) in F and tol > 0. Bisection runs until the bracket
/// width is at most tol.
RootSolveResult solve_exponent(std::int64_t a, std::int64_t b, std::int64_t c,
                               double tol = 1e-12);

/// Certificate that a^x + b^x = c^x has no real root x > 2:
/// g(2) = (a^2 + b^2) / c^2 < 1 by exact integer comparison, and g
/// decreases strictly since both ratios are below 1.
struct NoRootCertificate {
    bool certified = false;
    Int g2_numerator;   ///< a^2 + b^2
    Int g2_denominator; ///< c^2
};

/// Requires a < b < c with c^2 > a^2 + b^2.
NoRootCertificate certify_no_root(std::int64_t a, std::int64_t b, std::int64_t c);

enum class Solvability {
    SolvableWithAlpha, ///< c^2 < a^2 + b^2: unique root alpha > 2 exists
    BoundaryAlphaTwo,  ///< c^2 = a^2 + b^2: Pythagorean, the root is exactly 2
    Unsolvable,        ///< c^2 > a^2 + b^2: no root above 2
};

/// Exact trichotomy on z^2 versus x^2 + y^2. Requires x < y < z, all >= 1.
Solvability solvability(std::int64_t x, std::int64_t y, std::int64_t z);

struct ProximityEntry {
    std::int64_t a = 0, b = 0, c = 0;
    double alpha = 0.0;
    long long nearest_integer = 0;
    double distance = 0.0;
};

struct ProximityReport {
    bool vacuous = true;
    /// Minimum |alpha - round(alpha)| over instances with round(alpha) >= 3.
    double min_distance = 0.0;
    ProximityEntry minimum;
    std::vector<ProximityEntry> flagged; ///< below threshold, for manual review
    std::uint64_t instances = 0;         ///< members of F solved
    std::uint64_t considered = 0;        ///< of those, nearest integer >= 3
};

/// Solves every member of F with c <= cmax and reports how close the roots
/// come to integers >= 3. A zero distance would contradict the n-th power
/// equation having no solutions; the minimum is reported, not asserted.
ProximityReport integer_proximity_scan(std::int64_t cmax, double threshold,
                                       double tol = 1e-12);

struct ConstantWitness {
    std::int64_t a = 0, b = 0, c = 0;
    double residual = 0.0;
};

struct ConstantScanReport {
    bool vacuous = true;
    ConstantWitness at_e;  ///< minimum |a^e + b^e - c^e| over F, c <= cmax
    ConstantWitness at_pi; ///< minimum |a^pi + b^pi - c^pi|
    std::uint64_t instances = 0;
};

/// Residuals of the fixed transcendental exponents e and pi over F.
ConstantScanReport special_constant_scan(std::int64_t cmax);

struct PowerEquationWitness {
    std::int64_t x = 0, y = 0, z = 0;
    unsigned n = 0;

    friend bool operator==(const PowerEquationWitness&, const PowerEquationWitness&) = default;
};

/// Exhaustive exact scan for x^n + y^n = z^n with x <= y < z <= zmax,
/// gcd(x, y) = 1, 3 <= n <= nmax. None is the expected outcome.
std::optional<PowerEquationWitness> power_equation_scan(unsigned nmax, std::int64_t zmax,
                                                        int jobs = 1);

} // namespace fermat::realexp
