#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fermat/arith.hpp"
#include "fermat/int.hpp"
#include "fermat/triple.hpp"

namespace fermat::legendre {

/// Coefficients of a x^2 + b y^2 = c z^2 in normal form: positive,
/// pairwise coprime and square-free.
struct LegendreForm {
    std::uint64_t a = 1;
    std::uint64_t b = 1;
    std::uint64_t c = 1;

    LegendreForm() = default;
    LegendreForm(std::uint64_t a_, std::uint64_t b_, std::uint64_t c_) : a(a_), b(b_), c(c_) {}

    /// Original coefficients when the form came out of normalize().
    std::optional<std::array<std::uint64_t, 3>> original;
    /// Square cofactors stripped in the first reduction step.
    std::optional<std::array<std::uint64_t, 3>> square_cofactors;

    friend bool operator==(const LegendreForm& lhs, const LegendreForm& rhs)
    {
        return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c;
    }
};

/// Strips square parts, then migrates shared primes of a pair into the
/// third coefficient ((a,b,c) -> (a/p, b/p, c*p) for p | gcd(a,b), and
/// symmetrically), re-stripping squares until the coefficients are
/// pairwise coprime and square-free.
LegendreForm normalize(std::uint64_t a0, std::uint64_t b0, std::uint64_t c0,
                       const FactorConfig& cfg = {});

struct SolvabilityReport {
    bool solvable = false;
    bool bc_qr_mod_a = false;
    bool ac_qr_mod_b = false;
    bool neg_ab_qr_mod_c = false;
};

/// Legendre's criterion: solvable iff bc is a QR mod a, ac a QR mod b and
/// -ab a QR mod c. Expects a normalized form.
SolvabilityReport is_solvable(const LegendreForm& f);

/// Smallest primitive nontrivial solution with |x| <= sqrt(bc),
/// |y| <= sqrt(ac), |z| <= sqrt(ab) (the Holzer bound, which guarantees a
/// solution inside the box whenever one exists at all). Nonnegative
/// representative, lexicographically first. Returns nullopt exactly when
/// the form is unsolvable; a disagreement with is_solvable is a defect and
/// throws.
std::optional<Triple> find_solution(const LegendreForm& f);

/// All primitive solutions with 0 <= x, y, z <= bound (nonnegative
/// representatives), sorted lexicographically.
std::vector<Triple> enumerate_solutions(const LegendreForm& f, std::int64_t bound);

/// The reduction of a hypothetical x^n + y^n = z^n solution (a, b, c) to a
/// point on a Legendre-family form: a = alpha d1^2, b = beta d2^2,
/// c = gamma d3^2 square-free decompositions, candidate point
/// (alpha^k d1^n, beta^k d2^n, gamma^k d3^n) with k = (n-1)/2.
/// The point lies on alpha x^2 + beta y^2 = gamma z^2 iff a^n + b^n = c^n.
struct FermatReduction {
    LegendreForm form; ///< coefficients (alpha, beta, gamma)
    std::uint64_t d1 = 1, d2 = 1, d3 = 1;
    unsigned k = 1;
    unsigned n = 3;
    Int x, y, z; ///< the candidate point
    bool on_form = false;
};

/// Requires a, b, c pairwise coprime and n odd, n >= 3.
FermatReduction fermat_to_legendre(std::uint64_t a, std::uint64_t b, std::uint64_t c, unsigned n,
                                   const FactorConfig& cfg = {});

struct ReductionCounterexample {
    std::int64_t d1 = 0, d2 = 0, d3 = 0;
    Int base_x, base_y, base_z; ///< (alpha d1^2, beta d2^2, gamma d3^2)
};

/// Scans d1, d2, d3 <= dbound for (alpha d1^2)^n + (beta d2^2)^n =
/// (gamma d3^2)^n over pairwise-coprime bases. A witness would contradict
/// the n-th power equation having no solutions; none is the expected
/// outcome.
std::optional<ReductionCounterexample> reduction_scan(const LegendreForm& f, unsigned n,
                                                      std::int64_t dbound);

struct PrimePowerFlag {
    Triple solution;
    std::array<bool, 3> prime_power{}; ///< per-coordinate flag
};

/// Enumerates primitive solutions with x y z != 1 up to bound and returns
/// those in which at least one coordinate is a prime power. This reports
/// on the generalized prime-power hypothesis rather than asserting it.
std::vector<PrimePowerFlag> prime_power_scan(const LegendreForm& f, std::int64_t bound);

/// y^2 = x (x - a^n) (x + b^n) attached to a hypothetical a^n + b^n = c^n.
struct FreyCurve {
    std::uint64_t a = 1, b = 1, c = 1;
    unsigned n = 3;
    Int a_pow, b_pow;       ///< a^n, b^n
    Int coeff_x2, coeff_x1; ///< expanded cubic x^3 + coeff_x2 x^2 + coeff_x1 x
    Int discriminant;       ///< 16 (a^n b^n (a^n + b^n))^2
    bool fermat_holds = false; ///< a^n + b^n == c^n (never, for valid input)
};

/// Requires gcd(a, b) = 1 and n >= 3. No modularity computation is
/// attempted; this only builds the curve and its discriminant.
FreyCurve frey_curve(std::uint64_t a, std::uint64_t b, std::uint64_t c, unsigned n);

} // namespace fermat::legendre
