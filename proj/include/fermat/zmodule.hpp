#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "fermat/int.hpp"

namespace fermat::zmodule {

using Vec3 = std::array<Int, 3>;
using Vec4 = std::array<Int, 4>;

/// Parameters (a, b, c) with 0 < a < b < c, gcd(a, b) = 1, gcd(ab, c) = 1.
struct SParams {
    Int a, b, c;
};

/// Membership test for the parameter set above.
bool in_S(const Int& a, const Int& b, const Int& c);
inline bool in_S(const SParams& s) { return in_S(s.a, s.b, s.c); }

/// Membership in L = { (x, y, z) : a x + b y - c z = 0 }. Throws when the
/// parameters are not in S.
bool in_L(const Vec3& v, const SParams& s);

/// Exact 3x3 determinant of the three rows.
Int wedge3(const Vec3& v0, const Vec3& v1, const Vec3& v2);

/// Exact 4x4 determinant of the four rows.
Int wedge4(const Vec4& v0, const Vec4& v1, const Vec4& v2, const Vec4& v3);

/// True iff the two vectors are independent over Q (nonzero cross product).
bool independent(const Vec3& v0, const Vec3& v1);

/// An integer basis of the rank-2 solution lattice of a x + b y - c z = 0,
/// built from an extended-gcd kernel reduction. Both vectors lie in L and
/// are independent.
std::pair<Vec3, Vec3> basis_of_L(const SParams& s);

/// wedge3(l0, l1, (a^k, b^k, c^k)) != 0 for independent l0, l1 in L and
/// k >= 2. True is the expected outcome in every instance; false would be
/// a counterexample to the underlying power-equation nonsolvability.
bool powers_independent(const Vec3& l0, const Vec3& l1, const SParams& s, unsigned k);

enum class ExclusionVerdict {
    Vacuous,           ///< determinant nonzero, nothing to conclude
    AtLeastOneOutside, ///< determinant zero forces m0 or m1 outside L
};

struct ExclusionResult {
    ExclusionVerdict verdict = ExclusionVerdict::Vacuous;
    Int det;
    bool m0_in_L = false;
    bool m1_in_L = false;
    /// Set when det == 0 yet both vectors are in L. Never expected; a true
    /// value here contradicts the independence theorem.
    bool contradiction = false;
};

/// Contrapositive check: if wedge3(m0, m1, (a^k, b^k, c^k)) = 0 for an
/// independent pair, then at least one of m0, m1 lies outside L.
ExclusionResult dependent_exclusion_check(const Vec3& m0, const Vec3& m1, const SParams& s,
                                          unsigned k);

/// Positive, pairwise coprime (a, b, c, d) for a x + b y + c z - d t = 0.
struct S4Params {
    Int a, b, c, d;
};

bool valid_s4(const S4Params& p);

/// wedge4(l0, l1, l2, (a^k, b^k, c^k, d^k)) != 0 for three independent
/// members of the hyperplane and k >= 3. A conjecture probe: the result is
/// reported, not asserted.
bool quad_powers_independent(const Vec4& l0, const Vec4& l1, const Vec4& l2, const S4Params& p,
                             unsigned k);

struct IndependenceInstance {
    SParams s;
    Vec3 l0, l1;
    unsigned k = 2;
};

struct IndependenceSweepResult {
    std::uint64_t samples = 0;
    std::uint64_t failures = 0;
    std::optional<IndependenceInstance> first_failure;
};

/// Seeded random sweep of powers_independent: parameters in S with entries
/// <= 100, independent pairs from the lattice basis with entries <= 10^6,
/// k in [2, 6]. Every instance is expected to pass; failures are counted
/// and the first one kept.
IndependenceSweepResult random_independence_sweep(std::uint64_t samples, std::uint64_t seed);

struct EulerWitness {
    std::int64_t x = 0, y = 0, z = 0, u = 0;

    friend bool operator==(const EulerWitness&, const EulerWitness&) = default;
};

/// Exhaustive scan for pairwise-coprime positive x, y, z, u <= bound with
/// x^n + y^n + z^n = u^n; u runs descending, (x, y, z) ascending inside.
/// None is the expected desk-scale outcome.
std::optional<EulerWitness> euler_counterexample_scan(unsigned n, std::int64_t bound,
                                                      int jobs = 1);

} // namespace fermat::zmodule
