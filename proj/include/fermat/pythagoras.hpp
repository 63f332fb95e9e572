#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fermat/int.hpp"
#include "fermat/triple.hpp"

namespace fermat::pythagoras {

/// A point on X^(2n) + 4*Y^n = Z^2 with gcd(X, 2Y) = 1. Each such point
/// induces the Pythagorean triple (Z*X^n, 2*Y^n, X^(2n) + 2*Y^n).
struct FamilySolution {
    Int x; ///< X
    Int y; ///< Y
    Int z; ///< Z
    unsigned n = 1;
    /// Generator pair when the solution came from a parametrization;
    /// gcd(u, v) = 1 and u*v even.
    std::optional<std::pair<Int, Int>> generators;

    Triple pythagorean_triple() const;
};

struct ReducibilityResult {
    bool reducible = false;
    /// The two integer roots of x^2 + a^n x - b^n when reducible.
    std::optional<std::pair<Int, Int>> roots;
    /// The odd-a normal form does not apply; reported for review, the
    /// discriminant test runs regardless of parity.
    bool even_a = false;
};

/// Reducibility of x^2 + a^n x - b^n over Q, decided by testing whether the
/// discriminant a^(2n) + 4 b^n is a perfect square.
/// Requires gcd(a, b) = 1, a != 0, b > 0.
ReducibilityResult is_reducible(const Int& a, const Int& b, unsigned n);

/// True iff Z^2 = X^(2n) + 4 Y^n. The equivalent rewritten identity
/// (Z X^n)^2 + (2 Y^n)^2 = (X^(2n) + 2 Y^n)^2 is evaluated exactly as a
/// redundant cross-check.
bool check_family_identity(const Int& x, const Int& y, const Int& z, unsigned n);

/// n = 1 family: X = u - v, Y = u v, Z = u + v.
/// Requires u > v >= 1, gcd(u, v) = 1, u*v even.
FamilySolution param_n1(const Int& u, const Int& v);

/// n = 2 family: X = sqrt(u^2 - v^2), Y = u v, Z = u^2 + v^2; present only
/// when u^2 - v^2 is a perfect square. Same preconditions as param_n1.
std::optional<FamilySolution> param_n2(const Int& u, const Int& v);

/// All (X, Y, Z) with X <= bound_x, Y <= bound_y, gcd(X, 2Y) = 1 and
/// X^(2n) + 4 Y^n a perfect square, ordered lexicographically by (X, Y).
/// Empty output for n >= 3 is the expected desk-scale outcome.
std::vector<FamilySolution> search_family(unsigned n, std::int64_t bound_x,
                                          std::int64_t bound_y, int jobs = 1);

/// The modified families (Z X^2)^2 + (2k Y^m)^2 = (X^4 - 2k Y^m)^2.
enum class VariantKind {
    Plus6Form,  ///< k=6, m=2, X^2 = u^2 + 6 v^2, Z = u^2 - 6 v^2
    TwoThree,   ///< k=6, m=2, X^2 = 2 u^2 + 3 v^2, Z = 2 u^2 - 3 v^2
    TwoYm,      ///< k=1, m>=3, X^2 = u^m + v^m, Z = u^m - v^m
};

struct VariantSolution {
    Int x;
    Int y;
    Int z;
};

/// Evaluates the named parametrization at (u, v); present only when the
/// square-root entry is a perfect square and Z is positive. The defining
/// Pythagorean identity is verified exactly before returning.
/// Requires gcd(u, v) = 1 and, for TwoYm, m >= 3.
std::optional<VariantSolution> variant_solution(VariantKind kind, const Int& u, const Int& v,
                                                std::optional<unsigned> m = {});

/// The defining identity of the variant family, checked exactly at the
/// X^2 level (no square-root needed): with S the parametrized value of X^2,
/// (Z*S)^2 + (2k Y^m)^2 == (S^2 - 2k Y^m)^2. Holds for every coprime (u, v).
bool variant_identity_holds(VariantKind kind, const Int& u, const Int& v,
                            std::optional<unsigned> m = {});

struct NonSquareWitness {
    std::int64_t u = 0;
    std::int64_t v = 0;
    Int root; ///< sqrt(c1 u^2 + c2 v^2)
};

/// First coprime (u, v) with u, v in [1, bound] making c1 u^2 + c2 v^2 a
/// perfect square, in lexicographic order; none when the scan is exhausted.
std::optional<NonSquareWitness> scan_nonsquare_form(std::int64_t c1, std::int64_t c2,
                                                    std::int64_t bound);

/// All primitive Pythagorean triples with hypotenuse <= limit, generated
/// from the n = 1 parametrization, legs ordered x < y, sorted
/// lexicographically. Empty for limit < 5.
std::vector<Triple> enumerate_primitive_triples(std::int64_t limit);

} // namespace fermat::pythagoras
