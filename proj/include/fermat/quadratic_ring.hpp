#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "fermat/int.hpp"

namespace fermat::quad {

/// Element p + q*omega of Z[omega] with omega^2 = D. D = -1 gives the
/// Gaussian integers, D = 2 gives Z[sqrt(2)]. All arithmetic is exact.
template <int D>
struct QuadInt {
    static_assert(D == -1 || D == 2, "supported rings: Z[i] and Z[sqrt 2]");

    Int p; ///< rational part
    Int q; ///< coefficient of omega

    QuadInt() : p(0), q(0) {}
    QuadInt(Int rational, Int irrational) : p(std::move(rational)), q(std::move(irrational)) {}

    friend QuadInt operator+(const QuadInt& a, const QuadInt& b)
    {
        return {a.p + b.p, a.q + b.q};
    }
    friend QuadInt operator-(const QuadInt& a, const QuadInt& b)
    {
        return {a.p - b.p, a.q - b.q};
    }
    friend QuadInt operator-(const QuadInt& a) { return {-a.p, -a.q}; }
    friend QuadInt operator*(const QuadInt& a, const QuadInt& b)
    {
        return {a.p * b.p + D * (a.q * b.q), a.p * b.q + a.q * b.p};
    }
    friend bool operator==(const QuadInt& a, const QuadInt& b)
    {
        return a.p == b.p && a.q == b.q;
    }
    // lexicographic by (p, q); used only for deterministic ordering
    friend bool operator<(const QuadInt& a, const QuadInt& b)
    {
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    }
};

using GaussianInt = QuadInt<-1>;
using RootTwoInt = QuadInt<2>;

/// The conjugation operator: p + q*omega -> p - q*omega. An involutive
/// ring homomorphism.
template <int D>
QuadInt<D> conj(const QuadInt<D>& z)
{
    return {z.p, -z.q};
}

/// p^2 - D q^2, the field norm.
template <int D>
Int norm(const QuadInt<D>& z)
{
    return z.p * z.p - D * (z.q * z.q);
}

template <int D>
QuadInt<D> pow(QuadInt<D> base, unsigned e)
{
    QuadInt<D> r{1, 0};
    while (e != 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Sign of the standard real embedding p + q*sqrt(2), decided exactly.
int embedding_sign(const RootTwoInt& z);

/// base^(p+qi) = base^p (cos(q ln base) + i sin(q ln base)), evaluated in
/// double precision with the trig pair taken at |q| ln base so that
/// conjugating the exponent conjugates the value bit-for-bit. base = 1
/// yields exactly 1. Throws Overflow when base^p leaves the double range.
std::complex<double> qpow(const Int& base, const GaussianInt& e);

/// |conj(a^u + b^v) - (a^conj(u) + b^conj(v))| as a complex modulus.
/// Zero in exact arithmetic; the returned value measures evaluation noise.
double conj_identity_residual(const Int& a, const Int& b, const GaussianInt& u,
                              const GaussianInt& v);

struct ConjIdentitySweepResult {
    std::uint64_t samples = 0;
    double max_residual = 0.0;
    std::int64_t worst_a = 0, worst_b = 0;
    GaussianInt worst_u, worst_v;
};

/// Seeded random sweep of conj_identity_residual with a, b in [1, 20] and
/// exponent parts in [-5, 5]. Reports the largest residual seen.
ConjIdentitySweepResult conj_identity_sweep(std::uint64_t samples, std::uint64_t seed);

struct GaussianScanWitness {
    std::int64_t x = 0, y = 0, z = 0;
    int p = 0, q = 0, r = 0;
};

struct GaussianScanResult {
    bool vacuous = true;
    double min_residual = 0.0;
    GaussianScanWitness witness;
    std::uint64_t evaluated = 0;
};

/// Minimum of |x^(2+ip) + y^(2+iq) - z^(2+ir)| over pairwise-coprime
/// x, y, z in [1, xmax] and p, q, r in [-prange, prange] with p q != 0.
/// Ties keep the lexicographically smallest witness. xmax < 2 reports a
/// vacuous scan.
GaussianScanResult gaussian_exponent_scan(std::int64_t xmax, int prange, int jobs = 1);

struct RootTwoSystemScanWitness {
    std::int64_t x = 0, y = 0, z = 0;
    RootTwoInt u, v, w;
};

struct RootTwoSystemScanResult {
    bool vacuous = true;
    double min_residual = 0.0;
    RootTwoSystemScanWitness witness;
    std::uint64_t evaluated = 0;
};

/// Joint residual of the paired system
///   a x^u - b y^v = c z^w
///   a x^conj(u) + b y^conj(v) = c z^conj(w)
/// at one point: both sides evaluated through the real embeddings of the
/// exponents, result max(|eq1|, |eq2|). Side conditions enforced:
/// a, b, c positive pairwise coprime; u + conj(u), v + conj(v), w + conj(w)
/// positive; (u - conj(u))(v - conj(v)) != 0.
double root_two_system_residual(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x,
                                std::int64_t y, std::int64_t z, const RootTwoInt& u,
                                const RootTwoInt& v, const RootTwoInt& w);

/// Minimum joint residual over x, y, z in [1, xmax] with gcd(x, y, z) = 1
/// and (x, y, z) != (1, 1, 1), and exponent grids p in [1, pmax],
/// q in [-qmax, qmax] (q != 0 for u and v).
RootTwoSystemScanResult root_two_system_scan(std::int64_t a, std::int64_t b, std::int64_t c,
                                             std::int64_t xmax, int pmax, int qmax, int jobs = 1);

struct RingTriple {
    RootTwoInt x, y, z;
};

/// Exhaustive search for x^n + y^n = z^n in Z[sqrt 2] over elements
/// p + q sqrt(2) with |p|, |q| <= cbound that are positive in the standard
/// embedding. Solutions are reported up to the x <-> y symmetry (x <= y in
/// (p, q) order) and verified by exact re-substitution.
std::vector<RingTriple> fermat_search(unsigned n, std::int64_t cbound);

enum class TriangleKind { NotATriangle, DegenerateLine, Right, Acute, Obtuse };

/// Classifies side lengths by the law-of-cosines comparison of z^2 against
/// x^2 + y^2 (z the largest side), with relative tolerance tol for the
/// equality cases. Throws NonPositiveInput unless all sides are positive
/// and finite.
TriangleKind classify_triangle(double x, double y, double z, double tol = 1e-12);

/// Exact-arithmetic classification for integer side lengths.
TriangleKind classify_triangle_exact(const Int& x, const Int& y, const Int& z);

} // namespace fermat::quad
