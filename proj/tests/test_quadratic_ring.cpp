#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fermat/quadratic_ring.hpp"

using namespace fermat;
using namespace fermat::quad;

TEST_CASE("ring arithmetic and conjugation laws")
{
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::int64_t> draw(-1000, 1000);

    auto check_laws = [&](auto make) {
        for (int i = 0; i < 300; ++i) {
            const auto a = make(), b = make(), c = make();
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(conj(a + b) == conj(a) + conj(b));
            CHECK(conj(a * b) == conj(a) * conj(b));
            CHECK(conj(conj(a)) == a);
            CHECK(norm(a * b) == norm(a) * norm(b));
        }
    };
    check_laws([&] { return GaussianInt{draw(rng), draw(rng)}; });
    check_laws([&] { return RootTwoInt{draw(rng), draw(rng)}; });
}

TEST_CASE("conjugation fixed points and worked examples")
{
    CHECK(conj(GaussianInt{2, 3}) == GaussianInt{2, -3});
    CHECK(conj(RootTwoInt{1, 0}) == RootTwoInt{1, 0});
    CHECK(conj(RootTwoInt{3, 2}) == RootTwoInt{3, -2});
}

TEST_CASE("exact powers in the rings")
{
    CHECK(pow(GaussianInt{1, 1}, 2) == GaussianInt{0, 2});  // (1+i)^2 = 2i
    CHECK(pow(GaussianInt{1, 1}, 4) == GaussianInt{-4, 0}); // (1+i)^4 = -4
    CHECK(pow(RootTwoInt{1, 1}, 2) == RootTwoInt{3, 2});    // (1+sqrt2)^2 = 3+2sqrt2
    CHECK(pow(RootTwoInt{0, 1}, 2) == RootTwoInt{2, 0});    // (sqrt2)^2 = 2
}

TEST_CASE("standard-embedding sign is decided exactly")
{
    CHECK(embedding_sign(RootTwoInt{0, 1}) == 1);  // sqrt2
    CHECK(embedding_sign(RootTwoInt{1, -1}) == -1); // 1 - sqrt2
    CHECK(embedding_sign(RootTwoInt{2, -1}) == 1);  // 2 - sqrt2
    CHECK(embedding_sign(RootTwoInt{-1, 1}) == 1);  // sqrt2 - 1
    CHECK(embedding_sign(RootTwoInt{-3, 2}) == -1); // 2 sqrt2 - 3 < 0
    CHECK(embedding_sign(RootTwoInt{3, -2}) == 1);  // 3 - 2 sqrt2 > 0
    CHECK(embedding_sign(RootTwoInt{0, 0}) == 0);
    CHECK(embedding_sign(RootTwoInt{-2, 0}) == -1);
}

TEST_CASE("complex powers with Gaussian exponents")
{
    const auto one = qpow(Int(1), GaussianInt{123, -456});
    CHECK(one.real() == 1.0);
    CHECK(one.imag() == 0.0);

    const auto four = qpow(Int(2), GaussianInt{2, 0});
    CHECK(four.real() == 4.0);
    CHECK(four.imag() == 0.0);

    const auto unit = qpow(Int(3), GaussianInt{0, 1});
    CHECK(unit.real() == doctest::Approx(std::cos(std::log(3.0))).epsilon(1e-14));
    CHECK(unit.imag() == doctest::Approx(std::sin(std::log(3.0))).epsilon(1e-14));
    CHECK(std::abs(unit) == doctest::Approx(1.0).epsilon(1e-13));

    CHECK_THROWS_AS(qpow(Int(0), GaussianInt{1, 0}), PreconditionViolated);
    CHECK_THROWS_AS(qpow(Int(10), GaussianInt{100000, 0}), Overflow);
}

TEST_CASE("power modulus depends only on the real exponent part")
{
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::int64_t> bdraw(1, 20);
    std::uniform_int_distribution<int> pdraw(-5, 5);
    for (int i = 0; i < 500; ++i) {
        const std::int64_t a = bdraw(rng);
        const int p = pdraw(rng), q = pdraw(rng);
        const double expected = std::pow(static_cast<double>(a), p);
        const double got = std::abs(qpow(Int(a), GaussianInt{p, q}));
        CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("conjugation identity residuals")
{
    CHECK(conj_identity_residual(Int(2), Int(3), GaussianInt{1, 1}, GaussianInt{2, -1}) < 1e-10);
    CHECK(conj_identity_residual(Int(1), Int(1), GaussianInt{4, 3}, GaussianInt{-2, 5}) == 0.0);
    CHECK(conj_identity_residual(Int(5), Int(7), GaussianInt{3, 0}, GaussianInt{2, 0}) == 0.0);
}

TEST_CASE("seeded conjugation sweep stays under the tolerance")
{
    const auto sweep = conj_identity_sweep(1000, 99);
    CHECK(sweep.samples == 1000);
    CHECK(sweep.max_residual < 1e-10);

    const auto again = conj_identity_sweep(1000, 99);
    CHECK(again.max_residual == sweep.max_residual);
    CHECK(again.worst_a == sweep.worst_a);
}

TEST_CASE("Gaussian-exponent residual scan")
{
    const auto small = gaussian_exponent_scan(2, 1);
    CHECK(!small.vacuous);
    CHECK(small.evaluated > 0);
    CHECK(small.min_residual > 0);

    const auto quick = gaussian_exponent_scan(6, 2);
    CHECK(quick.min_residual > 1e-9);

    CHECK(gaussian_exponent_scan(1, 4).vacuous);

    // job count cannot change minimum or witness
    const auto seq = gaussian_exponent_scan(6, 2, 1);
    const auto par = gaussian_exponent_scan(6, 2, 3);
    CHECK(seq.min_residual == par.min_residual);
    CHECK(seq.evaluated == par.evaluated);
    CHECK(seq.witness.x == par.witness.x);
    CHECK(seq.witness.p == par.witness.p);
}

TEST_CASE("system residual preconditions")
{
    const RootTwoInt u{1, 1}, v{1, -1}, w{2, 0};
    CHECK(root_two_system_residual(1, 1, 1, 2, 3, 5, u, v, w) >= 0.0);

    // q = 0 on both leading exponents violates (u - conj u)(v - conj v) != 0
    CHECK_THROWS_AS(root_two_system_residual(1, 1, 1, 2, 3, 5, RootTwoInt{1, 0}, RootTwoInt{1, 0}, w),
                    PreconditionViolated);
    // nonpositive trace
    CHECK_THROWS_AS(root_two_system_residual(1, 1, 1, 2, 3, 5, RootTwoInt{0, 1}, v, w),
                    PreconditionViolated);
    // coefficients sharing a factor
    CHECK_THROWS_AS(root_two_system_residual(2, 4, 1, 2, 3, 5, u, v, w), PreconditionViolated);
}

TEST_CASE("system residual scan")
{
    const auto scan = root_two_system_scan(1, 1, 1, 4, 2, 2);
    CHECK(!scan.vacuous);
    CHECK(scan.min_residual > 1e-9);
    CHECK(scan.evaluated > 0);
    // the all-ones point is excluded from the grid
    CHECK(!(scan.witness.x == 1 && scan.witness.y == 1 && scan.witness.z == 1));

    CHECK(root_two_system_scan(1, 1, 1, 1, 2, 2).vacuous);
    CHECK_THROWS_AS(root_two_system_scan(2, 4, 1, 3, 2, 2), PreconditionViolated);

    const auto seq = root_two_system_scan(1, 1, 1, 4, 2, 2, 1);
    const auto par = root_two_system_scan(1, 1, 1, 4, 2, 2, 3);
    CHECK(seq.min_residual == par.min_residual);
    CHECK(seq.witness.x == par.witness.x);
}

TEST_CASE("ring power-equation search over Z[sqrt 2]")
{
    const auto sols = fermat_search(2, 3);
    const RingTriple expected{RootTwoInt{0, 1}, RootTwoInt{0, 1}, RootTwoInt{2, 0}};
    bool found = false;
    for (const auto& t : sols) {
        if (t.x == expected.x && t.y == expected.y && t.z == expected.z) found = true;
        // exact re-substitution for every reported solution
        CHECK(pow(t.x, 2) + pow(t.y, 2) == pow(t.z, 2));
        CHECK(embedding_sign(t.x) == 1);
        CHECK(embedding_sign(t.y) == 1);
        CHECK(embedding_sign(t.z) == 1);
        // canonical order modulo the x <-> y symmetry
        CHECK(!(t.y < t.x));
    }
    CHECK(found);

    CHECK(fermat_search(4, 6).empty());
    CHECK(fermat_search(5, 5).empty());
    CHECK(fermat_search(2, 0).empty());
    CHECK_THROWS_AS(fermat_search(1, 3), PreconditionViolated);
}

TEST_CASE("triangle classification")
{
    CHECK(classify_triangle(3, 4, 5) == TriangleKind::Right);
    CHECK(classify_triangle(5, 6, 7) == TriangleKind::Acute); // 49 < 61
    CHECK(classify_triangle(1, 2, 3) == TriangleKind::DegenerateLine);
    CHECK(classify_triangle(1, 1, 5) == TriangleKind::NotATriangle);
    CHECK(classify_triangle(2, 2, 3) == TriangleKind::Obtuse); // 9 > 8
    // order of arguments is irrelevant
    CHECK(classify_triangle(5, 3, 4) == TriangleKind::Right);

    // sides sqrt2, sqrt2, 2 form a right triangle
    const double s2 = std::sqrt(2.0);
    CHECK(classify_triangle(s2, s2, 2.0) == TriangleKind::Right);

    CHECK_THROWS_AS(classify_triangle(0, 1, 1), NonPositiveInput);
    CHECK_THROWS_AS(classify_triangle(-1, 1, 1), NonPositiveInput);
    CHECK_THROWS_AS(classify_triangle(1, std::nan(""), 1), NonPositiveInput);
}

TEST_CASE("exact triangle classification on integers")
{
    CHECK(classify_triangle_exact(Int(3), Int(4), Int(5)) == TriangleKind::Right);
    CHECK(classify_triangle_exact(Int(5), Int(6), Int(7)) == TriangleKind::Acute);
    CHECK(classify_triangle_exact(Int(1), Int(2), Int(3)) == TriangleKind::DegenerateLine);
    CHECK(classify_triangle_exact(Int(1), Int(1), Int(5)) == TriangleKind::NotATriangle);
    CHECK(classify_triangle_exact(Int(2), Int(2), Int(3)) == TriangleKind::Obtuse);
    CHECK_THROWS_AS(classify_triangle_exact(Int(0), Int(1), Int(1)), NonPositiveInput);
}
