#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fermat/legendre.hpp"

using namespace fermat;
using namespace fermat::legendre;

namespace {

bool square_free_u64(std::uint64_t n)
{
    for (const auto& [p, e] : factorize(n).factors) {
        (void)p;
        if (e > 1) return false;
    }
    return true;
}

} // namespace

TEST_CASE("normalization on the worked examples")
{
    CHECK(normalize(1, 1, 2) == LegendreForm{1, 1, 2});
    CHECK(normalize(4, 9, 2) == LegendreForm{1, 1, 2});
    CHECK(normalize(2, 3, 5) == LegendreForm{2, 3, 5});
    CHECK(normalize(2, 2, 1) == LegendreForm{1, 1, 2}); // shared 2 migrates
    CHECK_THROWS_AS(normalize(0, 1, 1), DegenerateForm);
}

TEST_CASE("normalization provenance")
{
    const auto f = normalize(4, 9, 2);
    REQUIRE(f.original.has_value());
    CHECK((*f.original)[0] == 4);
    CHECK((*f.original)[1] == 9);
    CHECK((*f.original)[2] == 2);
    REQUIRE(f.square_cofactors.has_value());
    CHECK((*f.square_cofactors)[0] == 2);
    CHECK((*f.square_cofactors)[1] == 3);
    CHECK((*f.square_cofactors)[2] == 1);
}

TEST_CASE("normalization is idempotent and lands in normal form")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> draw(1, 500);
    for (int i = 0; i < 300; ++i) {
        const auto f = normalize(draw(rng), draw(rng), draw(rng));
        CHECK(square_free_u64(f.a));
        CHECK(square_free_u64(f.b));
        CHECK(square_free_u64(f.c));
        CHECK(std::gcd(f.a, f.b) == 1);
        CHECK(std::gcd(f.a, f.c) == 1);
        CHECK(std::gcd(f.b, f.c) == 1);
        CHECK(normalize(f.a, f.b, f.c) == f);
    }
}

TEST_CASE("solvability criterion on the worked examples")
{
    CHECK(is_solvable(normalize(1, 1, 2)).solvable);
    CHECK(!is_solvable(normalize(1, 1, 3)).solvable);

    const auto rep = is_solvable(normalize(2, 3, 5));
    CHECK(rep.solvable);
    CHECK(rep.bc_qr_mod_a);
    CHECK(rep.ac_qr_mod_b);
    CHECK(rep.neg_ab_qr_mod_c);

    const auto bad = is_solvable(normalize(1, 1, 3));
    CHECK(bad.bc_qr_mod_a);
    CHECK(bad.ac_qr_mod_b);
    CHECK(!bad.neg_ab_qr_mod_c); // -1 is not a QR mod 3
}

TEST_CASE("Holzer-bounded solving on the worked examples")
{
    CHECK(find_solution(normalize(1, 1, 2)) == Triple{1, 1, 1});
    CHECK(find_solution(normalize(2, 3, 5)) == Triple{1, 1, 1});
    CHECK(!find_solution(normalize(1, 1, 3)).has_value());
}

TEST_CASE("criterion and bounded search agree for coefficients up to 10")
{
    for (std::uint64_t a = 1; a <= 10; ++a) {
        for (std::uint64_t b = 1; b <= 10; ++b) {
            for (std::uint64_t c = 1; c <= 10; ++c) {
                if (!square_free_u64(a) || !square_free_u64(b) || !square_free_u64(c)) continue;
                if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
                LegendreForm f;
                f.a = a;
                f.b = b;
                f.c = c;
                REQUIRE(is_solvable(f).solvable == find_solution(f).has_value());
            }
        }
    }
}

TEST_CASE("solution enumeration")
{
    const auto sols = enumerate_solutions(normalize(1, 1, 2), 10);
    const auto has = [&sols](std::int64_t x, std::int64_t y, std::int64_t z) {
        return std::find(sols.begin(), sols.end(), Triple{x, y, z}) != sols.end();
    };
    CHECK(has(1, 1, 1));
    CHECK(has(7, 1, 5)); // 49 + 1 = 50 = 2 * 25
    CHECK(has(1, 7, 5));
    for (const auto& t : sols) {
        CHECK(Int(t.x) * t.x + Int(t.y) * t.y == 2 * Int(t.z) * t.z);
        CHECK(gcd(gcd(t.x, t.y), t.z) == 1);
    }
    CHECK(std::is_sorted(sols.begin(), sols.end()));

    CHECK(enumerate_solutions(normalize(1, 1, 3), 100).empty());
    CHECK(enumerate_solutions(normalize(1, 1, 2), 0).empty());
}

TEST_CASE("reduction of a power equation to a Legendre form")
{
    // 8 = 2 * 2^2, 45 = 5 * 3^2, 7 = 7 * 1^2
    const auto r = fermat_to_legendre(8, 45, 7, 3);
    CHECK(r.form.a == 2);
    CHECK(r.form.b == 5);
    CHECK(r.form.c == 7);
    CHECK(r.d1 == 2);
    CHECK(r.d2 == 3);
    CHECK(r.d3 == 1);
    CHECK(r.k == 1);
    CHECK(r.x == 16);  // 2^1 * 2^3
    CHECK(r.y == 135); // 5^1 * 3^3
    CHECK(r.z == 7);   // 7^1 * 1^3
    CHECK(!r.on_form);

    const auto t = fermat_to_legendre(1, 1, 1, 3);
    CHECK(t.form == LegendreForm{1, 1, 1});
    CHECK(t.x == 1);
    CHECK(t.y == 1);
    CHECK(t.z == 1);
    CHECK(!t.on_form); // 1 + 1 != 1

    CHECK_THROWS_AS(fermat_to_legendre(2, 4, 5, 3), PreconditionViolated);
    CHECK_THROWS_AS(fermat_to_legendre(1, 2, 3, 4), PreconditionViolated); // even n
    CHECK_THROWS_AS(fermat_to_legendre(1, 2, 3, 1), PreconditionViolated);
}

TEST_CASE("reduction point powers reproduce the n-th powers exactly")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::uint64_t> draw(1, 50);
    int done = 0;
    while (done < 200) {
        const std::uint64_t a = draw(rng), b = draw(rng), c = draw(rng);
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        const unsigned n = (rng() % 2 == 0) ? 3 : 5;
        const auto r = fermat_to_legendre(a, b, c, n);
        // alpha x^2 = a^n, and same on the other two coordinates
        REQUIRE(Int(r.form.a) * r.x * r.x == pow_int(Int(a), n));
        REQUIRE(Int(r.form.b) * r.y * r.y == pow_int(Int(b), n));
        REQUIRE(Int(r.form.c) * r.z * r.z == pow_int(Int(c), n));
        ++done;
    }
}

TEST_CASE("reduction counterexample scans come back empty")
{
    CHECK(!reduction_scan(normalize(1, 1, 2), 3, 20).has_value());
    CHECK(!reduction_scan(normalize(2, 3, 5), 3, 20).has_value());
    CHECK(!reduction_scan(normalize(1, 1, 1), 3, 50).has_value());
    CHECK_THROWS_AS(reduction_scan(normalize(1, 1, 2), 4, 10), PreconditionViolated);
}

TEST_CASE("prime-power flags among solutions")
{
    const auto flags = prime_power_scan(normalize(1, 1, 2), 10);
    REQUIRE(!flags.empty());
    bool found = false;
    for (const auto& f : flags) {
        if (f.solution == Triple{7, 1, 5}) {
            found = true;
            CHECK(f.prime_power[0]);  // 7
            CHECK(!f.prime_power[1]); // 1
            CHECK(f.prime_power[2]);  // 5
        }
        CHECK(f.solution.x * f.solution.y * f.solution.z != 1);
    }
    CHECK(found);

    CHECK(prime_power_scan(normalize(1, 1, 3), 50).empty());
    CHECK(prime_power_scan(normalize(1, 1, 2), 1).empty());
}

TEST_CASE("curve construction on the worked examples")
{
    auto e = frey_curve(1, 1, 1, 3);
    CHECK(e.discriminant == 64); // 16 * (1 * 1 * 2)^2

    e = frey_curve(1, 2, 2, 3);
    CHECK(e.a_pow == 1);
    CHECK(e.b_pow == 8);
    CHECK(e.discriminant == 82944); // 16 * (1 * 8 * 9)^2
    CHECK(e.coeff_x2 == 7);         // b^n - a^n
    CHECK(e.coeff_x1 == -8);        // -a^n b^n
    CHECK(!e.fermat_holds);

    CHECK_THROWS_AS(frey_curve(2, 2, 1, 3), PreconditionViolated);
    CHECK_THROWS_AS(frey_curve(1, 2, 3, 2), PreconditionViolated);
}

TEST_CASE("curve discriminant never vanishes on valid input")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint64_t> draw(1, 40);
    int done = 0;
    while (done < 100) {
        const std::uint64_t a = draw(rng), b = draw(rng), c = draw(rng);
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        const auto e = frey_curve(a, b, c, 3 + rng() % 3);
        REQUIRE(e.discriminant > 0);
        REQUIRE(!e.fermat_holds);
        ++done;
    }
}
