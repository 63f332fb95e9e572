#include "fermat/pythagoras.hpp"

#include <algorithm>
#include <numeric>

#include "fermat/errors.hpp"
#include "fermat/parallel.hpp"

namespace fermat::pythagoras {

Triple FamilySolution::pythagorean_triple() const
{
    const Int xn = pow_int(x, n);
    const Int yn = pow_int(y, n);
    return Triple{z * xn, 2 * yn, xn * xn + 2 * yn};
}

ReducibilityResult is_reducible(const Int& a, const Int& b, unsigned n)
{
    if (a == 0 || b <= 0) throw PreconditionViolated("is_reducible: need a != 0 and b > 0");
    if (gcd(a, b) != 1) throw PreconditionViolated("is_reducible: gcd(a, b) must be 1");

    ReducibilityResult res;
    res.even_a = (a % 2 == 0);
    const Int an = pow_int(a, n);
    const Int disc = an * an + 4 * pow_int(b, n);
    if (auto c = is_perfect_square(disc)) {
        // monic quadratic, so the rational roots are integers
        res.reducible = true;
        res.roots = std::pair<Int, Int>{(-an + *c) / 2, (-an - *c) / 2};
    }
    return res;
}

bool check_family_identity(const Int& x, const Int& y, const Int& z, unsigned n)
{
    const Int xn = pow_int(x, n);
    const Int yn = pow_int(y, n);
    const bool defining = (z * z == xn * xn + 4 * yn);

    const Int lhs = (z * xn) * (z * xn) + (2 * yn) * (2 * yn);
    const Int rhs_root = xn * xn + 2 * yn;
    const bool rewritten = (lhs == rhs_root * rhs_root);
    // equivalent for positive X: the difference factors as X^(2n)(Z^2 - X^(2n) - 4Y^n)
    if (x >= 1 && defining != rewritten)
        throw Error("check_family_identity: internal identity mismatch");
    return defining;
}

namespace {

void require_generators(const Int& u, const Int& v)
{
    if (!(u > v && v >= 1)) throw PreconditionViolated("generators need u > v >= 1");
    if (gcd(u, v) != 1) throw PreconditionViolated("generators must be coprime");
    if ((u * v) % 2 != 0) throw PreconditionViolated("generator product must be even");
}

} // namespace

FamilySolution param_n1(const Int& u, const Int& v)
{
    require_generators(u, v);
    FamilySolution s;
    s.x = u - v;
    s.y = u * v;
    s.z = u + v;
    s.n = 1;
    s.generators = std::pair<Int, Int>{u, v};
    return s;
}

std::optional<FamilySolution> param_n2(const Int& u, const Int& v)
{
    require_generators(u, v);
    const auto root = is_perfect_square(u * u - v * v);
    if (!root) return std::nullopt;
    FamilySolution s;
    s.x = *root;
    s.y = u * v;
    s.z = u * u + v * v;
    s.n = 2;
    s.generators = std::pair<Int, Int>{u, v};
    return s;
}

std::vector<FamilySolution> search_family(unsigned n, std::int64_t bound_x, std::int64_t bound_y,
                                          int jobs)
{
    if (n < 1) throw PreconditionViolated("search_family: n must be >= 1");

    auto scan_chunk = [n, bound_y](std::int64_t x_lo, std::int64_t x_hi) {
        std::vector<FamilySolution> found;
        for (std::int64_t xv = x_lo; xv < x_hi; ++xv) {
            if (xv % 2 == 0) continue; // gcd(X, 2Y) = 1 forces X odd
            const Int x2n = pow_int(Int(xv), 2 * n);
            for (std::int64_t yv = 1; yv <= bound_y; ++yv) {
                if (std::gcd(xv, yv) != 1) continue;
                const Int disc = x2n + 4 * pow_int(Int(yv), n);
                if (auto z = is_perfect_square(disc)) {
                    FamilySolution s;
                    s.x = xv;
                    s.y = yv;
                    s.z = *z;
                    s.n = n;
                    found.push_back(std::move(s));
                }
            }
        }
        return found;
    };

    return chunked_reduce(
        std::int64_t{1}, bound_x + 1, jobs, std::vector<FamilySolution>{}, scan_chunk,
        [](std::vector<FamilySolution>& acc, std::vector<FamilySolution>&& part) {
            for (auto& s : part) acc.push_back(std::move(s));
        });
}

namespace {

struct VariantParams {
    Int x_squared; ///< parametrized value of X^2
    Int y;
    Int z;
    Int two_k_y_m; ///< 2k * Y^m
};

VariantParams variant_params(VariantKind kind, const Int& u, const Int& v,
                             std::optional<unsigned> m)
{
    if (gcd(u, v) != 1) throw PreconditionViolated("variant: gcd(u, v) must be 1");
    if (u < 1 || v < 1) throw PreconditionViolated("variant: generators must be positive");

    VariantParams p;
    p.y = u * v;
    switch (kind) {
    case VariantKind::Plus6Form:
        p.x_squared = u * u + 6 * v * v;
        p.z = u * u - 6 * v * v;
        p.two_k_y_m = 12 * p.y * p.y;
        break;
    case VariantKind::TwoThree:
        p.x_squared = 2 * u * u + 3 * v * v;
        p.z = 2 * u * u - 3 * v * v;
        p.two_k_y_m = 12 * p.y * p.y;
        break;
    case VariantKind::TwoYm: {
        if (!m || *m < 3) throw PreconditionViolated("variant: TwoYm needs m >= 3");
        const Int um = pow_int(u, *m);
        const Int vm = pow_int(v, *m);
        p.x_squared = um + vm;
        p.z = um - vm;
        p.two_k_y_m = 2 * pow_int(p.y, *m);
        break;
    }
    }
    return p;
}

bool defining_identity(const VariantParams& p)
{
    const Int lhs = (p.z * p.x_squared) * (p.z * p.x_squared) + p.two_k_y_m * p.two_k_y_m;
    const Int rhs_root = p.x_squared * p.x_squared - p.two_k_y_m;
    return lhs == rhs_root * rhs_root;
}

} // namespace

std::optional<VariantSolution> variant_solution(VariantKind kind, const Int& u, const Int& v,
                                                std::optional<unsigned> m)
{
    const VariantParams p = variant_params(kind, u, v, m);
    const auto root = is_perfect_square(p.x_squared);
    if (!root || p.z <= 0) return std::nullopt;
    if (!defining_identity(p)) throw Error("variant_solution: defining identity failed");
    return VariantSolution{*root, p.y, p.z};
}

bool variant_identity_holds(VariantKind kind, const Int& u, const Int& v,
                            std::optional<unsigned> m)
{
    return defining_identity(variant_params(kind, u, v, m));
}

std::optional<NonSquareWitness> scan_nonsquare_form(std::int64_t c1, std::int64_t c2,
                                                    std::int64_t bound)
{
    if (c1 < 0 || c2 < 0) throw PreconditionViolated("scan_nonsquare_form: negative coefficient");
    for (std::int64_t u = 1; u <= bound; ++u) {
        for (std::int64_t v = 1; v <= bound; ++v) {
            if (std::gcd(u, v) != 1) continue;
            const Int s = Int(c1) * u * u + Int(c2) * v * v;
            if (auto root = is_perfect_square(s)) {
                return NonSquareWitness{u, v, *root};
            }
        }
    }
    return std::nullopt;
}

std::vector<Triple> enumerate_primitive_triples(std::int64_t limit)
{
    std::vector<Triple> out;
    if (limit < 5) return out;
    for (std::int64_t u = 2; u * u + 1 <= limit; ++u) {
        for (std::int64_t v = 1; v < u; ++v) {
            if (u * u + v * v > limit) break;
            if (std::gcd(u, v) != 1 || (u * v) % 2 != 0) continue;
            const Triple t = param_n1(Int(u), Int(v)).pythagorean_triple();
            // canonical leg order x < y
            out.push_back(t.x < t.y ? t : Triple{t.y, t.x, t.z});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fermat::pythagoras
