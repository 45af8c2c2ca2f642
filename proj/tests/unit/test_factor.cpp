#include "support/oracles.hpp"
#include "wittconic/arith/factor.hpp"
#include "wittconic/errors.hpp"
#include "wittconic/util/rng.hpp"

#include <doctest.h>

using namespace wittconic;

namespace {

Poly poly(std::initializer_list<long> lowest_first)
{
    std::vector<Rational> c;
    for (long v : lowest_first) c.emplace_back(v);
    return Poly(c);
}

std::vector<Poly> factor_list(const FactorizationQ& f)
{
    std::vector<Poly> out;
    for (const auto& [p, e] : f.factors)
        for (int k = 0; k < e; ++k) out.push_back(p);
    return out;
}

} // namespace

TEST_CASE("known factorizations")
{
    auto f = poly_factor_q(poly({4, 0, 0, 0, 1}));  // x^4 + 4
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == poly({2, -2, 1}));
    CHECK(f.factors[1].first == poly({2, 2, 1}));

    auto g = poly_factor_q(poly({-1, 0, 0, 0, 0, 0, 1}));  // x^6 - 1
    CHECK(factor_list(g).size() == 4);
    CHECK(g.expand() == poly({-1, 0, 0, 0, 0, 0, 1}));

    CHECK(is_irreducible_q(poly({1, 0, -10, 0, 1})));  // minimal polynomial of sqrt2 + sqrt3
    CHECK_FALSE(is_irreducible_q(poly({-2, 0, 0, 0, 1}) * poly({3, 1})));
}

TEST_CASE("unit and multiplicities are recovered")
{
    Poly p = poly({1, 1}) * poly({1, 1}) * poly({1, 1}) * poly({2, 0, 1}) * Rational(-3, 2);
    auto f = poly_factor_q(p);
    CHECK(f.unit == Rational(-3, 2));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair{poly({1, 1}), 3});
    CHECK(f.factors[1] == std::pair{poly({2, 0, 1}), 1});
    CHECK(f.expand() == p);
}

TEST_CASE("products of random quadratics factor back")
{
    // Irreducibility of a monic quadratic x^2 + bx + c is decided by the
    // discriminant, which gives an independent check of every factor.
    SplitMix64 rng(21);
    for (int k = 0; k < 60; ++k) {
        Poly p = Poly::constant(Rational(1));
        int quadratics = 0;
        for (int m = 0; m < 3; ++m) {
            Poly q({rng.rational(7), rng.rational(7), Rational(1)});
            Rational disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(0);
            if (!oracle::is_square(disc)) ++quadratics;
            p *= q;
        }
        auto f = poly_factor_q(p);
        CHECK(f.expand() == p);
        int found = 0;
        for (const auto& [q, e] : f.factors) {
            CHECK(q.lead() == 1);
            CHECK(is_irreducible_q(q));
            if (q.degree() == 2) found += e;
            if (q.degree() == 2) CHECK_FALSE(oracle::is_square(Rational(q.coeff(1) * q.coeff(1) - 4 * q.coeff(0))));
        }
        CHECK(found == quadratics);
    }
}

TEST_CASE("squarefree decomposition")
{
    Poly a = poly({-1, 1}), b = poly({1, 0, 1});
    auto parts = squarefree_decomposition(a * b * b * b);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == a);
    CHECK(parts[1] == Poly::constant(Rational(1)));
    CHECK(parts[2] == b);
}

TEST_CASE("degree bound is enforced")
{
    Poly p = poly({-2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});  // x^10 - 2, Eisenstein at 2
    CHECK_THROWS_AS(poly_factor_q(p, 8), DegreeBound);
    CHECK(poly_factor_q(p, 10).factors.size() == 1);
}
