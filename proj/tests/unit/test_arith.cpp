#include "support/oracles.hpp"
#include "wittconic/arith/polynomial.hpp"
#include "wittconic/arith/quadext.hpp"
#include "wittconic/errors.hpp"
#include "wittconic/util/rng.hpp"

#include <doctest.h>

using namespace wittconic;

TEST_CASE("factor_integer agrees with trial division")
{
    SplitMix64 rng(11);
    for (int k = 0; k < 200; ++k) {
        Integer n = rng.uniform(1, 2'000'000);
        auto got = factor_integer(n);
        auto want = oracle::trial_factor(n);
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].prime == want[i].first);
            CHECK(got[i].exponent == want[i].second);
        }
    }
    CHECK(factor_integer(Integer(-12)).size() == 2);
}

TEST_CASE("squarefree part and cofactor reassemble the input")
{
    SplitMix64 rng(12);
    for (int k = 0; k < 200; ++k) {
        Rational q = rng.nonzero_rational(500);
        Integer s = squarefree_part(q);
        Rational r = square_cofactor(q);
        CHECK(r > 0);
        CHECK(Rational(s) * r * r == q);
        for (const auto& [p, e] : oracle::trial_factor(s)) CHECK(e == 1);
    }
    CHECK(squarefree_part(Integer(-72)) == -2);
    CHECK(squarefree_part(Rational(3, 8)) == 6);
}

TEST_CASE("square tests and rational square roots")
{
    SplitMix64 rng(13);
    for (int k = 0; k < 200; ++k) {
        Rational q = rng.rational(40);
        CHECK(is_square(q) == oracle::is_square(q));
        auto r = rational_sqrt(q);
        CHECK(r.has_value() == oracle::is_square(q));
        if (r) CHECK(*r * *r == q);
    }
}

TEST_CASE("legendre symbol matches Euler's criterion")
{
    for (long p : {3L, 5L, 7L, 11L, 13L, 101L})
        for (long a = -30; a <= 30; ++a) CHECK(legendre(Integer(a), Integer(p)) == oracle::euler_legendre(a, p));
}

TEST_CASE("modular and Hensel square roots")
{
    for (long p : {3L, 7L, 13L, 41L, 1009L})
        for (long a = 1; a < 40; ++a) {
            if (a % p == 0 || legendre(Integer(a), Integer(p)) != 1) continue;
            Integer s = sqrt_mod_prime(Integer(a), Integer(p));
            CHECK(mod(Integer(s * s - a), Integer(p)) == 0);
            Integer h = hensel_sqrt(Integer(a), s, Integer(p), 5);
            Integer p5 = power(Integer(p), 5);
            CHECK(mod(Integer(h * h - a), p5) == 0);
            CHECK(mod(Integer(h - s), Integer(p)) == 0);
        }
}

TEST_CASE("valuations")
{
    CHECK(valuation(Integer(48), Integer(2)) == 4);
    CHECK(valuation(Rational(9, 50), Integer(5)) == -2);
    CHECK(valuation(Rational(9, 50), Integer(3)) == 2);
}

TEST_CASE("rational parsing round-trips")
{
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational(" 7 ") == 7);
    CHECK(to_string(rat(-4, 6)) == "-2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
}

namespace {

Poly random_poly(SplitMix64& rng, int degree)
{
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) c.push_back(rng.rational(9));
    if (c.back() == 0) c.back() = 1;
    return Poly(c);
}

} // namespace

TEST_CASE("polynomial division and gcd identities")
{
    SplitMix64 rng(14);
    for (int k = 0; k < 100; ++k) {
        Poly a = random_poly(rng, 5), b = random_poly(rng, 3), common = random_poly(rng, 2);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());

        Poly g, s, t;
        extended_gcd(a * common, b * common, g, s, t);
        CHECK(s * (a * common) + t * (b * common) == g);
        CHECK(divides(common.monic(), g));
        CHECK(g == gcd(a * common, b * common));
        CHECK(g.lead() == 1);
    }
    CHECK(gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("polynomial evaluation and derivative")
{
    Poly p({Rational(1), Rational(-3), Rational(0), Rational(2)});  // 2x^3 - 3x + 1
    CHECK(p.eval(Rational(2)) == 11);
    CHECK(p.derivative() == Poly({Rational(-3), Rational(0), Rational(6)}));
    CHECK(to_string(p) == "2*x^3 - 3*x + 1");
}

TEST_CASE("quadratic field arithmetic")
{
    SplitMix64 rng(15);
    for (Integer d : {Integer(-1), Integer(-7), Integer(2), Integer(5), Integer(-15)})
        for (int k = 0; k < 50; ++k) {
            QuadElem x(rng.rational(20), rng.rational(20), d), y(rng.rational(20), rng.rational(20), d);
            CHECK((x * y).norm() == x.norm() * y.norm());
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK(x * x.conj() == QuadElem(x.norm()));
            if (!y.is_zero()) CHECK((x / y) * y == x);
            auto r = quad_sqrt(x * x, d);
            REQUIRE(r.has_value());
            CHECK(*r * *r == x * x);
        }
    CHECK_FALSE(quad_sqrt(QuadElem(Rational(0), Rational(1), Integer(-1)), Integer(-1)).has_value());
}

TEST_CASE("square root presentations")
{
    auto p = present_sqrt(Rational(-8, 9));
    CHECK(p.field.d == -2);
    CHECK(p.scale == Rational(2, 3));
    CHECK_THROWS(present_sqrt(Rational(4)));
}
