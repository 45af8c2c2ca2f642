#include "support/oracles.hpp"
#include "wittconic/arith/hilbert.hpp"
#include "wittconic/util/rng.hpp"

#include <doctest.h>

using namespace wittconic;

TEST_CASE("odd and real Hilbert symbols match a brute-force search")
{
    for (long p : {3L, 5L, 7L})
        for (long a : {-15L, -7L, -3L, -1L, 2L, 3L, 5L, 6L, 7L, 10L, 14L})
            for (long b : {-5L, -2L, -1L, 3L, 5L, 7L, 15L}) {
                // valuations stay <= 1 so the search modulo p^3 decides
                if (valuation(Integer(a), Integer(p)) > 1 || valuation(Integer(b), Integer(p)) > 1) continue;
                CAPTURE(p);
                CAPTURE(a);
                CAPTURE(b);
                CHECK(hilbert_symbol_q(Rational(a), Rational(b), Integer(p)) == oracle::hilbert_bruteforce(a, b, p));
            }
    CHECK(hilbert_symbol_q(-1, -1, real_place) == -1);
    CHECK(hilbert_symbol_q(-1, 3, real_place) == 1);
}

TEST_CASE("dyadic symbols over Q")
{
    CHECK(hilbert_symbol_q(-1, -1, 2) == -1);
    CHECK(hilbert_symbol_q(2, 3, 2) == -1);
    CHECK(hilbert_symbol_q(2, 5, 2) == -1);
    CHECK(hilbert_symbol_q(3, 5, 2) == 1);
    CHECK(hilbert_symbol_q(-1, 3, 2) == -1);
    CHECK(hilbert_symbol_q(2, 7, 2) == 1);
    CHECK(hilbert_symbol_q(Rational(1, 2), Rational(-1, 3), 2) == hilbert_symbol_q(2, -3, 2));
}

TEST_CASE("product formula over Q")
{
    SplitMix64 rng(31);
    for (int k = 0; k < 300; ++k) {
        Rational a = rng.nonzero_rational(60), b = rng.nonzero_rational(60);
        int prod = 1;
        for (const auto& v : relevant_places_q({a, b})) prod *= hilbert_symbol_q(a, b, v);
        CHECK(prod == 1);
    }
}

TEST_CASE("product formula over quadratic fields, including split 2")
{
    SplitMix64 rng(32);
    for (Integer d : {Integer(-1), Integer(2), Integer(-3), Integer(5), Integer(-7), Integer(17), Integer(-15)}) {
        for (int k = 0; k < 60; ++k) {
            QuadElem a(rng.rational(15), rng.rational(15), d), b(rng.rational(15), rng.rational(15), d);
            if (a.is_zero() || b.is_zero()) continue;
            int prod = 1;
            for (const auto& v : relevant_places_quad(d, {a, b})) prod *= hilbert_symbol_quadfield(a, b, v, d);
            CAPTURE(d);
            CHECK(prod == 1);
        }
    }
}

TEST_CASE("both completions at a split dyadic prime are Q_2")
{
    const Integer d = 17;
    CHECK(dyadic_split(d));
    auto places = places_above(d, 2);
    REQUIRE(places.size() == 2);
    const QuadElem t = QuadElem::generator(d);
    for (const auto& v : places) {
        CHECK(hilbert_symbol_quadfield(QuadElem(-1), QuadElem(-1), v, d) == -1);
        CHECK(hilbert_symbol_quadfield(QuadElem(2), QuadElem(3), v, d) == -1);
        // t goes to +-s with s = 1 mod 4, and (u, -1)_2 = (-1)^((u - 1)/2)
        CHECK(hilbert_symbol_quadfield(t, QuadElem(-1), v, d) == v.branch);
    }
    CHECK(places[0].label() != places[1].label());
}

TEST_CASE("places above primes follow the splitting law")
{
    CHECK(places_above(-1, 5).size() == 2);  // 5 = 1 mod 4 splits in Q(i)
    CHECK(places_above(-1, 3).size() == 1);
    CHECK(places_above(-1, 3)[0].kind == QuadPlace::Kind::Inert);
    CHECK(places_above(-1, 2)[0].kind == QuadPlace::Kind::Dyadic);
    CHECK(places_above(3, 0).size() == 2);
    CHECK(places_above(-3, 0).empty());  // the complex place carries no symbol
}

TEST_CASE("squares in quadratic fields")
{
    const Integer d = -1;
    CHECK(is_square_quad(QuadElem(Rational(0), Rational(2), d), d));  // 2i = (1 + i)^2
    CHECK(is_square_quad(QuadElem(-1), d));
    CHECK_FALSE(is_square_quad(QuadElem(3), d));
    CHECK(is_square_q(Rational(9, 4)));
    CHECK_FALSE(is_square_q(Rational(-9, 4)));
}
