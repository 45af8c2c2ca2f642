#include "support/oracles.hpp"
#include "wittconic/conic/coherent.hpp"
#include "wittconic/io/parse.hpp"
#include "wittconic/util/rng.hpp"

#include <doctest.h>

using namespace wittconic;

namespace {

const ConicPtr& hamilton()
{
    static const ConicPtr c = make_conic(-1, -1);
    return c;
}

FFElem F(const char* text) { return parse_function(text, hamilton()); }

} // namespace

TEST_CASE("make_conic accepts division algebras only")
{
    CHECK_NOTHROW(make_conic(-1, -1));
    CHECK_NOTHROW(make_conic(-1, -7));
    CHECK_THROWS_AS(make_conic(1, 1), SplitAlgebra);
    CHECK_THROWS_AS(make_conic(2, 7), SplitAlgebra);  // 7 + 2 = 9

    // Independent check: <1, -a, -b> anisotropic up to a search bound.
    SplitMix64 rng(41);
    for (int k = 0; k < 40; ++k) {
        Rational a = rng.uniform(-12, 12), b = rng.uniform(-12, 12);
        if (a == 0 || b == 0) continue;
        bool isotropic = oracle::bounded_isotropic({Rational(1), -a, -b}, 12);
        bool split = false;
        try {
            make_conic(a, b);
        } catch (const SplitAlgebra&) {
            split = true;
        }
        if (isotropic) CHECK(split);
    }
    CHECK(ramified_places(-1, -1) == std::vector<Integer>{0, 2});
    CHECK(ramified_places(-1, -7) == std::vector<Integer>{0, 7});
}

TEST_CASE("conjugation and valuation at infinity")
{
    CHECK(F("y").conj() == F("-y"));
    CHECK(F("x").conj() == F("x"));
    CHECK(F("x + y") * F("x + y").conj() == F("x^2 - (-x^2 - 1)"));
    CHECK(v_infty(F("x")) == -1);
    CHECK(v_infty(F("y")) == -1);
    CHECK(v_infty(F("(x^2 + y)/x")) == -1);
    CHECK(v_infty(F("1/x")) == 1);
}

TEST_CASE("values at infinity")
{
    const Conic& c = *hamilton();
    QuadElem theta = c.theta_infinity();
    CHECK(theta * theta == QuadElem(-1));
    CHECK(evaluate_at_infinity(F("y/x")) == theta);
    CHECK(evaluate_at_infinity(F("3")) == QuadElem(3));
    CHECK(leading_value_at_infinity(F("(x^2 + y)/x")) == QuadElem(1));
    CHECK(omega_infty(c, QuadElem(1)) == 0);
    CHECK(omega_infty(c, theta) == -1);
    CHECK(omega_infty(c, QuadElem(Rational(5)) + QuadElem(Rational(7)) * theta) == -7);
}

TEST_CASE("the point p0 with x = 0")
{
    ClosedPoint p0 = parse_point("x", hamilton());
    CHECK(p0.degree == 2);
    CHECK(p0.kind == ClosedPoint::Kind::Inert);
    CHECK(valuation(F("x"), p0) == 1);
    CHECK(valuation(F("x*(1 + y)"), p0) == 1);
    CHECK(valuation(F("1 + y"), p0) == 0);
    CHECK(valuation(F("1/x^2"), p0) == -2);
    QuadElem theta = evaluate_quad(F("y"), p0);
    CHECK(theta * theta == QuadElem(-1));
    CHECK(evaluate_quad(F("5"), p0) == QuadElem(5));
    CHECK(omega_p(F("y/x"), p0) == 1);
    CHECK(omega_p(F("1/x"), p0) == 0);
    CHECK(omega_p(F("7"), p0) == 0);

    CoherentPair s = coherent_functional(p0);
    SplitMix64 rng(42);
    for (int k = 0; k < 20; ++k) {
        Rational alpha = rng.rational(20), beta = rng.rational(20);
        CHECK(s.apply(QuadElem(alpha) + QuadElem(beta) * theta) == beta);
    }
}

TEST_CASE("points from lines")
{
    ClosedPoint p1 = points_from_linear(hamilton(), 0, 0, 1);
    CHECK(p1.degree == 2);
    CHECK(evaluate_quad(F("y"), p1).is_zero());
    QuadElem xv = evaluate_quad(F("x"), p1);
    CHECK(xv * xv == QuadElem(-1));
    CHECK(valuation(F("y"), p1) == 1);

    ClosedPoint p0 = points_from_linear(hamilton(), 0, 1, 0);
    CHECK(p0 == parse_point("x", hamilton()));

    SplitMix64 rng(43);
    for (int k = 0; k < 20; ++k) {
        Rational a1 = rng.rational(9), a2 = rng.rational(9), a3 = rng.nonzero_rational(9);
        ClosedPoint p = points_from_linear(hamilton(), a1, a2, a3);
        CHECK(p.degree == 2);
        // The line vanishes at p.
        FFElem line = FFElem(a1 * hamilton()->b) + FFElem(a2 * hamilton()->a) * F("x") + FFElem(a3) * F("y");
        CHECK(valuation(line, p) >= 1);
    }
}

TEST_CASE("supports of divisors")
{
    auto sx = support(F("x"));
    REQUIRE(sx.size() == 2);
    CHECK(sx[0].first == parse_point("x", hamilton()));
    CHECK(sx[0].second == 1);
    CHECK(sx[1].first.is_infinity());
    CHECK(sx[1].second == -1);

    auto sy = support(F("y"));
    REQUIRE(sy.size() == 2);
    CHECK(sy[0].first == points_from_linear(hamilton(), 0, 0, 1));
    CHECK(sy[1].second == -1);

    CHECK(support(F("3")).empty());

    // The degree of a principal divisor is zero.
    for (const char* text : {"x*y", "(x^2 + x + 1)/y", "1 + y", "3*x - 2 + y"}) {
        int total = 0;
        for (const auto& [p, v] : support(F(text))) total += p.degree * v;
        CHECK(total == 0);
    }
}

TEST_CASE("Riemann-Roch spaces")
{
    ClosedPoint p0 = parse_point("x", hamilton());
    CHECK(riemann_roch_space(p0).size() == 3);
    auto quartic = points_over(hamilton(), Poly({Rational(-2), Rational(0), Rational(1)}));
    REQUIRE(quartic.size() == 1);
    CHECK(quartic[0].degree == 4);
    auto basis = riemann_roch_space(quartic[0]);
    CHECK(basis.size() == 5);
    for (const auto& u : basis) CHECK(v_infty(FFElem::from_aff(u, hamilton())) >= -2);
}

TEST_CASE("coherence at random points")
{
    // s_p(mu_pi(f)) = omega_p(f) for f in m_p^{-1}: f = u / pi with u integral.
    SplitMix64 rng(45);
    for (int k = 0; k < 10; ++k) {
        ClosedPoint p = points_from_linear(hamilton(), rng.rational(5), rng.rational(5), rng.nonzero_rational(5));
        CoherentPair pair = coherent_functional(p);
        FFElem pi = p.uniformizer();
        for (int m = 0; m < 5; ++m) {
            FFElem u = FFElem(rng.rational(5)) + FFElem(rng.rational(5)) * F("x") + FFElem(rng.rational(5)) * F("y");
            FFElem f = u / pi;
            CHECK(pair.apply(mu_pi(f, pair)) == omega_p(f, p));
        }
    }
}
