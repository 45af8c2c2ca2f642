#include "wittconic/io/parse.hpp"
#include "wittconic/quat/ideal.hpp"

#include <doctest.h>

using namespace wittconic;

namespace {

const ConicPtr& hamilton()
{
    static const ConicPtr c = make_conic(-1, -1);
    return c;
}

Quat Q(const char* text, const ConicPtr& c = hamilton()) { return parse_quaternion(text, *c); }

} // namespace

TEST_CASE("multiplication table")
{
    CHECK(Q("i") * Q("j") == Q("ij"));
    CHECK(Q("j") * Q("i") == -Q("ij"));
    CHECK((Q("1") + Q("i")) * (Q("1") - Q("i")) == Q("2"));
    auto c = make_conic(2, -5);
    CHECK(Q("i", c) * Q("i", c) == Q("2", c));
    CHECK(Q("ij", c) * Q("ij", c) == Q("10", c));  // (ij)^2 = -ab
}

TEST_CASE("norm, trace and inverses")
{
    SplitMix64 rng(51);
    for (auto [a, b] : {std::pair{-1, -1}, {2, -5}, {-1, -3}}) {
        auto c = make_conic(a, b);
        for (int k = 0; k < 50; ++k) {
            Quat p = quat(rng.rational(9), rng.rational(9), rng.rational(9), rng.rational(9), a, b);
            Quat q = quat(rng.rational(9), rng.rational(9), rng.rational(9), rng.rational(9), a, b);
            CHECK((p * q).nrd() == p.nrd() * q.nrd());
            CHECK((p * q).conj() == q.conj() * p.conj());
            CHECK(p * p.conj() == Quat(p.nrd()));
            CHECK(p * p - Quat(p.trd()) * p + Quat(p.nrd()) == Quat(Rational(0)));
            if (!p.is_zero()) CHECK(p * p.inverse() == Quat(Rational(1)));
        }
    }
}

TEST_CASE("split components")
{
    const Conic& c = *hamilton();
    const KField K = k_field(c);
    auto [f1, g1] = split_components(c, Q("1 + i"));
    CHECK(f1 == K.make(1, 1));
    CHECK(g1.is_zero());
    auto [f2, g2] = split_components(c, Q("j"));
    CHECK(f2.is_zero());
    CHECK(g2 == K.make(1, 0));
    // j g = ij forces g = -i, since j i = -ij.
    auto [f3, g3] = split_components(c, Q("ij"));
    CHECK(f3.is_zero());
    CHECK(g3 == K.make(0, -1));

    SplitMix64 rng(52);
    for (int k = 0; k < 50; ++k) {
        Quat h = quat(rng.rational(9), rng.rational(9), rng.rational(9), rng.rational(9), -1, -1);
        auto [f, g] = split_components(c, h);
        CHECK(recompose(c, f, g) == h);
        CHECK(embed_k(c, f) + Q("j") * embed_k(c, g) == h);
    }
}

TEST_CASE("the generic element e")
{
    for (auto [a, b] : {std::pair{-1, -1}, {2, -5}, {-7, 3}}) {
        IdentityReport r = check_generic_identities(make_conic(a, b));
        CHECK(r.checks > 0);
        CHECK(r.ok());
    }
    auto e = generic_e(hamilton());
    CHECK(e[0].is_zero());
    CHECK(e[1] == FFElem(-1));
    CHECK(e[2] == -FFElem::x(hamilton()));
    CHECK(e[3] == FFElem::y(hamilton()));
}

TEST_CASE("fiber of e at p0 and at infinity")
{
    ClosedPoint p0 = parse_point("x", hamilton());
    auto data = fiber_e(p0);
    QuadElem theta = evaluate_quad(parse_function("y", hamilton()), p0);
    CHECK(data.e[0].is_zero());
    CHECK(data.e[1] == QuadElem(-1));
    CHECK(data.e[2].is_zero());
    CHECK(data.e[3] == theta);

    auto inf = fiber_e(infinity_point(hamilton()));
    QuadElem theta_inf = hamilton()->theta_infinity();
    CHECK(inf.e[1].is_zero());
    CHECK(inf.e[2] == QuadElem(-1));
    CHECK(inf.e[3] == theta_inf);
    CHECK(is_zero(inf.e * inf.e));
}

TEST_CASE("fiber identities at several points")
{
    SplitMix64 rng(53);
    std::vector<ClosedPoint> points = {parse_point("x", hamilton()), points_from_linear(hamilton(), 0, 0, 1),
                                       points_from_linear(hamilton(), 1, 2, 3), points_from_linear(hamilton(), -2, 1, 1),
                                       parse_point("x^2 + x + 1", hamilton())};
    for (const auto& p : points) {
        IdentityReport r = check_fiber_identities(p, 100, rng);
        CHECK(r.checks >= 100);
        CHECK(r.ok());
    }

    // lambda = e_p0 with mu = i, expanded by hand: both sides vanish.
    auto e = fiber_e(points[0]).e;
    QuatQ i = QuatQ::basis(1, -1, -1);
    CHECK(e * i * e == QuatQ((e * i).trd()) * e);
}
