#include "wittconic/forms/witt_quad.hpp"
#include "wittconic/io/parse.hpp"
#include "wittconic/verify/generators.hpp"

#include <doctest.h>

using namespace wittconic;

namespace {

const ConicPtr& hamilton()
{
    static const ConicPtr c = make_conic(-1, -1);
    return c;
}

Quat Q(const char* text, const ConicPtr& c = hamilton()) { return parse_quaternion(text, *c); }

QuadElem kelem(const Rational& re, const Rational& i_coeff, const Conic& c = *hamilton())
{
    return k_field(c).make(re, i_coeff);
}

bool witt_equal_quad(std::vector<QuadElem> lhs, const std::vector<QuadElem>& rhs, const Integer& d)
{
    for (const auto& z : rhs) lhs.push_back(-z);
    return witt_zero_quadfield(lhs, d).is_zero();
}

} // namespace

TEST_CASE("pi1 on rank-one forms")
{
    for (auto [a, b] : {std::pair{-1, -1}, {2, -5}}) {
        auto cp = make_conic(a, b);
        const Conic& c = *cp;
        for (long v : {1L, 3L, -2L}) {
            auto f = pi1(d_diagonal(1, {Quat(Rational(v))}), c);
            CHECK(f.eps == 1);
            CHECK(f.gram(0, 0) == QuadElem(v));
            CHECK(f.gram(0, 1).is_zero());
            CHECK(f.gram(1, 1) == QuadElem(Rational(-b * v)));  // conj(j) c j = -b c
        }
        auto g = pi1(d_diagonal(-1, {Q("i", cp)}), c);
        CHECK(g.eps == -1);
        CHECK(g.gram(0, 0) == k_field(c).i());
        CHECK(g.gram(1, 1) == k_field(c).i() * QuadElem(Rational(b)));  // conj(j) i j = b i
        CHECK(g.gram(0, 1).is_zero());
    }
}

TEST_CASE("pi1 agrees with split components of the Gram on the basis (1, j)")
{
    const Conic& c = *hamilton();
    FormGenerator gen(hamilton(), 71, 5);
    for (int k = 0; k < 10; ++k) {
        DHermitianForm h = gen.d_form(2, k % 2 ? 1 : -1);
        auto f = pi1(h, c);
        DMatrix B = doubled_k_basis(2, c);
        for (size_t r = 0; r < 4; ++r)
            for (size_t s = 0; s < 4; ++s) {
                Quat value(Rational(0));
                for (size_t u = 0; u < 2; ++u)
                    for (size_t w = 0; w < 2; ++w) value = value + B(u, r).conj() * h.gram(u, w) * B(w, s);
                CHECK(f.gram(r, s) == split_components(c, value).first);
            }
    }
}

TEST_CASE("pi2 on rank-one skew forms")
{
    const Conic& c = *hamilton();
    const Integer dK = k_field(c).d;
    CHECK(pi2_rank1(Q("i"), c).empty());
    CHECK(witt_zero_quadfield(pi2(d_diagonal(-1, {Q("i")}), c).gram, dK).is_zero());

    auto pj = pi2_rank1(Q("j"), c);
    REQUIRE(pj.size() == 2);
    CHECK(pj[0] == QuadElem(1));
    CHECK(pj[1] == QuadElem(1));
    CHECK(witt_zero_quadfield(pj, dK).is_zero());

    auto pij = pi2_rank1(Q("i + j"), c);
    REQUIRE(pij.size() == 2);
    CHECK(pij[0] == QuadElem(1));
    CHECK(pij[1] == QuadElem(2));

    // The closed form and the matrix construction agree in W(K).
    FormGenerator gen(hamilton(), 72, 6);
    for (int k = 0; k < 10; ++k) {
        Quat q = gen.pure_quaternion();
        auto full = diagonalize_quad(pi2(d_diagonal(-1, {q}), c).gram);
        auto closed = pi2_rank1(q, c);
        std::vector<QuadElem> nonzero;
        for (const auto& z : full.entries)
            if (!z.is_zero()) nonzero.push_back(z);
        CHECK(witt_equal_quad(nonzero, closed, dK));
    }
}

TEST_CASE("sigma1, sigma2, ext_D and theta on diagonal forms")
{
    const Conic& c = *hamilton();
    auto s1 = sigma1(k_diagonal(1, {QuadElem(1)}), c);
    CHECK(s1.eps == -1);
    CHECK(s1.gram(0, 0) == Q("i"));
    CHECK(sigma1(k_diagonal(1, {QuadElem(5)}), c).gram(0, 0) == Q("5i"));

    auto s2 = sigma2(KBilinearForm{1, QMatrix::diagonal({QuadElem(1)})}, c);
    CHECK(s2.eps == -1);
    CHECK(s2.gram(0, 0) == Q("ij"));
    auto s2g = sigma2(KBilinearForm{1, QMatrix::diagonal({kelem(2, 3)})}, c);
    CHECK(s2g.gram(0, 0) == Q("ij") * Q("2 + 3i"));
    CHECK(s2g.gram(0, 0).is_pure());
    auto hyp = sigma2(KBilinearForm{1, QMatrix::diagonal({QuadElem(1), QuadElem(-1)})}, c);
    CHECK(witt_zero_skewhermitian_D(hyp, c).is_zero());

    RMatrix phi = RMatrix::diagonal({Rational(2), Rational(3)});
    auto e = ext_D(phi, c);
    CHECK(e.eps == 1);
    CHECK(e.gram(0, 0) == Q("2"));
    std::vector<Rational> expected;
    for (long v : {2L, 3L})
        for (const auto& n : norm_form(c)) expected.push_back(n * v);
    std::vector<Rational> diff = diagonalize_q(s_D_trace_form(e, c)).entries;
    for (const auto& x : expected) diff.push_back(-x);
    CHECK(witt_zero_q(diff).is_zero());
    CHECK(witt_zero_hermitian_D(ext_D(RMatrix::diagonal({Rational(1), Rational(-1)}), c), c).is_zero());

    auto t = theta(RMatrix::diagonal({Rational(1)}), c);
    CHECK(t.eps == -1);
    CHECK(t.gram(0, 0) == k_field(c).i() * QuadElem(c.b));
    CHECK(theta(RMatrix::diagonal({Rational(7)}), c).gram(0, 0) == k_field(c).i() * QuadElem(c.b * 7));
    CHECK(witt_zero_hermitian_K(theta(RMatrix::diagonal({Rational(1), Rational(-1)}), c), c).is_zero());
    CHECK_FALSE(witt_zero_hermitian_K(theta(RMatrix::diagonal({Rational(1)}), c), c).is_zero());
}

TEST_CASE("gamma and psi")
{
    const Conic& c = *hamilton();
    QuadElem theta_inf = c.theta_infinity();
    CHECK(gamma_apply(c, QuadElem(1)) == QuadElem(1));
    CHECK(gamma_apply(c, theta_inf) == k_field(c).i());
    CHECK(gamma_apply(c, QuadElem(Rational(3)) + QuadElem(Rational(-4)) * theta_inf) == kelem(3, -4));
    CHECK(psi(c, {QuadElem(1)}) == std::vector<QuadElem>{QuadElem(-1)});
    CHECK(psi(c, {theta_inf}) == std::vector<QuadElem>{k_field(c).i()});

    auto other = make_conic(2, -5);
    QuadElem th2 = other->theta_infinity();
    CHECK(th2 * th2 == QuadElem(2));
    CHECK(gamma_apply(*other, th2) == k_field(*other).i());
}

TEST_CASE("rho on rank-one skew forms")
{
    const ConicPtr& cp = hamilton();
    for (const char* q : {"i", "j", "ij", "i + j", "2i + 3j + 5ij"}) {
        FMatrix G = rho(d_diagonal(-1, {Q(q)}), cp);
        CHECK(G.rows() == 2);
        CHECK(G == G.transpose());
        auto dg = diagonalize_f(G);
        CHECK(dg.entries.size() == 2);
        for (const auto& e : dg.entries) CHECK_FALSE(e.is_zero());
    }
    // rho of <q, -q> has the Lagrangian spanned by the sums of matching basis vectors
    FMatrix H = rho(d_diagonal(-1, {Q("i + j"), Q("-i - j")}), cp);
    REQUIRE(H.rows() == 4);
    FMatrix L(4, 2);
    L(0, 0) = L(2, 0) = FFElem(Rational(1));
    L(1, 1) = L(3, 1) = FFElem(Rational(1));
    CHECK(verify_lagrangian(H, L, IdentityInvolution{}));
}

TEST_CASE("octagon composites vanish and single maps need not")
{
    const Conic& c = *hamilton();
    FormGenerator gen(hamilton(), 73, 4);
    for (int k = 0; k < 3; ++k) {
        DHermitianForm hp = gen.d_form(1 + k % 2, 1);
        CHECK(witt_zero_hermitian_D(sigma2(pi2(hp, c), c), c).is_zero());
        CHECK(witt_zero_skewhermitian_D(sigma1(pi1(hp, c), c), c).is_zero());
        KHermitianForm kp = gen.k_hermitian(1 + k % 2, 1);
        CHECK(witt_zero_quadfield(pi2(sigma1(kp, c), c).gram, k_field(c).d).is_zero());
    }
    // <1> is not hyperbolic and neither is its image under pi1
    CHECK_FALSE(witt_zero_hermitian_K(pi1(d_diagonal(1, {Quat(Rational(1))}), c), c).is_zero());
    CHECK(witt_zero_skewhermitian_D(sigma1(k_diagonal(1, {QuadElem(1)}), c), c).is_nonzero());
}
