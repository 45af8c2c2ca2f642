#include "support/oracles.hpp"
#include "wittconic/forms/hermitian.hpp"
#include "wittconic/forms/witt_q.hpp"
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

Quat Q(const char* text) { return parse_quaternion(text, *hamilton()); }

std::vector<Rational> rats(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

template <class T>
bool lagrangian_checks(const WittVerdict& v, const Matrix<T>& G)
{
    const auto* L = std::get_if<Matrix<T>>(&v.lagrangian);
    return L && verify_lagrangian(G, *L, IdentityInvolution{});
}

} // namespace

TEST_CASE("diagonalization over Q")
{
    RMatrix H(2, 2);
    H(0, 1) = H(1, 0) = 1;
    auto dg = diagonalize_q(H);
    CHECK(oracle::is_square(Rational(-dg.entries[0] * dg.entries[1])));
    CHECK(verify_isometry(H, RMatrix::diagonal(dg.entries), dg.P, IdentityInvolution{}));
    CHECK(signature(dg.entries) == 0);

    auto d23 = diagonalize_q(RMatrix::diagonal(rats({2, 3})));
    CHECK(d23.entries == rats({2, 3}));
    CHECK(d23.P == RMatrix::identity(2));

    FormGenerator g(hamilton(), 61, 6);
    for (int k = 0; k < 30; ++k) {
        RMatrix G = g.q_form(1 + k % 4);
        auto d = diagonalize_q(G);
        CHECK(verify_isometry(G, RMatrix::diagonal(d.entries), d.P, IdentityInvolution{}));
    }
}

TEST_CASE("witt_zero_q on small forms")
{
    CHECK(witt_zero_q(rats({1, -1})).is_zero());
    auto four = witt_zero_q(rats({1, 1, 1, 1}));
    CHECK(four.is_nonzero());
    CHECK(four.invariant == "signature");
    CHECK(witt_zero_q(rats({1, 1, -1, -1})).is_zero());
    CHECK(witt_zero_q(rats({1, 1, -2, -2})).is_zero());  // 2 = 1 + 1 is a norm
    CHECK(witt_zero_q(rats({1, 1, -3, -3})).is_nonzero());
    CHECK(witt_zero_q(rats({1, -2})).is_nonzero());
    CHECK(witt_zero_q(rats({1, 1, -1})).is_nonzero());
}

TEST_CASE("witt_zero_q agrees with the isotropy oracle in rank 2")
{
    SplitMix64 rng(62);
    for (int k = 0; k < 200; ++k) {
        Rational c1 = rng.nonzero_rational(12), c2 = rng.nonzero_rational(12);
        bool hyperbolic = oracle::is_square(Rational(-c1 * c2));
        CHECK(witt_zero_q(std::vector<Rational>{c1, c2}).is_zero() == hyperbolic);
    }
}

TEST_CASE("isotropy agrees with a bounded search in ranks 3 and 4")
{
    SplitMix64 rng(63);
    for (int k = 0; k < 60; ++k) {
        std::vector<Rational> diag;
        for (int m = 0; m < 3 + k % 2; ++m) diag.push_back(rng.uniform(-6, 6) == 0 ? Rational(1) : Rational(rng.uniform(-6, 6) | 1));
        bool found = oracle::bounded_isotropic(diag, 8);
        bool decided = is_isotropic_q(diag);
        if (found) CHECK(decided);
        if (decided) {
            auto v = find_isotropic(diag);
            REQUIRE(v.has_value());
            Rational s = 0;
            bool nonzero = false;
            for (size_t i = 0; i < diag.size(); ++i) {
                s += diag[i] * (*v)[i] * (*v)[i];
                nonzero = nonzero || (*v)[i] != 0;
            }
            CHECK(s == 0);
            CHECK(nonzero);
        }
    }
}

TEST_CASE("phi plus minus phi is Zero with a verified Lagrangian")
{
    FormGenerator g(hamilton(), 64, 5);
    for (int k = 0; k < 20; ++k) {
        auto d = g.q_diagonal(1 + k % 3);
        std::vector<Rational> both = d;
        for (const auto& c : d) both.push_back(-c);
        RMatrix G = RMatrix::diagonal(both);
        auto v = witt_zero_q(G);
        CHECK(v.is_zero());
        CHECK(lagrangian_checks(v, G));
    }
}

TEST_CASE("decisions over quadratic fields")
{
    auto q = [](long re, long im, long d) { return QuadElem(Rational(re), Rational(im), Integer(d)); };
    CHECK(witt_zero_quadfield(std::vector<QuadElem>{q(1, 0, -1), q(1, 0, -1)}, -1).is_zero());
    CHECK(witt_zero_quadfield(std::vector<QuadElem>{q(1, 0, 2), q(1, 0, 2)}, 2).is_nonzero());
    CHECK(witt_zero_quadfield(std::vector<QuadElem>{q(1, 0, 2), q(-2, 0, 2)}, 2).is_zero());
    // <1, 1, 1> over Q(i) is isotropic but odd-dimensional
    CHECK(witt_zero_quadfield(std::vector<QuadElem>{q(1, 0, -1), q(1, 0, -1), q(1, 0, -1)}, -1).is_nonzero());
    // over Q(sqrt 17), with 2 split: <1, 1, 1, 1> has signature 4 at both real places
    CHECK(witt_zero_quadfield(std::vector<QuadElem>{q(1, 0, 17), q(1, 0, 17), q(1, 0, 17), q(1, 0, 17)}, 17)
              .is_nonzero());
    // <1, -t> is Zero iff t is a square; t = sqrt(-7) is not
    CHECK(witt_zero_quadfield(std::vector<QuadElem>{q(1, 0, -7), q(0, -1, -7)}, -7).is_nonzero());
    // <1, 1, 1, 1> over Q(sqrt -7) is the norm form of (-1, -1), which stays
    // ramified at the two dyadic places (both Q_2), so it is not hyperbolic
    CHECK(witt_zero_quadfield(std::vector<QuadElem>{q(1, 0, -7), q(1, 0, -7), q(1, 0, -7), q(1, 0, -7)}, -7)
              .is_nonzero());
    // same over Q(sqrt -15), where 2 also splits
    CHECK(witt_zero_quadfield(std::vector<QuadElem>{q(1, 0, -15), q(1, 0, -15), q(1, 0, -15), q(1, 0, -15)}, -15)
              .is_nonzero());
    // over Q(sqrt -3), 2 is inert and (-1, -1) splits: <1, 1, 1, 1> is hyperbolic
    CHECK(witt_zero_quadfield(std::vector<QuadElem>{q(1, 0, -3), q(1, 0, -3), q(1, 0, -3), q(1, 0, -3)}, -3)
              .is_zero());
}

TEST_CASE("trace forms")
{
    const Conic& c = *hamilton();
    auto sk = s_K_trace_form(k_diagonal(1, {QuadElem(1)}), c);
    CHECK(diagonalize_q(sk).entries == rats({1, 1}));
    for (long v : {2L, -3L, 5L}) {
        auto d = diagonalize_q(s_K_trace_form(k_diagonal(1, {QuadElem(v)}), c)).entries;
        CHECK(witt_zero_q(std::vector<Rational>{d[0], d[1], Rational(-v), Rational(v * c.a)}).is_zero());
    }
    auto sd = s_D_trace_form(d_diagonal(1, {Quat(Rational(1))}), c);
    CHECK(diagonalize_q(sd).entries == rats({1, 1, 1, 1}));
    CHECK(norm_form(c) == rats({1, 1, 1, 1}));
    CHECK(witt_zero_q(s_D_trace_form(d_diagonal(1, {Quat(Rational(1)), Quat(Rational(-1))}), c)).is_zero());
}

TEST_CASE("hermitian forms over D")
{
    const Conic& c = *hamilton();
    CHECK(witt_zero_hermitian_D(d_diagonal(1, {Quat(Rational(1)), Quat(Rational(-1))}), c).is_zero());
    CHECK(witt_zero_hermitian_D(d_diagonal(1, {Quat(Rational(1))}), c).is_nonzero());
    CHECK(witt_zero_hermitian_D(d_diagonal(1, {Quat(Rational(1)), Quat(Rational(1))}), c).is_nonzero());
}

TEST_CASE("skew-hermitian forms over D")
{
    const Conic& c = *hamilton();
    CHECK(witt_zero_skewhermitian_D(d_diagonal(-1, {Q("ij")}), c).is_nonzero());
    auto v = witt_zero_skewhermitian_D(d_diagonal(-1, {Q("ij"), Q("-ij")}), c);
    CHECK(v.is_zero());
    const auto* L = std::get_if<DMatrix>(&v.lagrangian);
    REQUIRE(L);
    CHECK(verify_lagrangian(d_diagonal(-1, {Q("ij"), Q("-ij")}).gram, *L, BarInvolution{}));

    FormGenerator g(hamilton(), 66, 5);
    for (int k = 0; k < 20; ++k) {
        Quat q = g.pure_quaternion();
        auto h = d_diagonal(-1, {q, -q});
        auto w = witt_zero_skewhermitian_D(h, c);
        CHECK(w.is_zero());
        // conj(d) q d for a unit d is in the same class, so <q, -conj(d) q d> is hyperbolic too
        Quat d = g.nonzero_quaternion();
        CHECK(decide_rank2_skew(q, -(d.conj() * q * d), c).verdict.is_zero());
    }
    // conj(j) i j = -i, so <i, i> is hyperbolic; <i, 3i> would need an element
    // of Q(i) of norm 3
    auto r = decide_rank2_skew(Q("i"), Q("i"), c);
    REQUIRE(r.verdict.is_zero());
    REQUIRE(r.d.has_value());
    CHECK(r.d->conj() * Q("i") * *r.d == -Q("i"));
    CHECK(decide_rank2_skew(Q("i"), Q("3i"), c).verdict.is_nonzero());
}

TEST_CASE("norm form over F has the isotropic vector (y, x, 1, 0)")
{
    const Conic& c = *hamilton();
    FFElem x = FFElem::x(hamilton()), y = FFElem::y(hamilton());
    auto n = norm_form(c);
    FFElem value = FFElem(n[0]) * y * y + FFElem(n[1]) * x * x + FFElem(n[2]);
    CHECK(value.is_zero());
    auto ext = scalar_extension<QuadElem>(RMatrix::diagonal(rats({1, -1})));
    CHECK(witt_zero_quadfield(ext, -1).is_zero());
}
