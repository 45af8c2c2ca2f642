#include "wittconic/quat/ideal.hpp"

namespace wittconic {

KField k_field(const Conic& c) { return KField{c.a, c.infinity_field.d, c.theta_scale}; }

Quat embed_k(const Conic& c, const QuadElem& k)
{
    return quat(k.re(), k_field(c).i_coeff(k), Rational(0), Rational(0), c.a, c.b);
}

std::pair<QuadElem, QuadElem> split_components(const Conic& c, const Quat& h)
{
    // j (g0 + g1 i) = g0 j - g1 ij.
    KField K = k_field(c);
    return {K.make(h[0], h[1]), K.make(h[2], -h[3])};
}

Quat recompose(const Conic& c, const QuadElem& f, const QuadElem& g)
{
    return embed_k(c, f) + Quat::basis(2, c.a, c.b) * embed_k(c, g);
}

Quaternion<FFElem> generic_e(const ConicPtr& conic)
{
    return Quaternion<FFElem>(FFElem(Rational(0)), FFElem(conic->b), FFElem::x(conic) * FFElem(conic->a),
                              FFElem::y(conic), conic->a, conic->b);
}

FiberIdealData fiber_e(const ClosedPoint& p)
{
    const Conic& c = *p.conic;
    QuatQ e;
    if (p.is_infinity()) {
        e = QuatQ(QuadElem(), QuadElem(), QuadElem(c.a), c.theta_infinity(), c.a, c.b);
    } else {
        if (!p.quad) throw UnsupportedField("fiber_e over a residue field of degree " + std::to_string(p.degree));
        e = QuatQ(QuadElem(), QuadElem(c.b), QuadElem(c.a) * p.quad->x, p.quad->y, c.a, c.b);
    }
    QuatQ i = QuatQ::basis(1, c.a, c.b);
    return {p, e, {e, e * i}};
}

Quaternion<TowerElem> fiber_e_tower(const ClosedPoint& p)
{
    if (p.is_infinity()) throw InvalidInput("fiber_e_tower needs an affine point");
    const Conic& c = *p.conic;
    return Quaternion<TowerElem>(TowerElem(Rational(0)), TowerElem(c.b), TowerElem(c.a) * p.x_value, p.y_value, c.a,
                                 c.b);
}

IdentityReport check_generic_identities(const ConicPtr& conic)
{
    using QF = Quaternion<FFElem>;
    const Conic& c = *conic;
    IdentityReport rep;
    QF e = generic_e(conic);
    QF i = QF::basis(1, c.a, c.b), j = QF::basis(2, c.a, c.b), ij = QF::basis(3, c.a, c.b);
    FFElem x = FFElem::x(conic), y = FFElem::y(conic);
    rep.expect((e * e).is_zero(), "e^2 = 0");
    rep.expect(e.conj() == -e, "conj(e) = -e");
    rep.expect((QF(FFElem(c.b)) * i * e + QF(FFElem(c.a) * x) * j * e + QF(y) * ij * e).is_zero(),
               "b i e + a x j e + y ij e = 0");
    rep.expect(e * QF(y) == e * j - e * i * QF(x), "e y = e j - e i x");

    // Coordinates of e, ie, je, ije as columns; rank 2 with je, ije independent.
    std::vector<QF> gens{e, i * e, j * e, ij * e};
    Matrix<FFElem> M(4, 4), N(4, 2);
    for (size_t col = 0; col < 4; ++col)
        for (int r = 0; r < 4; ++r) {
            M(r, col) = gens[col][r];
            if (col >= 2) N(r, col - 2) = gens[col][r];
        }
    rep.expect(column_rank(M) == 2, "dim_F D_F e = 2");
    rep.expect(column_rank(N) == 2, "(je, ije) independent over F");
    return rep;
}

QuadElem random_quad(SplitMix64& rng, const Integer& d, long height)
{
    return QuadElem(rng.rational(height), rng.rational(height), d);
}

IdentityReport check_fiber_identities(const ClosedPoint& p, int trials, SplitMix64& rng, long height)
{
    IdentityReport rep;
    FiberIdealData fib = fiber_e(p);
    const Conic& c = *p.conic;
    const Integer& d = p.quad->d;
    rep.expect((fib.e * fib.e).is_zero(), "e_p^2 = 0 at " + p.label());
    rep.expect(fib.e.conj() == -fib.e, "conj(e_p) = -e_p at " + p.label());
    for (int t = 0; t < trials; ++t) {
        QuatQ lambda = QuatQ(random_quad(rng, d, height)) * fib.e;
        QuatQ mu(random_quad(rng, d, height), random_quad(rng, d, height), random_quad(rng, d, height),
                 random_quad(rng, d, height), c.a, c.b);
        std::string tag = " at " + p.label() + ", trial " + std::to_string(t);
        rep.expect((lambda * lambda).is_zero(), "lambda^2 = 0" + tag);
        rep.expect(lambda.conj() == -lambda, "conj(lambda) = -lambda" + tag);
        rep.expect(lambda * mu * lambda == QuatQ((lambda * mu).trd()) * lambda, "lambda mu lambda = Trd(lambda mu) lambda" + tag);
    }
    return rep;
}

std::string to_string(const QuatQ& q)
{
    return quaternion_to_string(q, [](const QuadElem& x) { return to_string(x); });
}

} // namespace wittconic
