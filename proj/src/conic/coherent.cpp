#include "wittconic/conic/coherent.hpp"

#include "wittconic/arith/linalg.hpp"
#include "wittconic/errors.hpp"

namespace wittconic {

Rational CoherentPair::apply(const TowerElem& c) const
{
    if (point.is_infinity()) throw InvalidInput("tower element at infinity");
    auto v = c.coords(*point.field);
    Rational s = 0;
    for (size_t k = 0; k < v.size(); ++k) s += v[k] * values[k];
    return s;
}

Rational CoherentPair::apply(const QuadElem& c) const
{
    if (point.is_infinity()) return c.re() * values[0] + c.im() * values[1];
    return apply(from_quad(point, c));
}

CoherentPair coherent_functional(const ClosedPoint& p) { return coherent_functional(p, p.uniformizer()); }

CoherentPair coherent_functional(const ClosedPoint& p, const FFElem& uniformizer)
{
    CoherentPair pair{p, uniformizer, {}};
    const Conic& c = *p.conic;
    if (p.is_infinity()) {
        pair.values = {omega_infty(c, QuadElem(Rational(1))), omega_infty(c, QuadElem::generator(c.infinity_field.d))};
        return pair;
    }
    if (valuation(uniformizer, p) != 1) throw InvalidInput("not a uniformizer at " + p.label());
    auto basis = riemann_roch_space(p);
    Matrix<Rational> M(p.degree, basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        auto col = evaluate(basis[j], p).coords(*p.field);
        for (int i = 0; i < p.degree; ++i) M(i, j) = col[i];
    }
    FFElem inv = uniformizer.inverse();
    for (int k = 0; k < p.degree; ++k) {
        RVec target(p.degree, Rational(0));
        target[k] = 1;
        auto sol = solve_linear(M, target);
        if (!sol) throw InvalidInput("Riemann-Roch system unsolvable at " + p.label());
        AffElem u;
        for (size_t j = 0; j < basis.size(); ++j) {
            u.g += basis[j].g * (*sol)[j];
            u.h += basis[j].h * (*sol)[j];
        }
        FFElem q = FFElem::from_aff(u, p.conic) * inv;
        if (!q.is_zero() && v_infty(q) < 0) throw BadRepresentative("uniformizer has too large a pole at infinity");
        pair.values.push_back(-omega_infty(c, evaluate_at_infinity(q)));
    }
    return pair;
}

Rational omega_p(const FFElem& f, const ClosedPoint& p)
{
    if (p.is_infinity()) throw InvalidInput("omega_p needs an affine point");
    if (f.is_zero()) return 0;
    if (!(p.uniformizer() * f).is_integral())
        throw BadRepresentative("pi_p * f is not in O_af for f = " + to_string(f));
    if (v_infty(f) < 0) throw BadRepresentative("f has a pole at infinity: " + to_string(f));
    return -omega_infty(*p.conic, evaluate_at_infinity(f));
}

TowerElem mu_pi(const FFElem& f, const CoherentPair& pair) { return evaluate(pair.uniformizer * f, pair.point); }

} // namespace wittconic
