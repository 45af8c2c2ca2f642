#include "wittconic/residues/surjectivity.hpp"

namespace wittconic {

SurjectivityWitness surjectivity_solve(const Quat& q, const ConicPtr& conic)
{
    if (!q.is_pure() || q.is_zero()) throw InvalidInput("surjectivity needs a nonzero pure quaternion");
    const Conic& c = *conic;
    SurjectivityWitness w;
    w.q = q;
    const Rational l1 = q[1], l2 = q[2], l3 = q[3];
    if (l1 != 0) {
        w.alpha1 = -l2;
        w.alpha2 = l1;
        w.alpha3 = 0;
    } else {
        w.alpha1 = 0;
        w.alpha2 = l3;
        w.alpha3 = -l2;
    }
    w.point = points_from_linear(conic, w.alpha1, w.alpha2, w.alpha3);
    const QuadResidue& kp = *w.point.quad;
    CoherentPair pair = coherent_functional(w.point);

    // r(z) = r0 z.re + r1 z.im on k(p) = Q(t).
    const std::vector<QuadElem> args{QuadElem(c.b), QuadElem(c.a) * kp.x, kp.y};
    RMatrix A(3, 2);
    for (size_t k = 0; k < 3; ++k) {
        A(k, 0) = args[k].re();
        A(k, 1) = args[k].im();
    }
    auto r = solve_linear(A, RVec{l1, l2, l3});
    if (!r) throw InvalidInput("internal: functional system for " + to_string(q) + " is inconsistent");
    w.functional = *r;

    // s_p(f) = r(1), s_p(f t) = r(t) for f = f0 + f1 t.
    QuadElem t = QuadElem::generator(kp.d);
    RMatrix S(2, 2);
    S(0, 0) = pair.apply(QuadElem(Rational(1)));
    S(0, 1) = pair.apply(t);
    S(1, 0) = pair.apply(t);
    S(1, 1) = pair.apply(t * t);
    auto fc = solve_linear(S, RVec{(*r)[0], (*r)[1]});
    if (!fc) throw InvalidInput("internal: trace form of k(p) is degenerate");
    w.f = QuadElem((*fc)[0], (*fc)[1], kp.d);
    w.verified = transfer_tp_value(w.f, pair) == q;
    return w;
}

DeltaLift lift_to_delta_image(const Rational& lambda, const QuadElem& u, const ConicPtr& conic, int degree_bound)
{
    const Conic& c = *conic;
    if (u.is_zero()) throw InvalidInput("lift needs u != 0");
    if (!u.is_rational() && u.modulus() != c.infinity_field.d) throw InvalidInput("u must lie in k(inf)");
    DeltaLift out;
    out.lambda = lambda;
    out.u = u;
    const Rational u1 = u.re(), u2 = u.im() / c.theta_scale;
    // N(u) = u1^2 - a u2^2; c != 0 because <1, -a, -b> is anisotropic.
    out.c = -c.a * lambda * lambda - c.b * (u1 * u1 - c.a * u2 * u2);
    out.f = FFElem(lambda) + FFElem(u1) * FFElem::x(conic) + FFElem(u2) * FFElem::y(conic);
    out.form = {out.f, FFElem(out.c) * out.f};

    ClosedPoint inf = infinity_point(conic);
    out.target.entries.push_back({inf, {u, u * QuadElem(out.c)}});
    out.image = delta(out.form, conic, degree_bound);

    bool ok = true;
    bool saw_infinity = false;
    for (const auto& e : out.image.entries) {
        if (e.point.is_infinity()) {
            saw_infinity = true;
            ok = ok && e.diag == out.target.entries[0].diag;
        } else {
            out.auxiliary.push_back(witt_zero_residue(e));
            ok = ok && out.auxiliary.back().is_zero();
        }
    }
    out.verified = ok && saw_infinity;
    return out;
}

} // namespace wittconic
