#include "wittconic/maps/morita.hpp"

namespace wittconic {

FMatrix rho_rank1(const Quat& q, const ConicPtr& conic)
{
    if (!q.is_pure() || q.is_zero()) throw InvalidInput("rho needs a nonzero pure quaternion");
    using QF = Quaternion<FFElem>;
    const Conic& c = *conic;
    QF e = generic_e(conic);
    QF qf = q.map([&](const Rational& r) { return FFElem(r); });
    const QF basis[2] = {QF::basis(2, c.a, c.b) * e, QF::basis(3, c.a, c.b) * e};
    FMatrix B(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
            QF X = basis[r].conj() * qf * basis[s];
            // e has i-coefficient b, so X = e c pins c down.
            FFElem val = X[1] / FFElem(c.b);
            if (X != e * QF(val)) throw InvalidInput("internal: conj(t) q t' is not in e F");
            B(r, s) = val;
        }
    return B;
}

FMatrix rho(const DHermitianForm& h, const ConicPtr& conic)
{
    if (h.eps != -1) throw InvalidInput("rho needs a skew-hermitian form");
    auto dg = diagonalize(h, *conic);
    FMatrix out(0, 0);
    for (auto& q : dg.entries) out = direct_sum(out, rho_rank1(q, conic));
    return out;
}

Diagonalization<FFElem> diagonalize_f(const FMatrix& G) { return diagonalize(G, 1, IdentityInvolution{}); }

} // namespace wittconic
