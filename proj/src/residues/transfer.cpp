#include "wittconic/residues/transfer.hpp"

namespace wittconic {

namespace {

std::vector<QuadElem> quad_basis(const ClosedPoint& p)
{
    return {QuadElem(Rational(1)), QuadElem::generator(residue_field_modulus(p))};
}

const QuadResidue& quad_data(const ClosedPoint& p)
{
    if (p.is_infinity() || !p.quad)
        throw UnsupportedField("transfer needs an affine point of degree 2, got " + p.label());
    return *p.quad;
}

} // namespace

RMatrix scharlau_transfer(const std::vector<QuadElem>& diag, const CoherentPair& pair)
{
    auto basis = quad_basis(pair.point);
    RMatrix out(0, 0);
    for (auto& f : diag) {
        RMatrix block(2, 2);
        for (size_t r = 0; r < 2; ++r)
            for (size_t s = 0; s < 2; ++s) block(r, s) = pair.apply(f * basis[r] * basis[s]);
        out = direct_sum(out, block);
    }
    return out;
}

Quat transfer_tp_value(const QuadElem& f, const CoherentPair& pair)
{
    const QuadResidue& q = quad_data(pair.point);
    const Conic& c = *pair.point.conic;
    return quat(Rational(0), pair.apply(f * QuadElem(c.b)), pair.apply(f * QuadElem(c.a) * q.x), pair.apply(f * q.y),
                c.a, c.b);
}

DHermitianForm transfer_tp(const std::vector<QuadElem>& diag, const CoherentPair& pair)
{
    std::vector<Quat> out;
    for (auto& f : diag) out.push_back(transfer_tp_value(f, pair));
    return d_diagonal(-1, out);
}

Quat transfer_tinfty_value(const QuadElem& g, const Conic& c, const Rational& uniformizer_scale)
{
    QuadElem h = g * QuadElem(uniformizer_scale);
    return quat(Rational(0), Rational(0), c.a * omega_infty(c, h), omega_infty(c, h * c.theta_infinity()), c.a, c.b);
}

DHermitianForm transfer_tinfty(const std::vector<QuadElem>& diag, const Conic& c, const Rational& uniformizer_scale)
{
    std::vector<Quat> out;
    for (auto& g : diag) out.push_back(transfer_tinfty_value(g, c, uniformizer_scale));
    return d_diagonal(-1, out);
}

DHermitianForm transfer_entry(const ResidueEntry& entry)
{
    if (entry.point.is_infinity()) return transfer_tinfty(entry.diag, *entry.point.conic);
    return transfer_tp(entry.diag, coherent_functional(entry.point));
}

Quat fiber_coordinate(const ClosedPoint& p, const QuadElem& c)
{
    const Conic& cn = *p.conic;
    QuatQ e = fiber_e(p).e;
    QuatQ target = e * QuatQ(c);
    Matrix<Rational> M(8, 4);
    RVec rhs(8);
    for (int k = 0; k < 4; ++k) {
        QuatQ col = e * QuatQ::basis(k, cn.a, cn.b);
        for (int r = 0; r < 4; ++r) {
            M(2 * r, k) = col[r].re();
            M(2 * r + 1, k) = col[r].im();
        }
    }
    for (int r = 0; r < 4; ++r) {
        rhs[2 * r] = target[r].re();
        rhs[2 * r + 1] = target[r].im();
    }
    auto sol = solve_linear(M, rhs);
    if (!sol) throw InvalidInput("e_p c is not in e_p D at " + p.label());
    return quat((*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3], cn.a, cn.b);
}

FFElem reduce_modulo(const FFElem& f, const FFElem& g0)
{
    if (!f.is_integral() || !g0.is_integral()) throw InvalidInput("S needs elements of O_af");
    const ConicPtr& conic = f.conic();
    const Conic& c = *conic;
    const int n = -v_infty(f);
    FFElem g = g0;
    while (!g.is_zero() && -v_infty(g) > n) {
        int N = -v_infty(g);
        QuadElem r = leading_value_at_infinity(g) / leading_value_at_infinity(f);
        // r = r0 + r1 (y/x)(inf), matched by r0 x^{N-n} + r1 x^{N-n-1} y.
        Rational r0 = r.re(), r1 = r.im() / c.theta_scale;
        FFElem m = FFElem(RatFunc(Poly::monomial(r0, N - n)), RatFunc(Poly::monomial(r1, N - n - 1)), conic);
        g -= f * m;
    }
    return g;
}

Rational s_functional(const FFElem& f, const FFElem& g)
{
    FFElem r = reduce_modulo(f, g);
    if (r.is_zero()) return 0;
    return -omega_infty(*f.conic(), evaluate_at_infinity(r / f));
}

DMatrix global_h_form(const FFElem& f)
{
    const ConicPtr& conic = f.conic();
    if (!conic) throw InvalidInput("global H-form needs a conic");
    const Conic& c = *conic;
    const int n = -v_infty(f);
    if (n <= 0) throw InvalidInput("global H-form needs a pole at infinity");
    FFElem x = FFElem::x(conic), y = FFElem::y(conic);
    std::vector<FFElem> xp{FFElem(Rational(1))};
    for (int k = 1; k <= 2 * n; ++k) xp.push_back(xp.back() * x);
    DMatrix H(n, n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            H(r, s) = quat(Rational(0), c.b * s_functional(f, xp[r + s]), c.a * s_functional(f, xp[r + s + 1]),
                           s_functional(f, xp[r + s] * y), c.a, c.b);
    return H;
}

} // namespace wittconic
