#include "wittconic/residues/nullity.hpp"

namespace wittconic {

NullityCertificate nullity_certify(const FFElem& f, int degree_bound)
{
    if (!f.is_integral() || f.is_zero()) throw InvalidInput("nullity needs a nonzero element of O_af");
    const ConicPtr& conic = f.conic();
    if (!conic) throw InvalidInput("nullity needs a conic");
    const Conic& c = *conic;
    NullityCertificate cert;
    cert.f = f;
    cert.n = -v_infty(f);
    const int n = cert.n;
    if (n <= 0) throw InvalidInput("nullity needs f with a pole at infinity");

    for (auto& [p, v] : support(f, degree_bound)) {
        if (p.is_infinity()) continue;
        if (v != 1) throw InvalidInput("f is not square-free at " + p.label());
        if (!p.quad) throw UnsupportedField("support point " + p.label() + " has degree " + std::to_string(p.degree));
        QuadElem u = unit_part(f, p).value;
        cert.points.push_back(p);
        cert.residues.push_back(u);
        cert.affine_terms.push_back(transfer_tp_value(u, coherent_functional(p)));
    }
    const size_t m = cert.points.size();
    if (m != static_cast<size_t>(n)) throw InvalidInput("D-dimensions of the fibers do not add up to -v_inf(f)");

    // Phi_T(e x^a) has component e_p x(p)^a / u_p at each p.
    cert.h_form = global_h_form(f);
    cert.phi = DMatrix(m, n);
    for (size_t b = 0; b < m; ++b) {
        const ClosedPoint& p = cert.points[b];
        QuadElem xa(Rational(1));
        for (int a = 0; a < n; ++a) {
            cert.phi(b, a) = fiber_coordinate(p, xa / cert.residues[b]);
            xa *= p.quad->x;
        }
    }
    DMatrix affine = DMatrix::diagonal(cert.affine_terms);

    Quat one = Quat::basis(0, c.a, c.b);
    if (n % 2 == 0) {
        cert.total_gram = affine;
        DMatrix E(n, n / 2);
        for (int a = 0; a < n / 2; ++a) E(a, a) = one;
        cert.lagrangian = cert.phi * E;
    } else {
        const int half = (n - 1) / 2;
        FFElem xn(Rational(1));
        for (int k = 0; k < n; ++k) xn *= FFElem::x(conic);
        QuadElem u_inf = unit_part(f, infinity_point(conic)).value;
        QuadElem closed_value = evaluate_at_infinity(xn / f);
        cert.infinity_term = transfer_tinfty_value(u_inf, c);
        cert.closed_form_term = transfer_tinfty_value(closed_value, c);
        // closed_value = 1/u, and <1/u> = <u (1/u)^2> is carried by conj(gamma(u)).
        cert.infinity_witness = embed_k(c, gamma_apply(c, u_inf).conj());
        // H(e x^m, e x^m) = -a w((x^n/f)(inf)) j - w((x^{n-1} y/f)(inf)) ij.
        FFElem ratio = xn / f;
        Quat expected = quat(Rational(0), Rational(0), -c.a * omega_infty(c, evaluate_at_infinity(ratio)),
                             -omega_infty(c, evaluate_at_infinity(ratio * FFElem::y(conic) / FFElem::x(conic))), c.a,
                             c.b);
        cert.rank1_ok = cert.h_form(half, half) == expected && expected == -*cert.closed_form_term;

        cert.total_gram = direct_sum(affine, DMatrix::diagonal({*cert.infinity_term}));
        cert.lagrangian = DMatrix(m + 1, half + 1);
        for (int a = 0; a <= half; ++a)
            for (size_t b = 0; b < m; ++b) cert.lagrangian(b, a) = cert.phi(b, a);
        cert.lagrangian(m, half) = cert.infinity_witness->inverse();
    }
    cert.isometry_ok = verify_isometry(affine, cert.h_form, cert.phi, BarInvolution{});
    cert.lagrangian_ok = verify_lagrangian(cert.total_gram, cert.lagrangian, BarInvolution{});
    if (verify_nullity(cert))
        cert.verdict = WittVerdict::zero("lagrangian", std::to_string(cert.lagrangian.cols()), cert.lagrangian);
    else
        cert.verdict = WittVerdict::unknown("nullity certificate failed to verify");
    return cert;
}

bool verify_nullity(const NullityCertificate& cert)
{
    if (cert.points.size() != cert.affine_terms.size()) return false;
    DMatrix affine = DMatrix::diagonal(cert.affine_terms);
    if (!verify_isometry(affine, cert.h_form, cert.phi, BarInvolution{})) return false;
    DMatrix total = affine;
    if (cert.n % 2 != 0) {
        if (!cert.infinity_term || !cert.closed_form_term || !cert.infinity_witness) return false;
        const Quat& d = *cert.infinity_witness;
        if (d.conj() * *cert.closed_form_term * d != *cert.infinity_term) return false;
        int half = (cert.n - 1) / 2;
        if (cert.h_form(half, half) != -*cert.closed_form_term) return false;
        total = direct_sum(affine, DMatrix::diagonal({*cert.infinity_term}));
    }
    return total == cert.total_gram && verify_lagrangian(total, cert.lagrangian, BarInvolution{}) && cert.rank1_ok;
}

} // namespace wittconic
