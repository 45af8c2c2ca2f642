#include "wittconic/forms/witt_quad.hpp"

#include "wittconic/arith/hilbert.hpp"

namespace wittconic {

Diagonalization<QuadElem> diagonalize_quad(const QMatrix& G) { return diagonalize(G, 1, IdentityInvolution{}); }

namespace {

WittVerdict decide_invariants(const std::vector<QuadElem>& diag, const Integer& d)
{
    size_t n = diag.size();
    if (n % 2 != 0) return WittVerdict::nonzero("dimension", std::to_string(n));
    if (n == 0) return WittVerdict::zero("invariants", "empty form");
    std::vector<QuadElem> values = diag;
    values.push_back(QuadElem(Rational(-1)));
    auto places = relevant_places_quad(d, values);
    for (auto& v : places) {
        if (v.kind != QuadPlace::Kind::Real) continue;
        int s = 0;
        for (auto& c : diag) s += real_sign(c, v, d);
        if (s != 0) return WittVerdict::nonzero("signature", v.label() + ":" + std::to_string(s));
    }
    QuadElem disc = (n / 2) % 2 == 0 ? QuadElem(Rational(1)) : QuadElem(Rational(-1));
    for (auto& c : diag) disc *= c;
    if (!is_square_quad(disc, d)) return WittVerdict::nonzero("discriminant", to_string(disc));
    size_t m = n / 2;
    bool odd_pairs = (m * (m - 1) / 2) % 2 == 1;
    const QuadElem minus_one(Rational(-1));
    for (auto& v : places) {
        int h = 1;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) h *= hilbert_symbol_quadfield(diag[i], diag[j], v, d);
        int hh = odd_pairs ? hilbert_symbol_quadfield(minus_one, minus_one, v, d) : 1;
        if (h != hh) return WittVerdict::nonzero("hasse", v.label() + ":" + std::to_string(h));
    }
    return WittVerdict::zero("invariants", "dim, signatures, discriminant and Hasse symbols match hyperbolic");
}

// Columns r e_i + e_j for planes <c_i, c_j> with -c_j / c_i = r^2.
std::optional<QMatrix> pair_off(const std::vector<QuadElem>& diag, const Integer& d)
{
    size_t n = diag.size();
    std::vector<bool> used(n, false);
    QMatrix L(n, n / 2);
    size_t col = 0;
    for (size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        bool found = false;
        for (size_t j = i + 1; j < n && !found; ++j) {
            if (used[j]) continue;
            if (auto r = quad_sqrt(-diag[j] / diag[i], d)) {
                used[i] = used[j] = true;
                L(i, col) = *r;
                L(j, col) = QuadElem(Rational(1));
                ++col;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return L;
}

} // namespace

WittVerdict witt_zero_quadfield(const QMatrix& G, const Integer& d)
{
    auto dg = diagonalize_quad(G);
    WittVerdict v = decide_invariants(dg.entries, d);
    if (!v.is_zero() || G.rows() == 0) return v;
    if (auto L = pair_off(dg.entries, d)) {
        QMatrix lag = dg.P * *L;
        if (verify_lagrangian(G, lag, IdentityInvolution{})) return WittVerdict::zero("lagrangian", std::to_string(lag.cols()), lag);
    }
    return v;
}

WittVerdict witt_zero_quadfield(const std::vector<QuadElem>& diag, const Integer& d)
{
    return witt_zero_quadfield(QMatrix::diagonal(diag), d);
}

} // namespace wittconic
