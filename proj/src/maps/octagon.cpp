#include "wittconic/maps/octagon.hpp"

namespace wittconic {

std::string to_string(OctagonNode n)
{
    switch (n) {
    case OctagonNode::WPlusD: return "W+(D)";
    case OctagonNode::WMinusK: return "W-(K)";
    case OctagonNode::WPlusKBar: return "W+(K,bar)";
    case OctagonNode::WMinusD: return "W-(D)";
    case OctagonNode::WPlusK: return "W+(K)";
    case OctagonNode::WMinusKBar: break;
    }
    return "W-(K,bar)";
}

std::string to_string(OctagonMap m)
{
    switch (m) {
    case OctagonMap::Pi1: return "pi1";
    case OctagonMap::Pi2: return "pi2";
    case OctagonMap::Sigma1: return "sigma1";
    case OctagonMap::Sigma2: break;
    }
    return "sigma2";
}

OctagonNode octagon_target(OctagonMap m, OctagonNode s)
{
    using N = OctagonNode;
    switch (m) {
    case OctagonMap::Pi1:
        if (s == N::WPlusD) return N::WPlusKBar;
        if (s == N::WMinusD) return N::WMinusKBar;
        break;
    case OctagonMap::Pi2:
        if (s == N::WPlusD) return N::WMinusK;
        if (s == N::WMinusD) return N::WPlusK;
        break;
    case OctagonMap::Sigma1:
        if (s == N::WPlusKBar) return N::WMinusD;
        if (s == N::WMinusKBar) return N::WPlusD;
        break;
    case OctagonMap::Sigma2:
        if (s == N::WMinusK) return N::WPlusD;
        if (s == N::WPlusK) return N::WMinusD;
        break;
    }
    throw InvalidInput(to_string(m) + " is not defined on " + to_string(s));
}

DMatrix doubled_k_basis(size_t n, const Conic& c)
{
    DMatrix B(n, 2 * n);
    for (size_t t = 0; t < n; ++t) {
        B(t, 2 * t) = Quat::basis(0, c.a, c.b);
        B(t, 2 * t + 1) = Quat::basis(2, c.a, c.b);
    }
    return B;
}

namespace {

// Gram of h on the K-basis, split into its K and jK parts.
std::pair<QMatrix, QMatrix> split_gram(const DHermitianForm& h, const Conic& c, const DMatrix& B)
{
    if (B.rows() != h.gram.rows()) throw InvalidInput("K-basis has the wrong length");
    DMatrix M = congruence(B, h.gram, BarInvolution{});
    QMatrix F(M.rows(), M.cols()), G(M.rows(), M.cols());
    for (size_t r = 0; r < M.rows(); ++r)
        for (size_t s = 0; s < M.cols(); ++s) {
            auto [f, g] = split_components(c, M(r, s));
            F(r, s) = f;
            G(r, s) = g;
        }
    return {F, G};
}

} // namespace

KHermitianForm pi1(const DHermitianForm& h, const Conic& c) { return pi1(h, c, doubled_k_basis(h.gram.rows(), c)); }

KHermitianForm pi1(const DHermitianForm& h, const Conic& c, const DMatrix& kbasis)
{
    return {h.eps, split_gram(h, c, kbasis).first};
}

KBilinearForm pi2(const DHermitianForm& h, const Conic& c) { return pi2(h, c, doubled_k_basis(h.gram.rows(), c)); }

KBilinearForm pi2(const DHermitianForm& h, const Conic& c, const DMatrix& kbasis)
{
    return {-h.eps, split_gram(h, c, kbasis).second};
}

std::vector<QuadElem> pi2_rank1(const Quat& q, const Conic& c)
{
    if (!q.is_pure() || q.is_zero()) throw InvalidInput("pi2 closed form needs a nonzero pure quaternion");
    QuadElem q1 = split_components(c, q).second;
    if (q1.is_zero()) return {};
    Rational q2 = (q * q)[0];
    return {q1, q1 * QuadElem(-q2)};
}

DHermitianForm sigma1(const KHermitianForm& f, const Conic& c)
{
    Quat i = Quat::basis(1, c.a, c.b);
    return {-f.eps, f.gram.map([&](const QuadElem& z) { return embed_k(c, z) * i; })};
}

DHermitianForm sigma2(const KBilinearForm& g, const Conic& c)
{
    Quat ij = Quat::basis(3, c.a, c.b);
    return {-g.eps, g.gram.map([&](const QuadElem& z) { return ij * embed_k(c, z); })};
}

DHermitianForm ext_D(const RMatrix& phi, const Conic& c)
{
    return {1, phi.map([&](const Rational& r) { return quat(r, 0, 0, 0, c.a, c.b); })};
}

QuadElem gamma_apply(const Conic& c, const QuadElem& g)
{
    if (!g.is_rational() && g.modulus() != c.infinity_field.d) throw InvalidInput("gamma needs an element of k(inf)");
    return k_field(c).make(g.re(), g.im() / c.theta_scale);
}

std::vector<QuadElem> psi(const Conic& c, const std::vector<QuadElem>& diag)
{
    std::vector<QuadElem> out;
    for (auto& g : diag) {
        if (g.is_zero()) throw InvalidInput("psi of a zero entry");
        out.push_back(-gamma_apply(c, g).conj());
    }
    return out;
}

KHermitianForm theta(const RMatrix& phi, const Conic& c)
{
    QuadElem bi = k_field(c).i() * QuadElem(c.b);
    return {-1, phi.map([&](const Rational& r) { return bi * QuadElem(r); })};
}

QMatrix symplectic_lagrangian(const QMatrix& G)
{
    size_t n = G.rows();
    if (n % 2 != 0) throw DegenerateForm("odd-dimensional alternating form");
    using Vec = std::vector<QuadElem>;
    auto form = [&](const Vec& u, const Vec& v) {
        QuadElem s(Rational(0));
        for (size_t r = 0; r < n; ++r)
            for (size_t k = 0; k < n; ++k)
                if (!u[r].is_zero() && !v[k].is_zero()) s += u[r] * G(r, k) * v[k];
        return s;
    };
    std::vector<Vec> rest;
    for (size_t k = 0; k < n; ++k) {
        Vec e(n, QuadElem(Rational(0)));
        e[k] = QuadElem(Rational(1));
        rest.push_back(e);
    }
    std::vector<Vec> lag;
    while (!rest.empty()) {
        Vec e = rest.front();
        rest.erase(rest.begin());
        size_t partner = rest.size();
        for (size_t k = 0; k < rest.size() && partner == rest.size(); ++k)
            if (!form(e, rest[k]).is_zero()) partner = k;
        if (partner == rest.size()) throw DegenerateForm("degenerate alternating form");
        Vec f = rest[partner];
        rest.erase(rest.begin() + static_cast<long>(partner));
        QuadElem s = form(e, f).inverse();
        for (auto& z : f) z *= s;
        // Project onto the complement of span(e, f), where form(e, f) = 1.
        for (auto& v : rest) {
            QuadElem vf = form(v, f), ve = form(v, e);
            for (size_t r = 0; r < n; ++r) v[r] = v[r] - vf * e[r] + ve * f[r];
        }
        lag.push_back(e);
    }
    QMatrix L(n, lag.size());
    for (size_t k = 0; k < lag.size(); ++k)
        for (size_t r = 0; r < n; ++r) L(r, k) = lag[k][r];
    return L;
}

} // namespace wittconic
