#include "wittconic/conic/point.hpp"

#include "wittconic/arith/linalg.hpp"
#include "wittconic/errors.hpp"

#include <algorithm>
#include <map>

namespace wittconic {

namespace {

FFElem ff_power(const FFElem& f, int e)
{
    FFElem base = e >= 0 ? f : f.inverse();
    FFElem r(Rational(1));
    for (int k = 0; k < std::abs(e); ++k) r *= base;
    return r;
}

int strip_place(Poly& D, const Poly& P)
{
    int m = 0;
    while (D.degree() >= P.degree() && divides(P, D)) {
        D = exact_div(D, P);
        ++m;
    }
    return m;
}

int strip_pi(AffElem& U, const ClosedPoint& p)
{
    int k = 0;
    while (!U.is_zero()) {
        auto q = divide_by_pi(U, p);
        if (!q) break;
        U = *q;
        ++k;
    }
    return k;
}

} // namespace

std::string ClosedPoint::label() const
{
    switch (kind) {
    case Kind::Infinity: return "inf";
    case Kind::Split: return "P=" + to_string(place) + ";y=" + to_string(ycoord);
    case Kind::Ramified: return "P=" + to_string(place) + ";y=0";
    case Kind::Inert: break;
    }
    return "P=" + to_string(place);
}

FFElem ClosedPoint::uniformizer() const
{
    if (is_infinity()) return FFElem(RatFunc(Poly::constant(1), Poly::x()), RatFunc(), conic);
    return FFElem::from_aff(pi, conic);
}

bool operator<(const ClosedPoint& a, const ClosedPoint& b)
{
    if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
    if (int c = compare(a.place, b.place)) return c < 0;
    return compare(a.ycoord, b.ycoord) < 0;
}

ClosedPoint infinity_point(const ConicPtr& conic)
{
    ClosedPoint p;
    p.kind = ClosedPoint::Kind::Infinity;
    p.conic = conic;
    p.degree = 2;
    QuadResidue q;
    q.d = conic->infinity_field.d;
    p.quad = q;
    return p;
}

TowerElem evaluate(const AffElem& u, const ClosedPoint& p)
{
    if (p.is_infinity()) throw InvalidInput("tower evaluation at infinity");
    return TowerElem(u.g, Poly(), p.field) + TowerElem(u.h, Poly(), p.field) * p.y_value;
}

std::optional<AffElem> divide_by_pi(const AffElem& u, const ClosedPoint& p)
{
    const Poly w = conic_radicand(*p.conic);
    Poly n = aff_norm(p.pi, w);
    AffElem t = aff_mul(u, aff_conj(p.pi), w);
    if (!divides(n, t.g) || !divides(n, t.h)) return std::nullopt;
    return AffElem{exact_div(t.g, n), exact_div(t.h, n)};
}

ClosedPoint make_affine_point(const ConicPtr& conic, const Poly& P, ClosedPoint::Kind kind, const Poly& Y)
{
    const Poly w = conic_radicand(*conic);
    ClosedPoint p;
    p.kind = kind;
    p.conic = conic;
    p.place = P.monic();
    auto field = std::make_shared<TowerField>();
    field->modulus = p.place;
    field->extended = kind == ClosedPoint::Kind::Inert;
    field->radicand = w % p.place;
    p.field = field;
    p.degree = field->degree();
    p.ramification = kind == ClosedPoint::Kind::Ramified ? 2 : 1;
    p.x_value = TowerElem(Poly::x(), Poly(), field);
    switch (kind) {
    case ClosedPoint::Kind::Inert: p.y_value = TowerElem(Poly(), Poly::constant(1), field); break;
    case ClosedPoint::Kind::Split:
        p.ycoord = Y % p.place;
        p.y_value = TowerElem(p.ycoord, Poly(), field);
        break;
    case ClosedPoint::Kind::Ramified: p.y_value = TowerElem(Rational(0)); break;
    case ClosedPoint::Kind::Infinity: throw InvalidInput("make_affine_point: infinity");
    }
    if ((p.y_value * p.y_value - TowerElem(w, Poly(), field)) != TowerElem(Rational(0)))
        throw InvalidInput("point data does not lie on the conic");

    if (p.degree == 2) {
        QuadResidue q;
        if (p.place.degree() == 1) {
            Rational r = -p.place.coeff(0);
            auto pres = present_sqrt(w.eval(r));
            q.d = pres.field.d;
            q.x = QuadElem(r, Rational(0), q.d);
            q.y = QuadElem(Rational(0), pres.scale, q.d);
        } else {
            Rational p1 = p.place.coeff(1), p0 = p.place.coeff(0);
            auto pres = present_sqrt(p1 * p1 - 4 * p0);
            q.d = pres.field.d;
            q.x = QuadElem(-p1 / 2, pres.scale / 2, q.d);
            q.y = p.ycoord.eval_in(q.x).in_field(q.d);
        }
        p.quad = q;
    }

    // pi spans the functions of pole order <= n at infinity vanishing at p.
    int n = p.degree / 2;
    std::vector<AffElem> basis;
    for (int a = 0; a <= n; ++a) basis.push_back({Poly::monomial(Rational(1), a), Poly()});
    for (int b = 0; b < n; ++b) basis.push_back({Poly(), Poly::monomial(Rational(1), b)});
    Matrix<Rational> M(p.degree, basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        auto c = evaluate(basis[j], p).coords(*field);
        for (int i = 0; i < p.degree; ++i) M(i, j) = c[i];
    }
    auto ker = nullspace(M);
    if (ker.size() != 1) throw InvalidInput("uniformizer space is not a line for " + p.label());
    AffElem pi;
    for (size_t j = 0; j < basis.size(); ++j) {
        pi.g += basis[j].g * ker[0][j];
        pi.h += basis[j].h * ker[0][j];
    }
    Rational lead = pi.h.is_zero() ? pi.g.lead() : pi.h.lead();
    pi.g *= Rational(1) / lead;
    pi.h *= Rational(1) / lead;
    p.pi = pi;

    AffElem u{p.place, Poly()};
    for (int k = 0; k < p.ramification; ++k) {
        auto q = divide_by_pi(u, p);
        if (!q) throw InvalidInput("ramification mismatch at " + p.label());
        u = *q;
    }
    p.place_unit = evaluate(u, p);
    if (p.place_unit.is_zero()) throw InvalidInput("ramification mismatch at " + p.label());
    return p;
}

std::vector<ClosedPoint> points_over(const ConicPtr& conic, const Poly& P, const std::optional<Poly>& root)
{
    using Kind = ClosedPoint::Kind;
    const Poly w = conic_radicand(*conic);
    Poly M = P.monic();
    if (M == w.monic()) return {make_affine_point(conic, M, Kind::Ramified)};
    if (M.degree() % 2 == 1) return {make_affine_point(conic, M, Kind::Inert)};

    std::optional<Poly> Y;
    if (M.degree() == 2) {
        Rational p1 = M.coeff(1), p0 = M.coeff(0);
        auto pres = present_sqrt(p1 * p1 - 4 * p0);
        QuadElem xq(-p1 / 2, pres.scale / 2, pres.field.d);
        if (auto s = quad_sqrt(w.eval_in(xq), pres.field.d)) {
            // t = (x - re) / im in terms of x.
            Rational inv = Rational(1) / xq.im();
            Y = Poly::constant(s->re()) + Poly({-xq.re() * inv, inv}) * s->im();
        }
    } else if (root) {
        if (((*root) * (*root) - w) % M == Poly()) Y = *root % M;
    } else {
        throw UnsupportedField("cannot decide splitting over " + to_string(M) + " without a known root of w");
    }
    if (!Y) {
        if (M.degree() >= 4 && root) throw UnsupportedField("root does not lift over " + to_string(M));
        return {make_affine_point(conic, M, Kind::Inert)};
    }
    Poly Y1 = *Y, Y2 = (-*Y) % M;
    if (compare(Y2, Y1) < 0) std::swap(Y1, Y2);
    return {make_affine_point(conic, M, Kind::Split, Y1), make_affine_point(conic, M, Kind::Split, Y2)};
}

ClosedPoint points_from_linear(const ConicPtr& conic, const Rational& alpha1, const Rational& alpha2,
                               const Rational& alpha3)
{
    if (alpha2 == 0 && alpha3 == 0) throw InvalidInput("line needs (alpha2, alpha3) != (0, 0)");
    const Conic& c = *conic;
    Poly lin({alpha1 * c.b, alpha2 * c.a});
    if (alpha3 == 0) return make_affine_point(conic, lin.monic(), ClosedPoint::Kind::Inert);
    Poly N = lin * lin - conic_radicand(c) * (alpha3 * alpha3);
    Poly Y = lin * (Rational(-1) / alpha3);
    if (Y.is_zero()) return make_affine_point(conic, N.monic(), ClosedPoint::Kind::Ramified);
    return make_affine_point(conic, N.monic(), ClosedPoint::Kind::Split, Y);
}

int valuation(const FFElem& f, const ClosedPoint& p)
{
    if (f.is_zero()) throw InvalidInput("valuation of zero");
    if (p.is_infinity()) return v_infty(f);
    AffElem U;
    Poly D;
    f.split_denominator(U, D);
    return strip_pi(U, p) - p.ramification * strip_place(D, p.place);
}

TowerElem evaluate(const FFElem& f, const ClosedPoint& p)
{
    if (p.is_infinity()) throw InvalidInput("tower evaluation at infinity; use evaluate_quad");
    if (f.is_zero()) return TowerElem(Rational(0));
    AffElem U;
    Poly D;
    f.split_denominator(U, D);
    int m = strip_place(D, p.place);
    int k = strip_pi(U, p);
    int v = k - p.ramification * m;
    if (v < 0) throw PoleAtPoint("pole of order " + std::to_string(-v) + " at " + p.label());
    if (v > 0) return TowerElem(Rational(0));
    TowerElem den = TowerElem(D, Poly(), p.field);
    for (int i = 0; i < m; ++i) den *= p.place_unit;
    return evaluate(U, p) / den;
}

QuadElem to_quad(const ClosedPoint& p, const TowerElem& c)
{
    if (!p.quad || p.is_infinity()) throw UnsupportedField("no quadratic presentation at " + p.label());
    const QuadResidue& q = *p.quad;
    if (p.place.degree() == 1)
        return QuadElem(c.c0().coeff(0), c.c1().coeff(0) * q.y.im(), q.d);
    return (QuadElem(c.c0().coeff(0)) + q.x * QuadElem(c.c0().coeff(1))).in_field(q.d);
}

TowerElem from_quad(const ClosedPoint& p, const QuadElem& c)
{
    if (!p.quad || p.is_infinity()) throw UnsupportedField("no quadratic presentation at " + p.label());
    const QuadResidue& q = *p.quad;
    if (p.place.degree() == 1)
        return TowerElem(Poly::constant(c.re()), Poly::constant(c.im() / q.y.im()), p.field);
    Rational inv = Rational(1) / q.x.im();
    Poly t({-q.x.re() * inv, inv});
    return TowerElem(Poly::constant(c.re()) + t * c.im(), Poly(), p.field);
}

QuadElem evaluate_quad(const FFElem& f, const ClosedPoint& p)
{
    if (p.is_infinity()) return evaluate_at_infinity(f);
    return to_quad(p, evaluate(f, p));
}

UnitPart unit_part(const FFElem& f, const ClosedPoint& p)
{
    if (p.is_infinity()) return {v_infty(f), leading_value_at_infinity(f)};
    int v = valuation(f, p);
    return {v, evaluate_quad(f * ff_power(p.uniformizer(), -v), p)};
}

UnitPart unit_part(const FFElem& f, const ClosedPoint& p, const FFElem& uniformizer)
{
    if (valuation(uniformizer, p) != 1) throw InvalidInput("not a uniformizer at " + p.label());
    int v = valuation(f, p);
    return {v, evaluate_quad(f * ff_power(uniformizer, -v), p)};
}

std::vector<AffElem> riemann_roch_space(const ClosedPoint& p)
{
    if (p.is_infinity()) throw InvalidInput("riemann_roch_space needs an affine point");
    int n = p.degree / 2;
    std::vector<AffElem> basis;
    for (int a = 0; a <= n; ++a) basis.push_back({Poly::monomial(Rational(1), a), Poly()});
    for (int b = 0; b < n; ++b) basis.push_back({Poly(), Poly::monomial(Rational(1), b)});
    return basis;
}

std::vector<std::pair<ClosedPoint, int>> support(const FFElem& f, int degree_bound)
{
    if (f.is_zero()) throw InvalidInput("support of zero");
    const ConicPtr& conic = f.conic();
    std::vector<std::pair<ClosedPoint, int>> out;
    if (f.is_constant()) return out;
    if (!conic) throw InvalidInput("support needs a conic");
    const Poly w = conic_radicand(*conic);

    AffElem U;
    Poly D;
    f.split_denominator(U, D);
    // Candidate places with an optional square root of w found from U.
    std::map<std::vector<Rational>, std::pair<Poly, std::optional<Poly>>> places;
    auto note = [&](const Poly& P, std::optional<Poly> root) {
        auto key = P.coeffs();
        auto it = places.find(key);
        if (it == places.end()) places.emplace(key, std::make_pair(P, root));
        else if (!it->second.second && root) it->second.second = root;
    };
    Poly normU = aff_norm(U, w);
    if (normU.degree() > 0)
        for (auto& [P, m] : poly_factor_q(normU, degree_bound).factors) {
            AffElem V = U;
            while (divides(P, V.g) && divides(P, V.h)) V = {exact_div(V.g, P), exact_div(V.h, P)};
            std::optional<Poly> root;
            if (!(V.h % P).is_zero()) root = (-V.g * inverse_mod(V.h, P)) % P;
            note(P, root);
        }
    if (D.degree() > 0)
        for (auto& [P, m] : poly_factor_q(D, degree_bound).factors) note(P, std::nullopt);

    int total = 0;
    for (auto& [key, entry] : places)
        for (auto& pt : points_over(conic, entry.first, entry.second)) {
            int v = valuation(f, pt);
            if (v == 0) continue;
            total += pt.degree * v;
            out.emplace_back(pt, v);
        }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    int vinf = v_infty(f);
    if (vinf != 0) {
        out.emplace_back(infinity_point(conic), vinf);
        total += 2 * vinf;
    }
    if (total != 0) throw InvalidInput("support degrees do not sum to zero for " + to_string(f));
    return out;
}

} // namespace wittconic
