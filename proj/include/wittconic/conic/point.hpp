#pragma once

#include "wittconic/arith/factor.hpp"
#include "wittconic/conic/function_field.hpp"
#include "wittconic/conic/tower.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wittconic {

// Presentation of a degree-2 residue field as Q(t), t^2 = d.
struct QuadResidue {
    Integer d;
    QuadElem x, y;  // x(p), y(p); unused at infinity
};

// A closed point of the conic. Affine points lie over a monic irreducible
// P in Q[x]: inert (one point, k(p) = L(sqrt w)), split (two points, picked
// by Y = y mod P), or ramified (P proportional to w = ax^2 + b).
struct ClosedPoint {
    enum class Kind { Infinity, Inert, Split, Ramified };

    Kind kind = Kind::Infinity;
    ConicPtr conic;
    Poly place;
    Poly ycoord;  // Split only
    AffElem pi;   // normalized generator of m_p in O_af
    int degree = 2;
    int ramification = 1;  // v_p(P)
    TowerPtr field;
    TowerElem x_value, y_value;
    TowerElem place_unit;  // (P / pi^e)(p)
    std::optional<QuadResidue> quad;

    bool is_infinity() const { return kind == Kind::Infinity; }
    std::string label() const;
    // Uniformizer as a function: pi for affine points, 1/x at infinity.
    FFElem uniformizer() const;

    friend bool operator==(const ClosedPoint& a, const ClosedPoint& b)
    {
        return a.kind == b.kind && a.place == b.place && a.ycoord == b.ycoord;
    }
};

bool operator<(const ClosedPoint& a, const ClosedPoint& b);

ClosedPoint infinity_point(const ConicPtr& conic);

// Builds the point over P of the given kind; Y is needed for split points.
ClosedPoint make_affine_point(const ConicPtr& conic, const Poly& P, ClosedPoint::Kind kind, const Poly& Y = Poly());

// Every point over the monic irreducible P. A square root of w modulo P
// (when known) decides splitting for even deg P >= 4; without it such P
// raise UnsupportedField.
std::vector<ClosedPoint> points_over(const ConicPtr& conic, const Poly& P, const std::optional<Poly>& root = {});

// The degree-2 point cut out by alpha1*b + alpha2*a*x + alpha3*y = 0.
ClosedPoint points_from_linear(const ConicPtr& conic, const Rational& alpha1, const Rational& alpha2,
                               const Rational& alpha3);

// Quotient u / pi_p in O_af when it exists.
std::optional<AffElem> divide_by_pi(const AffElem& u, const ClosedPoint& p);

int valuation(const FFElem& f, const ClosedPoint& p);

// Image of f in k(p) for affine p; PoleAtPoint when v_p(f) < 0.
TowerElem evaluate(const FFElem& f, const ClosedPoint& p);
TowerElem evaluate(const AffElem& u, const ClosedPoint& p);
// Same for degree-2 points (and infinity) in the Q(t) presentation.
QuadElem evaluate_quad(const FFElem& f, const ClosedPoint& p);

QuadElem to_quad(const ClosedPoint& p, const TowerElem& c);
TowerElem from_quad(const ClosedPoint& p, const QuadElem& c);

// f = uniformizer^v * u with u a unit; returns v and u(p).
struct UnitPart {
    int valuation;
    QuadElem value;
};
UnitPart unit_part(const FFElem& f, const ClosedPoint& p);
UnitPart unit_part(const FFElem& f, const ClosedPoint& p, const FFElem& uniformizer);

// Basis of {u in O_af : v_inf(u) >= v_inf(pi_p)}: x^a (a <= n), x^b y (b < n).
std::vector<AffElem> riemann_roch_space(const ClosedPoint& p);

// Points with nonzero valuation, affine ones sorted, infinity last.
std::vector<std::pair<ClosedPoint, int>> support(const FFElem& f, int degree_bound = default_degree_bound);

} // namespace wittconic
