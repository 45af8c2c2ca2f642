#pragma once

#include "wittconic/residues/transfer.hpp"

#include <vector>

namespace wittconic {

// A degree-2 point p and f in k(p) with t_p<f> = <q>.
struct SurjectivityWitness {
    Quat q;
    Rational alpha1, alpha2, alpha3;  // alpha1 b + alpha2 a x + alpha3 y = 0 cuts out p
    ClosedPoint point;
    std::vector<Rational> functional;  // r on {1, t}
    QuadElem f;
    bool verified = false;
};

// Pick alpha orthogonal to the coordinates of q with (alpha2, alpha3) != 0,
// read the functional r off r(b), r(a x(p)), r(y(p)), then solve
// r(g) = s_p(f g) for f.
SurjectivityWitness surjectivity_solve(const Quat& q, const ConicPtr& conic);

// <u><1, c> at infinity, c = -a lambda^2 - b N(u), lifted to <f><1, c> over F
// with f = lambda + u1 x + u2 y and u = u1 + u2 (y/x)(inf).
struct DeltaLift {
    Rational lambda;
    QuadElem u;
    Rational c;
    FFElem f;
    std::vector<FFElem> form;  // <f, c f>
    ResidueVector target;
    ResidueVector image;       // delta(form)
    std::vector<WittVerdict> auxiliary;  // entries away from infinity
    bool verified = false;
};

DeltaLift lift_to_delta_image(const Rational& lambda, const QuadElem& u, const ConicPtr& conic,
                              int degree_bound = default_degree_bound);

} // namespace wittconic
