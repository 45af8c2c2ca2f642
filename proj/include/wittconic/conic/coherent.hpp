#pragma once

#include "wittconic/conic/point.hpp"

#include <vector>

namespace wittconic {

// A uniformizer at p with the linear functional s_p : k(p) -> Q that makes
// s_p(mu_pi(f)) = omega_p(f) on m_p^{-1} / O_p. At infinity the pair is
// (1/x, omega_inf).
struct CoherentPair {
    ClosedPoint point;
    FFElem uniformizer;
    // s_p on the tower basis of k(p); on {1, t} at infinity.
    std::vector<Rational> values;

    Rational apply(const TowerElem& c) const;
    Rational apply(const QuadElem& c) const;
};

CoherentPair coherent_functional(const ClosedPoint& p);
// Coherent functional for another uniformizer at p, given as an element of
// O_af with the same pole order at infinity (e.g. a rational multiple of pi_p).
CoherentPair coherent_functional(const ClosedPoint& p, const FFElem& uniformizer);

// omega_p(f) = -omega_inf(f(inf)) for a representative with pi_p * f in O_af
// and v_inf(f) >= 0; BadRepresentative otherwise.
Rational omega_p(const FFElem& f, const ClosedPoint& p);

// mu_pi(f) = (pi * f)(p).
TowerElem mu_pi(const FFElem& f, const CoherentPair& pair);

} // namespace wittconic
