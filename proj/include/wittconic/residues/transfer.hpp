#pragma once

#include "wittconic/maps/octagon.hpp"
#include "wittconic/residues/residue.hpp"

#include <vector>

namespace wittconic {

// (s_p)_*: each <f> becomes the Gram (s_p(f c_a c_b)) on the basis {1, t}
// of k(p) = Q(t).
RMatrix scharlau_transfer(const std::vector<QuadElem>& diag, const CoherentPair& pair);

// t_p<f> = <s_p(f b) i + s_p(f a x(p)) j + s_p(f y(p)) ij> for p of degree 2,
// written in the D-basis e_p of conj(T)(p).
Quat transfer_tp_value(const QuadElem& f, const CoherentPair& pair);
DHermitianForm transfer_tp(const std::vector<QuadElem>& diag, const CoherentPair& pair);

// t_inf<g> = <a w(g) j + w(g (y/x)(inf)) ij> for the uniformizer 1/x. A
// uniformizer c/x (c in Q) rescales the argument: t'<g> = t<c g>.
Quat transfer_tinfty_value(const QuadElem& g, const Conic& c, const Rational& uniformizer_scale = 1);
DHermitianForm transfer_tinfty(const std::vector<QuadElem>& diag, const Conic& c,
                               const Rational& uniformizer_scale = 1);

// Transfer of a residue entry to W-(D): t_p with the coherent functional of
// the point's own uniformizer, or t_inf.
DHermitianForm transfer_entry(const ResidueEntry& entry);

// The d in D with e_p d = e_p c for c in k(p); the K-basis (e_p c_a) of
// conj(T)(p) in the D-basis e_p.
Quat fiber_coordinate(const ClosedPoint& p, const QuadElem& c);

// S(g + f O_af) = -w_inf((g/f)(inf)) after reducing g modulo f O_af until
// v_inf(g) >= v_inf(f).
Rational s_functional(const FFElem& f, const FFElem& g);
// The reduced representative used by s_functional.
FFElem reduce_modulo(const FFElem& f, const FFElem& g);

// Gram of (S_D)_*(H) on the images of e x^a, a < n = -v_inf(f):
// b S(x^{a+b}) i + a S(x^{a+b+1}) j + S(x^{a+b} y) ij.
DMatrix global_h_form(const FFElem& f);

} // namespace wittconic
