#pragma once

#include "wittconic/conic/point.hpp"
#include "wittconic/quat/quaternion.hpp"
#include "wittconic/util/rng.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wittconic {

// K = Q(i) inside D, presented like k(inf): i = scale * t, t^2 = d.
struct KField {
    Rational a;
    Integer d;
    Rational scale;

    QuadElem i() const { return QuadElem(Rational(0), scale, d); }
    QuadElem make(const Rational& re, const Rational& i_coeff) const { return QuadElem(re, i_coeff * scale, d); }
    // c = re + coeff * i.
    Rational i_coeff(const QuadElem& c) const { return c.im() / scale; }
};

KField k_field(const Conic& c);

// K -> D.
Quat embed_k(const Conic& c, const QuadElem& k);
// The unique f, g in K with h = f + j g.
std::pair<QuadElem, QuadElem> split_components(const Conic& c, const Quat& h);
Quat recompose(const Conic& c, const QuadElem& f, const QuadElem& g);

// D over the residue field of a degree-2 point.
using QuatQ = Quaternion<QuadElem>;

// e = b i + a x j + y ij over F.
Quaternion<FFElem> generic_e(const ConicPtr& conic);

// Image of e (of e / x at infinity) in D(p).
struct FiberIdealData {
    ClosedPoint point;
    QuatQ e;
    std::pair<QuatQ, QuatQ> kbasis;  // (e_p, e_p i)
};
FiberIdealData fiber_e(const ClosedPoint& p);
Quaternion<TowerElem> fiber_e_tower(const ClosedPoint& p);

struct IdentityReport {
    int checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void expect(bool cond, const std::string& what)
    {
        ++checks;
        if (!cond) failures.push_back(what);
    }
};

// e^2 = 0, conj(e) = -e, b i e + a x j e + y ij e = 0, e y = e j - e i x,
// and (je, ije) spans D_F e.
IdentityReport check_generic_identities(const ConicPtr& conic);

// lambda^2 = 0, conj(lambda) = -lambda and lambda mu lambda = Trd(lambda mu) lambda
// for lambda in k(p) e_p and random mu in D(p).
IdentityReport check_fiber_identities(const ClosedPoint& p, int trials, SplitMix64& rng, long height = 10);

QuadElem random_quad(SplitMix64& rng, const Integer& d, long height);

std::string to_string(const QuatQ& q);

} // namespace wittconic
