#pragma once

#include "wittconic/arith/quadext.hpp"

#include <memory>

namespace wittconic {

// The conic y^2 = a x^2 + b attached to the quaternion algebra (a, b).
struct Conic {
    Rational a, b;
    // k(inf) = Q(y/x at infinity) = Q(sqrt a); sqrt(a) = theta_scale * t.
    QuadField infinity_field;
    Rational theta_scale;

    // The value (y/x)(inf) as an element of k(inf).
    QuadElem theta_infinity() const { return QuadElem(Rational(0), theta_scale, infinity_field.d); }
};

using ConicPtr = std::shared_ptr<const Conic>;

// Validates that <1, -a, -b> is anisotropic; throws SplitAlgebra otherwise.
ConicPtr make_conic(const Rational& a, const Rational& b);

// Places where (a, b) ramifies (0 for the real place).
std::vector<Integer> ramified_places(const Rational& a, const Rational& b);

} // namespace wittconic
