#pragma once

#include "wittconic/arith/integer.hpp"

#include <string>
#include <string_view>

namespace wittconic {

inline Rational rat(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q", or "p" for integers.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q" with optional surrounding blanks.
Rational parse_rational(std::string_view text);

Rational abs_value(const Rational& q);

// Max of |numerator|, denominator.
Integer height(const Rational& q);

} // namespace wittconic
