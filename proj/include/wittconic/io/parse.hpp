#pragma once

#include "wittconic/maps/morita.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wittconic {

// Expressions use + - * / ^ (integer exponents), parentheses and implicit
// multiplication ("2i", "3x y"). An identifier that is not a known symbol
// is read as the product of its letters, so "ji" = j i = -ij.

// Symbols i, j, ij over the table of the conic's algebra.
Quat parse_quaternion(std::string_view text, const Conic& c);
// Symbols x, y; division by any nonzero element.
FFElem parse_function(std::string_view text, const ConicPtr& conic);
// Symbol x; division by nonzero constants only.
Poly parse_poly(std::string_view text);
// Symbol t with t^2 = d.
QuadElem parse_residue_scalar(std::string_view text, const Integer& d);

// "r1,r2,..." as rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

// "inf", "line:a1,a2,a3", or a polynomial P in x (made monic) with an
// optional "#k" picking the k-th point over P.
ClosedPoint parse_point(std::string_view text, const ConicPtr& conic);

// JSON {"diag": [...]} or {"gram": [[...], ...]} with entries in x, y.
FMatrix parse_form_json(const std::string& json_text, const ConicPtr& conic);

} // namespace wittconic
