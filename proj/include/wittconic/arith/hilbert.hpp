#pragma once

#include "wittconic/arith/quadext.hpp"

#include <string>
#include <vector>

namespace wittconic {

// Places of Q: a prime, or 0 for the real place.
inline const Integer real_place = 0;

int hilbert_symbol_q(const Rational& alpha, const Rational& beta, const Integer& place);

// Real place first, then 2, then every prime dividing a numerator or denominator.
std::vector<Integer> relevant_places_q(const std::vector<Rational>& values);

// A place of Q(sqrt d).
struct QuadPlace {
    enum class Kind { Real, Inert, Split, Ramified, Dyadic, DyadicSplit };
    Kind kind = Kind::Real;
    Integer p = 0;      // 0 for real places
    // Real: sign of the image of t; Split: +1 for the smaller root;
    // DyadicSplit: t -> branch * s with s = 1 mod 4 the square root of d in Z_2.
    int branch = 0;
    Integer root = 0;   // Split: image of t modulo p

    std::string label() const;
};

bool operator<(const QuadPlace& a, const QuadPlace& b);
bool operator==(const QuadPlace& a, const QuadPlace& b);

// Places above p (p = 0 for the archimedean ones).
std::vector<QuadPlace> places_above(const Integer& d, const Integer& p);

// True when 2 splits in Q(sqrt d), i.e. d = 1 mod 8.
bool dyadic_split(const Integer& d);

// Places at which some value might fail to be a unit, plus all real places
// and the dyadic places; ordered deterministically.
std::vector<QuadPlace> relevant_places_quad(const Integer& d, const std::vector<QuadElem>& values);

// Hilbert symbol over the completion of Q(sqrt d) at v. A nonsplit dyadic
// symbol comes from the product formula; when 2 splits both completions are
// Q_2 and the symbol is read off a 2-adic image.
int hilbert_symbol_quadfield(const QuadElem& alpha, const QuadElem& beta, const QuadPlace& v, const Integer& d);

// Valuation of a nonzero element at a finite non-dyadic place.
int quad_valuation(const QuadElem& x, const QuadPlace& v, const Integer& d);

// Sign of x under a real embedding.
int real_sign(const QuadElem& x, const QuadPlace& v, const Integer& d);

bool is_square_q(const Rational& c);
bool is_square_quad(const QuadElem& c, const Integer& d);

} // namespace wittconic
