#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace wittconic {

using Integer = mpz_class;
using Rational = mpq_class;

struct PrimePower {
    Integer prime;
    int exponent = 0;
};

// Prime factorization of |n| (n != 0), primes ascending.
std::vector<PrimePower> factor_integer(const Integer& n);

// Distinct primes dividing the numerator or denominator of q, ascending.
std::vector<Integer> prime_support(const Rational& q);

// s with n = s * m^2, s squarefree, sign(s) = sign(n).
Integer squarefree_part(const Integer& n);
// s squarefree integer with q = s * r^2 for some rational r.
Integer squarefree_part(const Rational& q);
// The r above (positive), so that q = squarefree_part(q) * r^2.
Rational square_cofactor(const Rational& q);

int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& q, const Integer& p);

bool is_square(const Integer& n);
bool is_square(const Rational& q);
std::optional<Rational> rational_sqrt(const Rational& q);

// Legendre symbol for an odd prime p; returns 0 when p | a.
int legendre(const Integer& a, const Integer& p);

// Square root of a modulo an odd prime p; a must be a nonzero square mod p.
Integer sqrt_mod_prime(const Integer& a, const Integer& p);

// Root s of s^2 = d modulo p^precision with s = root0 (mod p), p odd and p not dividing d.
Integer hensel_sqrt(const Integer& d, const Integer& root0, const Integer& p, int precision);

// Nonnegative residue of n modulo m.
Integer mod(const Integer& n, const Integer& m);

Integer power(const Integer& base, unsigned long exponent);

} // namespace wittconic
