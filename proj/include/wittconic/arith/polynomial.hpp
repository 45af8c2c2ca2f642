#pragma once

#include "wittconic/arith/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wittconic {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int degree);
    static Poly x() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Coefficient of x^k; zero outside the stored range.
    Rational coeff(int k) const;
    const Rational& lead() const;
    Poly monic() const;

    Rational eval(const Rational& x) const;
    // Horner evaluation in any ring that accepts Rational promotion.
    template <class T>
    T eval_in(const T& x) const
    {
        T acc(Rational(0));
        for (int k = degree(); k >= 0; --k) acc = acc * x + T(c_[k]);
        return acc;
    }

    Poly derivative() const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient and remainder; divisor nonzero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
Poly operator%(const Poly& a, const Poly& b);
// Division that must be exact; throws otherwise.
Poly exact_div(const Poly& num, const Poly& den);
bool divides(const Poly& d, const Poly& n);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// s, t with s*a + t*b = gcd(a, b).
void extended_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);
Poly power(const Poly& p, unsigned e);

// Degree first, then coefficients lowest first.
int compare(const Poly& a, const Poly& b);

// Content-free integer multiple: p = scale * primitive with integer coefficients.
std::vector<Integer> primitive_integer_coeffs(const Poly& p, Rational& scale);

std::string to_string(const Poly& p, std::string_view var = "x");

} // namespace wittconic
