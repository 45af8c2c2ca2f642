#pragma once

#include "wittconic/arith/rational.hpp"

#include <optional>
#include <string>

namespace wittconic {

// Q(t) with t^2 = d, d a squarefree integer other than 0 and 1.
struct QuadField {
    Integer d;

    friend bool operator==(const QuadField& a, const QuadField& b) { return a.d == b.d; }
};

// Element re + im*t of Q(sqrt d). Modulus 0 marks a rational value that
// combines with any field; im must then be zero.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(const Rational& r) : re_(r) {}  // NOLINT: rationals promote implicitly
    QuadElem(const Rational& re, const Rational& im, const Integer& d);
    static QuadElem generator(const Integer& d) { return QuadElem(Rational(0), Rational(1), d); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Integer& modulus() const { return d_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    QuadElem conj() const;
    Rational norm() const;
    Rational trace() const { return 2 * re_; }
    QuadElem inverse() const;
    // Same value tagged with the given field.
    QuadElem in_field(const Integer& d) const;

    QuadElem operator-() const { return QuadElem(-re_, -im_, d_); }
    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator/=(const QuadElem& o) { return *this *= o.inverse(); }

    friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
    friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
    friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
    friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }
    friend bool operator==(const QuadElem& a, const QuadElem& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }

private:
    static Integer merge(const Integer& a, const Integer& b);
    Rational re_, im_;
    Integer d_ = 0;
};

inline bool is_zero(const QuadElem& x) { return x.is_zero(); }
inline QuadElem inverse(const QuadElem& x) { return x.inverse(); }
inline QuadElem conj(const QuadElem& x) { return x.conj(); }

// "re + im*t" with the generator written as t.
std::string to_string(const QuadElem& x);

// Canonical presentation of Q(sqrt(r)) for a nonsquare rational r:
// sqrt(r) = scale * t with t^2 = d squarefree and scale > 0.
struct QuadPresentation {
    QuadField field;
    Rational scale;
};
QuadPresentation present_sqrt(const Rational& r);

// Square root in Q(sqrt d) if it exists.
std::optional<QuadElem> quad_sqrt(const QuadElem& x, const Integer& d);

} // namespace wittconic
