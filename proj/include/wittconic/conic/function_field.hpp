#pragma once

#include "wittconic/arith/polynomial.hpp"
#include "wittconic/arith/quadext.hpp"
#include "wittconic/conic/conic.hpp"

#include <string>

namespace wittconic {

// Element of k(x): reduced fraction with monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(1)) {}
    RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}  // NOLINT
    RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1)) {}                       // NOLINT
    RatFunc(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // deg num - deg den; meaningless for zero.
    int degree() const { return num_.degree() - den_.degree(); }

    RatFunc operator-() const { return RatFunc(-num_, den_, true); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    RatFunc(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_, den_;
};

std::string to_string(const RatFunc& r);

// Element of O_af = k[x, y]: g + h*y with polynomial coordinates.
struct AffElem {
    Poly g, h;

    bool is_zero() const { return g.is_zero() && h.is_zero(); }
};

// Element g + h*y of F = k(x)(y), y^2 = a x^2 + b. The conic pointer may be
// empty for elements of k(x) created without context; arithmetic adopts the
// conic of the other operand.
class FFElem {
public:
    FFElem() = default;
    FFElem(const Rational& c) : g_(c) {}  // NOLINT
    FFElem(RatFunc g, RatFunc h, ConicPtr conic);
    static FFElem x(const ConicPtr& conic);
    static FFElem y(const ConicPtr& conic);
    static FFElem from_poly(const Poly& p, const ConicPtr& conic) { return FFElem(p, RatFunc(), conic); }
    static FFElem from_aff(const AffElem& u, const ConicPtr& conic) { return FFElem(u.g, u.h, conic); }

    const RatFunc& g() const { return g_; }
    const RatFunc& h() const { return h_; }
    const ConicPtr& conic() const { return conic_; }
    bool is_zero() const { return g_.is_zero() && h_.is_zero(); }
    bool is_constant() const { return h_.is_zero() && g_.is_polynomial() && g_.num().degree() <= 0; }
    Rational constant_value() const { return g_.num().coeff(0); }

    FFElem conj() const { return FFElem(g_, -h_, conic_); }
    RatFunc norm() const;
    FFElem inverse() const;

    // f = (G + H y) / D with D monic and gcd(G, H, D) = 1.
    void split_denominator(AffElem& numerator, Poly& denominator) const;
    bool is_integral() const { return g_.is_polynomial() && h_.is_polynomial(); }
    AffElem as_aff() const;

    FFElem operator-() const { return FFElem(-g_, -h_, conic_); }
    FFElem& operator+=(const FFElem& o);
    FFElem& operator-=(const FFElem& o);
    FFElem& operator*=(const FFElem& o);
    FFElem& operator/=(const FFElem& o) { return *this *= o.inverse(); }
    friend FFElem operator+(FFElem a, const FFElem& b) { return a += b; }
    friend FFElem operator-(FFElem a, const FFElem& b) { return a -= b; }
    friend FFElem operator*(FFElem a, const FFElem& b) { return a *= b; }
    friend FFElem operator/(FFElem a, const FFElem& b) { return a /= b; }
    friend bool operator==(const FFElem& a, const FFElem& b) { return a.g_ == b.g_ && a.h_ == b.h_; }
    friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }

private:
    void adopt(const ConicPtr& other);
    RatFunc radicand() const;
    RatFunc g_, h_;
    ConicPtr conic_;
};

inline bool is_zero(const FFElem& f) { return f.is_zero(); }
inline FFElem inverse(const FFElem& f) { return f.inverse(); }

// ax^2 + b.
Poly conic_radicand(const Conic& c);

AffElem aff_mul(const AffElem& u, const AffElem& v, const Poly& w);
AffElem aff_conj(const AffElem& u);
Poly aff_norm(const AffElem& u, const Poly& w);

// Normalized valuation at infinity: min(-deg g, -1 - deg h).
int v_infty(const FFElem& f);

// Value in k(inf) = Q(sqrt a) for v_inf(f) >= 0; PoleAtPoint otherwise.
QuadElem evaluate_at_infinity(const FFElem& f);
// Value of f * x^{v_inf(f)} at infinity: the unit part for the uniformizer 1/x.
QuadElem leading_value_at_infinity(const FFElem& f);

// The functional on k(inf) with omega(1) = 0 and omega((y/x)(inf)) = -1.
Rational omega_infty(const Conic& c, const QuadElem& value);

// Parseable text such as "x^2 + 1 + (1/x)*y".
std::string to_string(const FFElem& f);

} // namespace wittconic
