#include "wittconic/conic/function_field.hpp"

#include "wittconic/errors.hpp"

#include <algorithm>

namespace wittconic {

RatFunc::RatFunc(const Poly& num, const Poly& den)
{
    if (den.is_zero()) throw InvalidInput("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = gcd(num, den);
    num_ = exact_div(num, g);
    den_ = exact_div(den, g);
    Rational lc = den_.lead();
    num_ *= Rational(1) / lc;
    den_ *= Rational(1) / lc;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_ * (a.den_.lead() * b.den_.lead()));
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    if (b.is_zero()) throw InvalidInput("division by zero in k(x)");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RatFunc& r)
{
    if (r.is_polynomial()) return to_string(r.num());
    return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

Poly conic_radicand(const Conic& c) { return Poly({c.b, Rational(0), c.a}); }

AffElem aff_mul(const AffElem& u, const AffElem& v, const Poly& w)
{
    return {u.g * v.g + u.h * v.h * w, u.g * v.h + u.h * v.g};
}

AffElem aff_conj(const AffElem& u) { return {u.g, -u.h}; }

Poly aff_norm(const AffElem& u, const Poly& w) { return u.g * u.g - u.h * u.h * w; }

FFElem::FFElem(RatFunc g, RatFunc h, ConicPtr conic) : g_(std::move(g)), h_(std::move(h)), conic_(std::move(conic))
{
    if (!h_.is_zero() && !conic_) throw InvalidInput("element with y-part needs a conic");
}

FFElem FFElem::x(const ConicPtr& conic) { return FFElem(Poly::x(), RatFunc(), conic); }
FFElem FFElem::y(const ConicPtr& conic) { return FFElem(RatFunc(), Rational(1), conic); }

void FFElem::adopt(const ConicPtr& other)
{
    if (!conic_) {
        conic_ = other;
    } else if (other && other != conic_ && (other->a != conic_->a || other->b != conic_->b)) {
        throw InvalidInput("mixing elements of different conics");
    }
}

RatFunc FFElem::radicand() const
{
    if (!conic_) throw InvalidInput("radicand without conic");
    return conic_radicand(*conic_);
}

RatFunc FFElem::norm() const
{
    if (h_.is_zero()) return g_ * g_;
    return g_ * g_ - h_ * h_ * radicand();
}

FFElem FFElem::inverse() const
{
    if (is_zero()) throw InvalidInput("inverse of zero in F");
    RatFunc n = norm();
    return FFElem(g_ / n, -h_ / n, conic_);
}

FFElem& FFElem::operator+=(const FFElem& o)
{
    adopt(o.conic_);
    g_ = g_ + o.g_;
    h_ = h_ + o.h_;
    return *this;
}

FFElem& FFElem::operator-=(const FFElem& o)
{
    adopt(o.conic_);
    g_ = g_ - o.g_;
    h_ = h_ - o.h_;
    return *this;
}

FFElem& FFElem::operator*=(const FFElem& o)
{
    adopt(o.conic_);
    RatFunc g = g_ * o.g_;
    if (!h_.is_zero() && !o.h_.is_zero()) g = g + h_ * o.h_ * radicand();
    RatFunc h = g_ * o.h_ + h_ * o.g_;
    g_ = std::move(g);
    h_ = std::move(h);
    return *this;
}

void FFElem::split_denominator(AffElem& numerator, Poly& denominator) const
{
    Poly l = g_.den();
    l = exact_div(l * h_.den(), gcd(l, h_.den()));
    denominator = l.monic();
    numerator.g = g_.num() * exact_div(denominator, g_.den());
    numerator.h = h_.num() * exact_div(denominator, h_.den());
}

AffElem FFElem::as_aff() const
{
    if (!is_integral()) throw BadRepresentative("element is not in O_af: " + to_string(*this));
    return {g_.num() * g_.den().lead(), h_.num() * h_.den().lead()};
}

int v_infty(const FFElem& f)
{
    if (f.is_zero()) throw InvalidInput("v_infty of zero");
    int v = 1 << 30;
    if (!f.g().is_zero()) v = std::min(v, -f.g().degree());
    if (!f.h().is_zero()) v = std::min(v, -1 - f.h().degree());
    return v;
}

namespace {

// Value at infinity of a rational function of degree <= 0.
Rational lead_at_infinity(const RatFunc& r)
{
    if (r.is_zero() || r.degree() < 0) return Rational(0);
    return r.num().lead() / r.den().lead();
}

} // namespace

QuadElem evaluate_at_infinity(const FFElem& f)
{
    if (f.is_zero()) return QuadElem(Rational(0));
    if (v_infty(f) < 0) throw PoleAtPoint("pole at infinity: " + to_string(f));
    Rational c0 = lead_at_infinity(f.g());
    if (f.h().is_zero()) return QuadElem(c0);
    // h*y = (h*x) * (y/x).
    Rational c1 = lead_at_infinity(f.h() * RatFunc(Poly::x()));
    const Conic& c = *f.conic();
    return QuadElem(c0, c1 * c.theta_scale, c.infinity_field.d);
}

QuadElem leading_value_at_infinity(const FFElem& f)
{
    int v = v_infty(f);
    RatFunc shift = v >= 0 ? RatFunc(Poly::monomial(Rational(1), v)) : RatFunc(Poly::constant(1), Poly::monomial(Rational(1), -v));
    return evaluate_at_infinity(f * FFElem(shift, RatFunc(), f.conic()));
}

Rational omega_infty(const Conic& c, const QuadElem& value)
{
    // value = re + im t = re + (im / scale) * theta.
    return -value.im() / c.theta_scale;
}

std::string to_string(const FFElem& f)
{
    if (f.is_zero()) return "0";
    std::string out;
    if (!f.g().is_zero()) out = f.g().is_polynomial() ? to_string(f.g()) : to_string(f.g());
    if (!f.h().is_zero()) {
        std::string h = to_string(f.h());
        std::string term = (h == "1") ? "y" : "(" + h + ")*y";
        out = out.empty() ? term : out + " + " + term;
    }
    return out;
}

} // namespace wittconic
