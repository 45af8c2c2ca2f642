#include "wittconic/arith/quadext.hpp"

#include "wittconic/errors.hpp"

namespace wittconic {

QuadElem::QuadElem(const Rational& re, const Rational& im, const Integer& d) : re_(re), im_(im), d_(d)
{
    if (d_ == 0 && im_ != 0) throw InvalidInput("irrational value without a field");
}

Integer QuadElem::merge(const Integer& a, const Integer& b)
{
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw InvalidInput("mixing Q(sqrt " + a.get_str() + ") with Q(sqrt " + b.get_str() + ")");
}

QuadElem QuadElem::conj() const { return QuadElem(re_, -im_, d_); }

Rational QuadElem::norm() const { return re_ * re_ - Rational(d_) * im_ * im_; }

QuadElem QuadElem::inverse() const
{
    Rational n = norm();
    if (n == 0) throw InvalidInput("inverse of zero in quadratic field");
    return QuadElem(re_ / n, -im_ / n, d_);
}

QuadElem QuadElem::in_field(const Integer& d) const { return QuadElem(re_, im_, merge(d_, d)); }

QuadElem& QuadElem::operator+=(const QuadElem& o)
{
    d_ = merge(d_, o.d_);
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o)
{
    d_ = merge(d_, o.d_);
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o)
{
    d_ = merge(d_, o.d_);
    Rational re = re_ * o.re_ + Rational(d_) * im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string to_string(const QuadElem& x)
{
    if (x.im() == 0) return to_string(x.re());
    std::string im;
    Rational m = x.im() < 0 ? Rational(-x.im()) : x.im();
    im = (m == 1 ? std::string("t") : to_string(m) + "*t");
    if (x.re() == 0) return (x.im() < 0 ? "-" : "") + im;
    return to_string(x.re()) + (x.im() < 0 ? " - " : " + ") + im;
}

QuadPresentation present_sqrt(const Rational& r)
{
    if (r == 0 || is_square(r)) throw InvalidInput("present_sqrt: square argument");
    Integer d = squarefree_part(r);
    return {QuadField{d}, square_cofactor(r)};
}

std::optional<QuadElem> quad_sqrt(const QuadElem& x, const Integer& d)
{
    if (x.is_zero()) return QuadElem(Rational(0), Rational(0), d);
    // (s + u t)^2 = s^2 + d u^2 + 2 s u t; the norm must be a rational square.
    auto n = rational_sqrt(x.norm());
    if (!n) return std::nullopt;
    for (int sign : {1, -1}) {
        Rational s2 = (x.re() + sign * *n) / 2;
        auto s = rational_sqrt(s2);
        if (!s) continue;
        if (*s != 0) {
            Rational u = x.im() / (2 * *s);
            QuadElem cand(*s, u, d);
            if (cand * cand == x.in_field(d)) return cand;
        } else {
            // x = d u^2 with no rational part.
            auto u = rational_sqrt(x.re() / Rational(d));
            if (u && x.im() == 0) return QuadElem(Rational(0), *u, d);
        }
    }
    return std::nullopt;
}

} // namespace wittconic
