#include "wittconic/arith/polynomial.hpp"

#include "wittconic/errors.hpp"

#include <algorithm>

namespace wittconic {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int k) const
{
    if (k < 0 || k > degree()) return Rational(0);
    return c_[k];
}

const Rational& Poly::lead() const
{
    if (c_.empty()) throw InvalidInput("lead of zero polynomial");
    return c_.back();
}

Poly Poly::monic() const
{
    if (is_zero()) return *this;
    Poly r = *this;
    r *= Rational(1) / lead();
    return r;
}

Rational Poly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
    return acc;
}

Poly Poly::derivative() const
{
    std::vector<Rational> v;
    for (int k = 1; k <= degree(); ++k) v.push_back(c_[k] * k);
    return Poly(std::move(v));
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(v);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den)
{
    if (den.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<Rational> r = num.coeffs();
    int dn = den.degree();
    int qd = num.degree() - dn;
    if (qd < 0) return {Poly(), num};
    std::vector<Rational> q(qd + 1);
    Rational inv = Rational(1) / den.lead();
    for (int k = qd; k >= 0; --k) {
        Rational c = r[k + dn] * inv;
        q[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dn; ++j) r[k + j] -= c * den.coeffs()[j];
    }
    r.resize(dn);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& num, const Poly& den)
{
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw InvalidInput("inexact polynomial division");
    return q;
}

bool divides(const Poly& d, const Poly& n) { return (n % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

void extended_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t)
{
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1;
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        g = Poly();
        s = Poly();
        t = Poly();
        return;
    }
    Rational inv = Rational(1) / r0.lead();
    g = r0 * inv;
    s = s0 * inv;
    t = t0 * inv;
}

Poly power(const Poly& p, unsigned e)
{
    Poly r = Poly::constant(1), b = p;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

int compare(const Poly& a, const Poly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int k = 0; k <= a.degree(); ++k) {
        int c = cmp(a.coeffs()[k], b.coeffs()[k]);
        if (c) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::vector<Integer> primitive_integer_coeffs(const Poly& p, Rational& scale)
{
    Integer den = 1;
    for (auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> v;
    Integer g = 0;
    for (auto& c : p.coeffs()) {
        Integer n = c.get_num() * (den / c.get_den());
        v.push_back(n);
        g = gcd(g, n);
    }
    if (g == 0) g = 1;
    if (!v.empty() && v.back() < 0) g = -g;
    for (auto& n : v) n /= g;
    scale = Rational(g, den);
    scale.canonicalize();
    return v;
}

std::string to_string(const Poly& p, std::string_view var)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational m = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        if (k >= 1) mono = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
        if (k == 0)
            out += to_string(m);
        else if (m == 1)
            out += mono;
        else
            out += to_string(m) + "*" + mono;
    }
    return out;
}

} // namespace wittconic
