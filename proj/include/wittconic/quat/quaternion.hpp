#pragma once

#include "wittconic/arith/linalg.hpp"
#include "wittconic/errors.hpp"

#include <array>
#include <string>
#include <type_traits>

namespace wittconic {

// w0 + w1 i + w2 j + w3 ij in (a, b) tensored with a commutative scalar
// ring S, i^2 = a, j^2 = b, ji = -ij. A quaternion built from a bare scalar
// carries a = b = 0 and adopts the table of the first quaternion it meets.
template <class S>
class Quaternion {
public:
    Quaternion() : w_{zero(), zero(), zero(), zero()} {}
    Quaternion(const S& s) : w_{s, zero(), zero(), zero()} {}  // NOLINT
    Quaternion(const Rational& r) requires(!std::is_same_v<S, Rational>)  // NOLINT
        : w_{S(r), zero(), zero(), zero()}
    {
    }
    Quaternion(S w0, S w1, S w2, S w3, Rational a, Rational b)
        : w_{std::move(w0), std::move(w1), std::move(w2), std::move(w3)}, a_(std::move(a)), b_(std::move(b))
    {
    }
    static Quaternion basis(int k, const Rational& a, const Rational& b)
    {
        Quaternion q(zero(), zero(), zero(), zero(), a, b);
        q.w_[k] = S(Rational(1));
        return q;
    }

    const S& operator[](int k) const { return w_[k]; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool bound() const { return a_ != 0; }

    bool is_zero() const
    {
        using wittconic::is_zero;
        return is_zero(w_[0]) && is_zero(w_[1]) && is_zero(w_[2]) && is_zero(w_[3]);
    }
    bool is_pure() const
    {
        using wittconic::is_zero;
        return is_zero(w_[0]);
    }

    Quaternion conj() const { return Quaternion(w_[0], -w_[1], -w_[2], -w_[3], a_, b_); }
    S trd() const { return w_[0] + w_[0]; }
    S nrd() const
    {
        return w_[0] * w_[0] - S(a_) * w_[1] * w_[1] - S(b_) * w_[2] * w_[2] + S(a_ * b_) * w_[3] * w_[3];
    }
    Quaternion inverse() const
    {
        using wittconic::inverse;
        S n = nrd();
        if (wittconic_is_zero(n)) throw InvalidInput("quaternion with zero reduced norm has no inverse");
        S ninv = inverse(n);
        Quaternion c = conj();
        for (auto& x : c.w_) x = x * ninv;
        return c;
    }

    // Entrywise image under a ring map of the scalars.
    template <class F>
    auto map(F f) const -> Quaternion<decltype(f(std::declval<const S&>()))>
    {
        using T = decltype(f(std::declval<const S&>()));
        return Quaternion<T>(f(w_[0]), f(w_[1]), f(w_[2]), f(w_[3]), a_, b_);
    }

    Quaternion operator-() const { return Quaternion(-w_[0], -w_[1], -w_[2], -w_[3], a_, b_); }
    Quaternion& operator+=(const Quaternion& o)
    {
        adopt(o);
        for (int k = 0; k < 4; ++k) w_[k] += o.w_[k];
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o)
    {
        adopt(o);
        for (int k = 0; k < 4; ++k) w_[k] -= o.w_[k];
        return *this;
    }
    Quaternion& operator*=(const Quaternion& o)
    {
        adopt(o);
        const auto& x = w_;
        const auto& y = o.w_;
        S A(a_), B(b_), AB(a_ * b_);
        std::array<S, 4> z{
            x[0] * y[0] + A * x[1] * y[1] + B * x[2] * y[2] - AB * x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] - B * x[2] * y[3] + B * x[3] * y[2],
            x[0] * y[2] + x[2] * y[0] + A * x[1] * y[3] - A * x[3] * y[1],
            x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1],
        };
        w_ = std::move(z);
        return *this;
    }
    Quaternion& operator/=(const Quaternion& o) { return *this *= o.inverse(); }

    friend Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
    friend Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
    friend Quaternion operator*(Quaternion p, const Quaternion& q) { return p *= q; }
    friend bool operator==(const Quaternion& p, const Quaternion& q) { return p.w_ == q.w_; }
    friend bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }

private:
    static S zero() { return S(Rational(0)); }
    static bool wittconic_is_zero(const S& s)
    {
        using wittconic::is_zero;
        return is_zero(s);
    }
    void adopt(const Quaternion& o)
    {
        if (!bound()) {
            a_ = o.a_;
            b_ = o.b_;
        } else if (o.bound() && (o.a_ != a_ || o.b_ != b_)) {
            throw InvalidInput("mixing quaternions of different algebras");
        }
    }

    std::array<S, 4> w_;
    Rational a_ = 0, b_ = 0;
};

template <class S>
bool is_zero(const Quaternion<S>& q)
{
    return q.is_zero();
}
template <class S>
Quaternion<S> inverse(const Quaternion<S>& q)
{
    return q.inverse();
}
template <class S>
Quaternion<S> conj(const Quaternion<S>& q)
{
    return q.conj();
}

// The quaternion algebra D = (a, b) over Q.
using Quat = Quaternion<Rational>;

inline Quat quat(const Rational& w0, const Rational& w1, const Rational& w2, const Rational& w3, const Rational& a,
                 const Rational& b)
{
    return Quat(w0, w1, w2, w3, a, b);
}

template <class S, class ToString>
std::string quaternion_to_string(const Quaternion<S>& q, ToString str)
{
    static const char* names[4] = {"", "i", "j", "ij"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        using wittconic::is_zero;
        if (is_zero(q[k])) continue;
        std::string c = str(q[k]);
        std::string term = k == 0 ? c : (c == "1" ? std::string(names[k]) : "(" + c + ")*" + names[k]);
        out += out.empty() ? term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

inline std::string to_string(const Quat& q)
{
    return quaternion_to_string(q, [](const Rational& r) { return to_string(r); });
}

} // namespace wittconic
