#pragma once

#include "wittconic/arith/polynomial.hpp"

#include <memory>
#include <vector>

namespace wittconic {

// Residue field of an affine point: L = Q[x]/(P), optionally extended by Y
// with Y^2 = radicand (mod P) when the point is inert over P.
struct TowerField {
    Poly modulus;
    bool extended = false;
    Poly radicand;

    int base_degree() const { return modulus.degree(); }
    int degree() const { return base_degree() * (extended ? 2 : 1); }
};

using TowerPtr = std::shared_ptr<const TowerField>;

// c0 + c1*Y with c0, c1 reduced modulo P. A missing field marks a rational
// constant that combines with any tower.
class TowerElem {
public:
    TowerElem() = default;
    TowerElem(const Rational& c) : c0_(Poly::constant(c)) {}  // NOLINT
    TowerElem(Poly c0, Poly c1, TowerPtr field);

    const Poly& c0() const { return c0_; }
    const Poly& c1() const { return c1_; }
    const TowerPtr& field() const { return field_; }
    bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

    // Coordinates on the basis x^k (k < deg P) followed by x^k Y.
    std::vector<Rational> coords(const TowerField& f) const;
    static TowerElem from_coords(const std::vector<Rational>& v, const TowerPtr& field);

    TowerElem inverse() const;
    // Y -> -Y; the identity on L.
    TowerElem conj() const { return TowerElem(c0_, -c1_, field_); }

    TowerElem operator-() const { return TowerElem(-c0_, -c1_, field_); }
    TowerElem& operator+=(const TowerElem& o);
    TowerElem& operator-=(const TowerElem& o);
    TowerElem& operator*=(const TowerElem& o);
    TowerElem& operator/=(const TowerElem& o) { return *this *= o.inverse(); }
    friend TowerElem operator+(TowerElem a, const TowerElem& b) { return a += b; }
    friend TowerElem operator-(TowerElem a, const TowerElem& b) { return a -= b; }
    friend TowerElem operator*(TowerElem a, const TowerElem& b) { return a *= b; }
    friend TowerElem operator/(TowerElem a, const TowerElem& b) { return a /= b; }
    friend bool operator==(const TowerElem& a, const TowerElem& b) { return a.c0_ == b.c0_ && a.c1_ == b.c1_; }
    friend bool operator!=(const TowerElem& a, const TowerElem& b) { return !(a == b); }

private:
    void adopt(const TowerPtr& other);
    Poly c0_, c1_;
    TowerPtr field_;
};

inline bool is_zero(const TowerElem& x) { return x.is_zero(); }
inline TowerElem inverse(const TowerElem& x) { return x.inverse(); }

// Inverse of c modulo an irreducible P.
Poly inverse_mod(const Poly& c, const Poly& P);

std::string to_string(const TowerElem& x);

} // namespace wittconic
