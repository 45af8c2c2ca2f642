#include "wittconic/conic/tower.hpp"

#include "wittconic/errors.hpp"

namespace wittconic {

Poly inverse_mod(const Poly& c, const Poly& P)
{
    Poly g, s, t;
    extended_gcd(c % P, P, g, s, t);
    if (g.degree() != 0) throw InvalidInput("element not invertible modulo " + to_string(P));
    return (s * (Rational(1) / g.lead())) % P;
}

TowerElem::TowerElem(Poly c0, Poly c1, TowerPtr field) : field_(std::move(field))
{
    if (!field_) {
        if (c0.degree() > 0 || !c1.is_zero()) throw InvalidInput("tower element needs a field");
        c0_ = std::move(c0);
        return;
    }
    c0_ = c0 % field_->modulus;
    c1_ = field_->extended ? c1 % field_->modulus : Poly();
    if (!field_->extended && !c1.is_zero()) throw InvalidInput("Y-part in a field without extension");
}

std::vector<Rational> TowerElem::coords(const TowerField& f) const
{
    std::vector<Rational> v;
    int n = f.base_degree();
    for (int k = 0; k < n; ++k) v.push_back(c0_.coeff(k));
    if (f.extended)
        for (int k = 0; k < n; ++k) v.push_back(c1_.coeff(k));
    return v;
}

TowerElem TowerElem::from_coords(const std::vector<Rational>& v, const TowerPtr& field)
{
    int n = field->base_degree();
    std::vector<Rational> a(v.begin(), v.begin() + n), b;
    if (field->extended) b.assign(v.begin() + n, v.begin() + 2 * n);
    return TowerElem(Poly(a), Poly(b), field);
}

void TowerElem::adopt(const TowerPtr& other)
{
    if (!field_) {
        field_ = other;
    } else if (other && other != field_ &&
               (other->modulus != field_->modulus || other->radicand != field_->radicand ||
                other->extended != field_->extended)) {
        throw InvalidInput("mixing elements of different residue fields");
    }
}

TowerElem TowerElem::inverse() const
{
    if (is_zero()) throw InvalidInput("inverse of zero in residue field");
    if (!field_) return TowerElem(Rational(1) / c0_.coeff(0));
    const Poly& P = field_->modulus;
    if (c1_.is_zero()) return TowerElem(inverse_mod(c0_, P), Poly(), field_);
    Poly n = (c0_ * c0_ - c1_ * c1_ * field_->radicand) % P;
    Poly ninv = inverse_mod(n, P);
    return TowerElem(c0_ * ninv, -c1_ * ninv, field_);
}

TowerElem& TowerElem::operator+=(const TowerElem& o)
{
    adopt(o.field_);
    c0_ += o.c0_;
    c1_ += o.c1_;
    return *this;
}

TowerElem& TowerElem::operator-=(const TowerElem& o)
{
    adopt(o.field_);
    c0_ -= o.c0_;
    c1_ -= o.c1_;
    return *this;
}

TowerElem& TowerElem::operator*=(const TowerElem& o)
{
    adopt(o.field_);
    if (!field_) {
        c0_ *= o.c0_;
        return *this;
    }
    const Poly& P = field_->modulus;
    Poly n0 = c0_ * o.c0_;
    if (!c1_.is_zero() && !o.c1_.is_zero()) n0 += c1_ * o.c1_ * field_->radicand;
    Poly n1 = c0_ * o.c1_ + c1_ * o.c0_;
    c0_ = n0 % P;
    c1_ = n1 % P;
    return *this;
}

std::string to_string(const TowerElem& x)
{
    if (x.c1().is_zero()) return to_string(x.c0());
    return "(" + to_string(x.c0()) + ") + (" + to_string(x.c1()) + ")*Y";
}

} // namespace wittconic
