#include "wittconic/verify/generators.hpp"

namespace wittconic {

Quat FormGenerator::quaternion()
{
    return quat(scalar(), scalar(), scalar(), scalar(), conic_->a, conic_->b);
}

Quat FormGenerator::nonzero_quaternion()
{
    Quat q;
    do q = quaternion();
    while (q.is_zero());
    return q;
}

Quat FormGenerator::pure_quaternion()
{
    Quat q;
    do q = quat(Rational(0), scalar(), scalar(), scalar(), conic_->a, conic_->b);
    while (q.is_zero());
    return q;
}

QuadElem FormGenerator::k_element() { return k_field(*conic_).make(scalar(), scalar()); }

QuadElem FormGenerator::nonzero_k_element()
{
    QuadElem z;
    do z = k_element();
    while (z.is_zero());
    return z;
}

QuadElem FormGenerator::k_infinity_element()
{
    QuadElem z;
    do z = QuadElem(scalar(), scalar() * conic_->theta_scale, conic_->infinity_field.d);
    while (z.is_zero());
    return z;
}

template <class T, class Conj>
Matrix<T> FormGenerator::scramble(const Matrix<T>& G, Conj conj_fn, T (FormGenerator::*entry)())
{
    const size_t n = G.rows();
    Matrix<T> C = Matrix<T>::identity(n);
    for (size_t r = 0; r < n; ++r)
        for (size_t s = r + 1; s < n; ++s) C(r, s) = (this->*entry)();
    return congruence(C, G, conj_fn);
}

DHermitianForm FormGenerator::d_form(size_t n, int eps)
{
    std::vector<Quat> diag;
    for (size_t k = 0; k < n; ++k)
        diag.push_back(eps == 1 ? quat(nonzero_scalar(), 0, 0, 0, conic_->a, conic_->b) : pure_quaternion());
    return {eps, scramble(DMatrix::diagonal(diag), BarInvolution{}, &FormGenerator::quaternion)};
}

KHermitianForm FormGenerator::k_hermitian(size_t n, int eps)
{
    QuadElem i = k_field(*conic_).i();
    std::vector<QuadElem> diag;
    for (size_t k = 0; k < n; ++k) diag.push_back(eps == 1 ? QuadElem(nonzero_scalar()) : i * QuadElem(nonzero_scalar()));
    return {eps, scramble(QMatrix::diagonal(diag), BarInvolution{}, &FormGenerator::k_element)};
}

KBilinearForm FormGenerator::k_bilinear(size_t n, int eps)
{
    if (eps == 1) {
        std::vector<QuadElem> diag;
        for (size_t k = 0; k < n; ++k) diag.push_back(nonzero_k_element());
        return {1, scramble(QMatrix::diagonal(diag), IdentityInvolution{}, &FormGenerator::k_element)};
    }
    if (n % 2 != 0) throw InvalidInput("alternating forms have even rank");
    QMatrix J(n, n);
    for (size_t k = 0; k < n; k += 2) {
        QuadElem s = nonzero_k_element();
        J(k, k + 1) = s;
        J(k + 1, k) = -s;
    }
    return {-1, scramble(J, IdentityInvolution{}, &FormGenerator::k_element)};
}

std::vector<Rational> FormGenerator::q_diagonal(size_t n)
{
    std::vector<Rational> d;
    for (size_t k = 0; k < n; ++k) d.push_back(nonzero_scalar());
    return d;
}

RMatrix FormGenerator::q_form(size_t n)
{
    return scramble(RMatrix::diagonal(q_diagonal(n)), IdentityInvolution{}, &FormGenerator::scalar);
}

FFElem FormGenerator::linear_element()
{
    Rational mu, nu;
    do {
        mu = scalar();
        nu = scalar();
    } while (mu == 0 && nu == 0);
    return FFElem(scalar()) + FFElem(mu) * FFElem::x(conic_) + FFElem(nu) * FFElem::y(conic_);
}

} // namespace wittconic
