#include "wittconic/arith/linalg.hpp"

namespace wittconic {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(Matrix<Rational>& m)
{
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        size_t p = row;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Rational inv = Rational(1) / m(row, c);
        for (size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c) == 0) continue;
            Rational f = m(r, c);
            for (size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<RVec> solve_linear(const Matrix<Rational>& A, const RVec& b)
{
    Matrix<Rational> aug(A.rows(), A.cols() + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;
    RVec x(A.cols());
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, A.cols());
    return x;
}

std::vector<RVec> nullspace(const Matrix<Rational>& A)
{
    Matrix<Rational> m = A;
    auto piv = rref(m);
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<RVec> basis;
    for (size_t f = 0; f < A.cols(); ++f) {
        if (is_pivot[f]) continue;
        RVec v(A.cols());
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t rank(const Matrix<Rational>& A)
{
    Matrix<Rational> m = A;
    return rref(m).size();
}

Rational determinant(const Matrix<Rational>& A)
{
    if (A.rows() != A.cols()) throw InvalidInput("determinant of non-square matrix");
    Matrix<Rational> m = A;
    Rational det = 1;
    size_t n = m.rows();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Rational f = m(r, c) / m(c, c);
            for (size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<Matrix<Rational>> invert(const Matrix<Rational>& A)
{
    size_t n = A.rows();
    Matrix<Rational> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix<Rational> out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

} // namespace wittconic
