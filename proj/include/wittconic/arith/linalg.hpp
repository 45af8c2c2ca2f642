#pragma once

#include "wittconic/arith/rational.hpp"
#include "wittconic/errors.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace wittconic {

inline bool is_zero(const Rational& x) { return x == 0; }
inline Rational inverse(const Rational& x)
{
    if (x == 0) throw InvalidInput("inverse of zero");
    return Rational(1) / x;
}

// Dense row-major matrix over a (possibly noncommutative) ring. Products
// keep the factor order, so the same code serves D-valued Gram matrices.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const T& fill = T(Rational(0)))
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }
    static Matrix identity(size_t n)
    {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(Rational(1));
        return m;
    }
    static Matrix diagonal(const std::vector<T>& d)
    {
        Matrix m(d.size(), d.size());
        for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    static Matrix column(const std::vector<T>& v)
    {
        Matrix m(v.size(), 1);
        for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> col(size_t j) const
    {
        std::vector<T> v;
        for (size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    std::vector<T> diagonal_entries() const
    {
        std::vector<T> v;
        for (size_t i = 0; i < rows_ && i < cols_; ++i) v.push_back((*this)(i, i));
        return v;
    }

    // Entrywise image, e.g. an involution or a scalar extension.
    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))>
    {
        Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    Matrix transpose() const
    {
        Matrix out(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw InvalidInput("matrix shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < b.cols_; ++j) {
                T acc(Rational(0));
                for (size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
                out(i, j) = acc;
            }
        return out;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        Matrix out = a;
        for (size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero_matrix() const
    {
        for (auto& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

// conj(P)^T * G * P for an involution conj on the entries.
template <class T, class Inv>
Matrix<T> congruence(const Matrix<T>& P, const Matrix<T>& G, Inv conj_fn)
{
    return P.map(conj_fn).transpose() * G * P;
}

// Block-diagonal sum.
template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

// Right column rank over a division ring: columns c_k are independent when
// sum c_k * d_k = 0 forces all d_k = 0.
template <class T>
size_t column_rank(Matrix<T> m)
{
    size_t rank = 0;
    std::vector<bool> used(m.rows(), false);
    for (size_t c = 0; c < m.cols(); ++c) {
        size_t pivot = m.rows();
        for (size_t r = 0; r < m.rows(); ++r)
            if (!used[r] && !is_zero(m(r, c))) {
                pivot = r;
                break;
            }
        if (pivot == m.rows()) continue;
        used[pivot] = true;
        ++rank;
        T inv = inverse(m(pivot, c));
        for (size_t r = 0; r < m.rows(); ++r) m(r, c) = m(r, c) * inv;
        for (size_t c2 = c + 1; c2 < m.cols(); ++c2) {
            T f = m(pivot, c2);
            if (is_zero(f)) continue;
            for (size_t r = 0; r < m.rows(); ++r) m(r, c2) -= m(r, c) * f;
        }
    }
    return rank;
}

// Rational linear systems.
using RVec = std::vector<Rational>;

// One solution of A x = b (free variables set to zero), if any.
std::optional<RVec> solve_linear(const Matrix<Rational>& A, const RVec& b);
// Basis of the right kernel of A.
std::vector<RVec> nullspace(const Matrix<Rational>& A);
size_t rank(const Matrix<Rational>& A);
Rational determinant(const Matrix<Rational>& A);
std::optional<Matrix<Rational>> invert(const Matrix<Rational>& A);

} // namespace wittconic
