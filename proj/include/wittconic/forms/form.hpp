#pragma once

#include "wittconic/arith/linalg.hpp"
#include "wittconic/arith/quadext.hpp"
#include "wittconic/quat/quaternion.hpp"

#include <string>
#include <variant>
#include <vector>

namespace wittconic {

// Involutions used for congruence; symmetric forms use the identity.
struct IdentityInvolution {
    template <class T>
    T operator()(const T& x) const
    {
        return x;
    }
};
struct BarInvolution {
    template <class T>
    T operator()(const T& x) const
    {
        return conj(x);
    }
};

template <class T>
struct Diagonalization {
    std::vector<T> entries;
    Matrix<T> P;  // conj(P)^T G P = diag(entries)
};

// Congruence diagonalization of an eps-hermitian Gram matrix. Pivots on the
// first nonzero diagonal entry; when none is left the lexicographically
// first nonzero off-diagonal G_st is folded in: e_s + e_t * lambda with
// lambda = G_st^{-1}/2 (eps = 1) or G_st^{-1} iota/2 (eps = -1, iota pure).
template <class T, class Conj>
Diagonalization<T> diagonalize(const Matrix<T>& G0, int eps, Conj conj_fn, const T& iota = T(Rational(0)))
{
    const size_t n = G0.rows();
    if (G0.cols() != n) throw InvalidInput("Gram matrix must be square");
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            if (T(conj_fn(G0(c, r))) != (eps == 1 ? T(G0(r, c)) : T(-G0(r, c))))
                throw InvalidInput("Gram matrix is not eps-hermitian");
    Matrix<T> G = G0;
    Matrix<T> P = Matrix<T>::identity(n);
    auto apply = [&](const Matrix<T>& C) {
        G = congruence(C, G, conj_fn);
        P = P * C;
    };
    const T half(Rational(1, 2));
    for (size_t k = 0; k < n; ++k) {
        size_t m = n;
        for (size_t r = k; r < n && m == n; ++r)
            if (!is_zero(G(r, r))) m = r;
        if (m == n) {
            size_t s = n, t = n;
            for (size_t r = k; r < n && s == n; ++r)
                for (size_t c = r + 1; c < n; ++c)
                    if (!is_zero(G(r, c))) {
                        s = r;
                        t = c;
                        break;
                    }
            if (s == n) throw DegenerateForm("degenerate Gram matrix (rank " + std::to_string(k) + ")");
            if (eps == -1 && is_zero(iota)) throw InvalidInput("skew fix-up needs a pure unit");
            T lambda = eps == 1 ? T(inverse(G(s, t)) * half) : T(inverse(G(s, t)) * iota * half);
            Matrix<T> C = Matrix<T>::identity(n);
            C(t, s) = lambda;
            apply(C);
            m = s;
        }
        if (m != k) {
            Matrix<T> C(n, n);
            for (size_t r = 0; r < n; ++r) C(r, r == k ? m : (r == m ? k : r)) = T(Rational(1));
            apply(C);
        }
        T dinv = inverse(G(k, k));
        Matrix<T> C = Matrix<T>::identity(n);
        bool touched = false;
        for (size_t l = k + 1; l < n; ++l)
            if (!is_zero(G(k, l))) {
                C(k, l) = T(-(dinv * G(k, l)));
                touched = true;
            }
        if (touched) apply(C);
    }
    Diagonalization<T> out{G.diagonal_entries(), P};
    if (congruence(P, G0, conj_fn) != Matrix<T>::diagonal(out.entries))
        throw InvalidInput("internal: diagonalization witness failed");
    return out;
}

// A Lagrangian given by its basis columns: rank n/2, totally isotropic.
template <class T, class Conj>
bool verify_lagrangian(const Matrix<T>& G, const Matrix<T>& L, Conj conj_fn)
{
    if (G.rows() % 2 != 0 || L.rows() != G.rows() || 2 * L.cols() != G.rows()) return false;
    if (column_rank(L) != L.cols()) return false;
    return congruence(L, G, conj_fn).is_zero_matrix();
}

// P invertible (full right rank) with conj(P)^T G1 P = G2.
template <class T, class Conj>
bool verify_isometry(const Matrix<T>& G1, const Matrix<T>& G2, const Matrix<T>& P, Conj conj_fn)
{
    return P.rows() == P.cols() && column_rank(P) == P.cols() && congruence(P, G1, conj_fn) == G2;
}

using LagrangianCert = std::variant<std::monostate, Matrix<Rational>, Matrix<QuadElem>, Matrix<Quat>>;

// Outcome of a Witt-class decision with the evidence behind it.
struct WittVerdict {
    enum class Tag { Zero, NonZero, Unknown };
    Tag tag = Tag::Unknown;
    // "lagrangian", "invariants", "dimension", "signature", "discriminant",
    // "hasse", "norm-equation", "search-exhausted", ...
    std::string invariant;
    std::string value;
    LagrangianCert lagrangian;

    bool is_zero() const { return tag == Tag::Zero; }
    bool is_nonzero() const { return tag == Tag::NonZero; }

    static WittVerdict zero(std::string invariant, std::string value, LagrangianCert l = {})
    {
        return {Tag::Zero, std::move(invariant), std::move(value), std::move(l)};
    }
    static WittVerdict nonzero(std::string invariant, std::string value)
    {
        return {Tag::NonZero, std::move(invariant), std::move(value), {}};
    }
    static WittVerdict unknown(std::string why) { return {Tag::Unknown, "unknown", std::move(why), {}}; }
};

std::string to_string(WittVerdict::Tag t);

} // namespace wittconic
