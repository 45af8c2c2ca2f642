#pragma once

#include "wittconic/conic/conic.hpp"
#include "wittconic/forms/witt_q.hpp"
#include "wittconic/forms/witt_quad.hpp"
#include "wittconic/quat/ideal.hpp"

#include <optional>
#include <vector>

namespace wittconic {

using DMatrix = Matrix<Quat>;

// An eps-hermitian form over (K, bar) or (D, bar); gram^{conj T} = eps gram.
struct KHermitianForm {
    int eps = 1;
    QMatrix gram;
};
struct DHermitianForm {
    int eps = 1;
    DMatrix gram;
};

KHermitianForm k_diagonal(int eps, const std::vector<QuadElem>& entries);
DHermitianForm d_diagonal(int eps, const std::vector<Quat>& entries);

Diagonalization<QuadElem> diagonalize(const KHermitianForm& h, const Conic& c);
Diagonalization<Quat> diagonalize(const DHermitianForm& h, const Conic& c);

// v -> h(v, v) on the Q-restriction: Gram (Q-part of conj(x) h_kl y) on the
// basis e_k x, x in {1, i}; <c> gives <c, -ac>.
RMatrix s_K_trace_form(const KHermitianForm& h, const Conic& c);
// Same with the scalar part of conj(x) h_kl y, x in {1, i, j, ij};
// <c> gives <c><1, -a, -b, ab>.
RMatrix s_D_trace_form(const DHermitianForm& h, const Conic& c);

// W(K, bar) for either eps; eps = -1 is first multiplied by i.
WittVerdict witt_zero_hermitian_K(const KHermitianForm& h, const Conic& c);
// Complete through the injective s_D.
WittVerdict witt_zero_hermitian_D(const DHermitianForm& h, const Conic& c);

// Whether <q1, q2> (pure q's) is hyperbolic: it is iff conj(d) q1 d = -q2
// for some d in D; decided through a norm equation. Returns d on success.
struct Rank2Decision {
    WittVerdict verdict;
    std::optional<Quat> d;
};
Rank2Decision decide_rank2_skew(const Quat& q1, const Quat& q2, const Conic& c);

// Sound but incomplete: odd rank is NonZero, rank 2 is decided exactly,
// larger ranks are paired into hyperbolic planes; otherwise Unknown.
// A candidate Lagrangian may be supplied and is checked first.
WittVerdict witt_zero_skewhermitian_D(const DHermitianForm& h, const Conic& c,
                                      const std::optional<DMatrix>& hint = std::nullopt);

// Same Gram read over a larger field.
template <class T>
Matrix<T> scalar_extension(const RMatrix& G)
{
    return G.map([](const Rational& r) { return T(r); });
}

// Norm form <1, -a, -b, ab>.
std::vector<Rational> norm_form(const Conic& c);

} // namespace wittconic
