#pragma once

#include "wittconic/forms/hermitian.hpp"

#include <string>
#include <vector>

namespace wittconic {

// An eps-symmetric bilinear form over K; eps = -1 is alternating.
struct KBilinearForm {
    int eps = 1;
    QMatrix gram;
};

enum class OctagonNode { WPlusD, WMinusK, WPlusKBar, WMinusD, WPlusK, WMinusKBar };
std::string to_string(OctagonNode n);

enum class OctagonMap { Pi1, Pi2, Sigma1, Sigma2 };
std::string to_string(OctagonMap m);

// Target of a map on a node, following the cycle
// W+(D) -pi2-> W-(K) -sigma2-> W+(D) -pi1-> W+(K,bar) -sigma1-> W-(D)
// -pi2-> W+(K) -sigma2-> W-(D) -pi1-> W-(K,bar) -sigma1-> W+(D).
OctagonNode octagon_target(OctagonMap m, OctagonNode source);

// The doubled K-basis (v1, v1 j, v2, v2 j, ...) of D^n as columns.
DMatrix doubled_k_basis(size_t n, const Conic& c);

// h = f + j g read on a K-basis of the underlying D-space (columns of B).
KHermitianForm pi1(const DHermitianForm& h, const Conic& c);
KHermitianForm pi1(const DHermitianForm& h, const Conic& c, const DMatrix& kbasis);
KBilinearForm pi2(const DHermitianForm& h, const Conic& c);
KBilinearForm pi2(const DHermitianForm& h, const Conic& c, const DMatrix& kbasis);

// Closed form for a skew <q>, q = i q0 + j q1: <q1><1, -q^2>, empty if q1 = 0.
std::vector<QuadElem> pi2_rank1(const Quat& q, const Conic& c);

// Scaled base change: f -> f i and g -> ij g, each flipping eps.
DHermitianForm sigma1(const KHermitianForm& f, const Conic& c);
DHermitianForm sigma2(const KBilinearForm& g, const Conic& c);

// A symmetric Gram over Q read as a hermitian Gram over D.
DHermitianForm ext_D(const RMatrix& phi, const Conic& c);

// k(inf) -> K with (y/x)(inf) -> i.
QuadElem gamma_apply(const Conic& c, const QuadElem& g);
// <g> -> <-conj(gamma(g))>, entrywise on a diagonal.
std::vector<QuadElem> psi(const Conic& c, const std::vector<QuadElem>& diag);
// phi -> <b i> phi over (K, bar), eps = -1.
KHermitianForm theta(const RMatrix& phi, const Conic& c);

// A Lagrangian of a nondegenerate alternating Gram over K.
QMatrix symplectic_lagrangian(const QMatrix& G);

} // namespace wittconic
