#pragma once

#include "wittconic/forms/hermitian.hpp"

#include <vector>

namespace wittconic {

using FMatrix = Matrix<FFElem>;

// rho on <q>: the form (t, t') -> c with conj(t) q t' = e c on the F-basis
// (je, ije) of D_F e, i.e. t' -> conj(d t) t' for d = -q.
FMatrix rho_rank1(const Quat& q, const ConicPtr& conic);

// Orthogonal sum of rho over a diagonalization of h; rank 2 * rank(h).
FMatrix rho(const DHermitianForm& h, const ConicPtr& conic);

// Same Gram diagonalized over F.
Diagonalization<FFElem> diagonalize_f(const FMatrix& G);

} // namespace wittconic
