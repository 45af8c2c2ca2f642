#pragma once

#include "wittconic/forms/form.hpp"

#include <vector>

namespace wittconic {

using QMatrix = Matrix<QuadElem>;

// Complete decision over Q(sqrt d) by dimension, discriminant, Hasse symbols
// at every relevant place and signatures at the real embeddings. Zero
// verdicts carry a Lagrangian when the entries pair off into planes
// <c, -c r^2>; otherwise the matching invariants are the certificate.
WittVerdict witt_zero_quadfield(const QMatrix& G, const Integer& d);
WittVerdict witt_zero_quadfield(const std::vector<QuadElem>& diag, const Integer& d);

Diagonalization<QuadElem> diagonalize_quad(const QMatrix& G);

} // namespace wittconic
