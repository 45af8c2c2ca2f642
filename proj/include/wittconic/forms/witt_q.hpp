#pragma once

#include "wittconic/forms/form.hpp"

#include <array>
#include <optional>
#include <vector>

namespace wittconic {

using RMatrix = Matrix<Rational>;

Diagonalization<Rational> diagonalize_q(const RMatrix& G);

// Classical invariants of a diagonal form over Q.
int signature(const std::vector<Rational>& diag);
// (-1)^{n(n-1)/2} * prod c_i, reduced to its squarefree class.
Integer signed_discriminant_class(const std::vector<Rational>& diag);
// prod_{i<j} (c_i, c_j)_v.
int hasse_invariant(const std::vector<Rational>& diag, const Integer& place);
// Hasse invariant of the sum of m hyperbolic planes: (-1,-1)_v^{m(m-1)/2}.
int hyperbolic_hasse(size_t m, const Integer& place);

bool is_local_square(const Rational& x, const Integer& place);
bool is_isotropic_local(const std::vector<Rational>& diag, const Integer& place);
bool is_isotropic_q(const std::vector<Rational>& diag);

// Nontrivial rational zero of a x^2 + b y^2 + c z^2 by Legendre descent;
// nullopt exactly when the form is anisotropic.
std::optional<std::array<Rational, 3>> solve_ternary(const Rational& a, const Rational& b, const Rational& c);

// Isotropic vector of a diagonal form, or nullopt if none was found.
std::optional<std::vector<Rational>> find_isotropic(const std::vector<Rational>& diag);
// v with sum c_i v_i^2 = t.
std::optional<std::vector<Rational>> represent(const std::vector<Rational>& diag, const Rational& t);

// Lagrangian (basis columns) of a Witt-zero symmetric Gram matrix over Q:
// diagonal entries are paired into planes first and only a small remainder
// is searched. nullopt when the search gives up.
std::optional<RMatrix> lagrangian_q(const RMatrix& G);

// Complete decision by Hasse-Minkowski; Zero verdicts carry a Lagrangian
// whenever the constructive search succeeds.
WittVerdict witt_zero_q(const RMatrix& G);
WittVerdict witt_zero_q(const std::vector<Rational>& diag);

} // namespace wittconic
