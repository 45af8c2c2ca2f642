#pragma once

#include "wittconic/arith/polynomial.hpp"

#include <utility>
#include <vector>

namespace wittconic {

struct FactorizationQ {
    Rational unit;
    // Monic irreducible factors with multiplicities, ordered by compare().
    std::vector<std::pair<Poly, int>> factors;

    Poly expand() const;
};

inline constexpr int default_degree_bound = 8;

// Complete factorization over Q. Rational roots are split off first; a
// remaining squarefree part of degree above degree_bound raises DegreeBound.
FactorizationQ poly_factor_q(const Poly& p, int degree_bound = default_degree_bound);

// Yun's algorithm: entry k is the product of the irreducible factors of
// multiplicity k + 1 (monic).
std::vector<Poly> squarefree_decomposition(const Poly& p);

bool is_irreducible_q(const Poly& p, int degree_bound = default_degree_bound);

} // namespace wittconic
