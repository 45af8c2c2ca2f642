#pragma once

#include "wittconic/conic/coherent.hpp"
#include "wittconic/forms/witt_quad.hpp"
#include "wittconic/maps/morita.hpp"

#include <vector>

namespace wittconic {

// A diagonal form over k(p), for p of degree 2 or at infinity.
struct ResidueEntry {
    ClosedPoint point;
    std::vector<QuadElem> diag;
};

// Finitely supported element of the sum over closed points; affine points
// sorted, infinity last. Points with an empty form are omitted.
struct ResidueVector {
    std::vector<ResidueEntry> entries;

    const ResidueEntry* find(const ClosedPoint& p) const;
};

// d with k(p) = Q(sqrt d) in the presentation used for residues.
Integer residue_field_modulus(const ClosedPoint& p);

// First and second residues of a diagonal form over F: entries f = pi^e u
// contribute <u(p)> when e is even (first) or odd (second).
std::vector<QuadElem> first_residue(const std::vector<FFElem>& diag, const ClosedPoint& p);
std::vector<QuadElem> first_residue(const std::vector<FFElem>& diag, const ClosedPoint& p, const FFElem& uniformizer);
std::vector<QuadElem> second_residue(const std::vector<FFElem>& diag, const ClosedPoint& p);
std::vector<QuadElem> second_residue(const std::vector<FFElem>& diag, const ClosedPoint& p,
                                     const FFElem& uniformizer);

// delta collects second residues everywhere (1/x at infinity); delta_prime
// takes the first residue at infinity instead.
ResidueVector delta(const std::vector<FFElem>& diag, const ConicPtr& conic, int degree_bound = default_degree_bound);
ResidueVector delta_prime(const std::vector<FFElem>& diag, const ConicPtr& conic,
                          int degree_bound = default_degree_bound);
ResidueVector delta(const FMatrix& G, const ConicPtr& conic, int degree_bound = default_degree_bound);
ResidueVector delta_prime(const FMatrix& G, const ConicPtr& conic, int degree_bound = default_degree_bound);

WittVerdict witt_zero_residue(const ResidueEntry& entry);

} // namespace wittconic
