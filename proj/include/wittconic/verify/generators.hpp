#pragma once

#include "wittconic/maps/octagon.hpp"
#include "wittconic/util/rng.hpp"

#include <vector>

namespace wittconic {

// Seeded random inputs for property checks. Heights bound numerators and
// denominators of every rational coordinate.
class FormGenerator {
public:
    FormGenerator(ConicPtr conic, std::uint64_t seed, long height = 5) : conic_(std::move(conic)), rng_(seed), height_(height) {}

    SplitMix64& rng() { return rng_; }
    const ConicPtr& conic() const { return conic_; }

    Rational scalar() { return rng_.rational(height_); }
    Rational nonzero_scalar() { return rng_.nonzero_rational(height_); }
    Quat quaternion();
    Quat nonzero_quaternion();
    Quat pure_quaternion();  // nonzero
    QuadElem k_element();    // in K = Q(i)
    QuadElem nonzero_k_element();
    QuadElem k_infinity_element();  // nonzero, in k(inf)

    // Diagonal of nonzero entries moved by a random unipotent change of basis,
    // so the Gram is generally not diagonal.
    DHermitianForm d_form(size_t n, int eps);
    KHermitianForm k_hermitian(size_t n, int eps);
    // eps = 1 symmetric, eps = -1 alternating (n even).
    KBilinearForm k_bilinear(size_t n, int eps);
    RMatrix q_form(size_t n);
    std::vector<Rational> q_diagonal(size_t n);

    // lambda + mu x + nu y with (mu, nu) != 0, so it has a pole at infinity.
    FFElem linear_element();

private:
    template <class T, class Conj>
    Matrix<T> scramble(const Matrix<T>& G, Conj conj_fn, T (FormGenerator::*entry)());

    ConicPtr conic_;
    SplitMix64 rng_;
    long height_;
};

} // namespace wittconic
