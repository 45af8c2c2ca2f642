#pragma once

#include "wittconic/residues/transfer.hpp"

#include <optional>
#include <vector>

namespace wittconic {

// Evidence that sum_p t_p(d2_p <f>) = 0 in W-(D) for square-free f in O_af
// whose affine support consists of degree-2 points.
struct NullityCertificate {
    FFElem f;
    int n = 0;  // -v_inf(f)
    std::vector<ClosedPoint> points;
    std::vector<QuadElem> residues;  // (f / pi_p)(p)
    std::vector<Quat> affine_terms;  // t_p of the residues
    // Odd n: t_inf of the residue u = (f x^{-n})(inf), and the form's own
    // term t_inf<(x^n / f)(inf)> with d, conj(d) closed_form_term d = infinity_term.
    std::optional<Quat> infinity_term;
    std::optional<Quat> closed_form_term;
    std::optional<Quat> infinity_witness;

    DMatrix h_form;      // (S_D)_*(H) on e x^a
    DMatrix phi;         // Phi_T on that basis, in the D-bases e_p
    DMatrix total_gram;  // diag(affine_terms) + infinity_term
    DMatrix lagrangian;  // of total_gram

    bool isometry_ok = false;
    bool lagrangian_ok = false;
    bool rank1_ok = true;  // odd n only
    WittVerdict verdict;
};

NullityCertificate nullity_certify(const FFElem& f, int degree_bound = default_degree_bound);

// Re-checks every claim of the certificate from its stored data.
bool verify_nullity(const NullityCertificate& cert);

} // namespace wittconic
