#include "wittconic/residues/residue.hpp"

#include <algorithm>

namespace wittconic {

const ResidueEntry* ResidueVector::find(const ClosedPoint& p) const
{
    for (auto& e : entries)
        if (e.point == p) return &e;
    return nullptr;
}

Integer residue_field_modulus(const ClosedPoint& p)
{
    if (p.is_infinity()) return p.conic->infinity_field.d;
    if (!p.quad) throw UnsupportedField("residue field of " + p.label() + " has degree " + std::to_string(p.degree));
    return p.quad->d;
}

namespace {

std::vector<QuadElem> collect(const std::vector<FFElem>& diag, const ClosedPoint& p, const FFElem* uniformizer,
                              int parity)
{
    std::vector<QuadElem> out;
    for (auto& f : diag) {
        UnitPart u = uniformizer ? unit_part(f, p, *uniformizer) : unit_part(f, p);
        if (((u.valuation % 2) + 2) % 2 == parity) out.push_back(u.value);
    }
    return out;
}

std::vector<ClosedPoint> joint_support(const std::vector<FFElem>& diag, int degree_bound)
{
    std::vector<ClosedPoint> pts;
    for (auto& f : diag)
        for (auto& [p, v] : support(f, degree_bound))
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    return pts;
}

ResidueVector residues(const std::vector<FFElem>& diag, const ConicPtr& conic, int degree_bound,
                       bool first_at_infinity)
{
    ResidueVector out;
    for (auto& p : joint_support(diag, degree_bound)) {
        if (p.is_infinity() && first_at_infinity) continue;
        auto r = second_residue(diag, p);
        if (!r.empty()) out.entries.push_back({p, std::move(r)});
    }
    if (first_at_infinity) {
        ClosedPoint inf = infinity_point(conic);
        auto r = first_residue(diag, inf);
        if (!r.empty()) out.entries.push_back({inf, std::move(r)});
    }
    return out;
}

} // namespace

std::vector<QuadElem> first_residue(const std::vector<FFElem>& diag, const ClosedPoint& p)
{
    return collect(diag, p, nullptr, 0);
}

std::vector<QuadElem> first_residue(const std::vector<FFElem>& diag, const ClosedPoint& p, const FFElem& uniformizer)
{
    return collect(diag, p, &uniformizer, 0);
}

std::vector<QuadElem> second_residue(const std::vector<FFElem>& diag, const ClosedPoint& p)
{
    return collect(diag, p, nullptr, 1);
}

std::vector<QuadElem> second_residue(const std::vector<FFElem>& diag, const ClosedPoint& p, const FFElem& uniformizer)
{
    return collect(diag, p, &uniformizer, 1);
}

ResidueVector delta(const std::vector<FFElem>& diag, const ConicPtr& conic, int degree_bound)
{
    return residues(diag, conic, degree_bound, false);
}

ResidueVector delta_prime(const std::vector<FFElem>& diag, const ConicPtr& conic, int degree_bound)
{
    return residues(diag, conic, degree_bound, true);
}

ResidueVector delta(const FMatrix& G, const ConicPtr& conic, int degree_bound)
{
    return delta(diagonalize_f(G).entries, conic, degree_bound);
}

ResidueVector delta_prime(const FMatrix& G, const ConicPtr& conic, int degree_bound)
{
    return delta_prime(diagonalize_f(G).entries, conic, degree_bound);
}

WittVerdict witt_zero_residue(const ResidueEntry& entry)
{
    return witt_zero_quadfield(entry.diag, residue_field_modulus(entry.point));
}

} // namespace wittconic
