#include "wittconic/io/serialize.hpp"

namespace wittconic {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QuadElem& z) { return Json{{"re", to_string(z.re())}, {"im", to_string(z.im())}, {"d", z.modulus().get_str()}}; }

Json to_json(const Quat& q) { return Json::array({to_string(q[0]), to_string(q[1]), to_string(q[2]), to_string(q[3])}); }

Json to_json(const FFElem& f) { return to_string(f); }

Json to_json(const ClosedPoint& p)
{
    Json j{{"label", p.label()}, {"degree", p.degree}};
    switch (p.kind) {
    case ClosedPoint::Kind::Infinity: j["kind"] = "infinity"; break;
    case ClosedPoint::Kind::Inert: j["kind"] = "inert"; break;
    case ClosedPoint::Kind::Split: j["kind"] = "split"; break;
    case ClosedPoint::Kind::Ramified: j["kind"] = "ramified"; break;
    }
    if (!p.is_infinity()) {
        j["place"] = to_string(p.place);
        j["pi"] = to_string(p.uniformizer());
    }
    if (p.quad) {
        j["residue_modulus"] = p.quad->d.get_str();
        if (!p.is_infinity()) {
            j["x"] = to_json(p.quad->x);
            j["y"] = to_json(p.quad->y);
        }
    }
    return j;
}

Json to_json(const WittVerdict& v)
{
    Json j{{"verdict", to_string(v.tag)}, {"invariant", v.invariant}, {"value", v.value}};
    std::visit(
        [&](const auto& L) {
            if constexpr (!std::is_same_v<std::decay_t<decltype(L)>, std::monostate>) j["lagrangian"] = to_json(L);
        },
        v.lagrangian);
    return j;
}

Json to_json(const ResidueVector& v)
{
    Json out = Json::array();
    for (const auto& e : v.entries) out.push_back(Json{{"point", to_json(e.point)}, {"form", to_json(e.diag)}});
    return out;
}

Json to_json(const NullityCertificate& c)
{
    Json terms = Json::array();
    for (size_t k = 0; k < c.points.size(); ++k)
        terms.push_back(Json{{"point", to_json(c.points[k])},
                             {"residue", to_json(c.residues[k])},
                             {"transfer", to_json(c.affine_terms[k])}});
    Json j{{"f", to_json(c.f)},
           {"n", c.n},
           {"affine_terms", terms},
           {"h_form", to_json(c.h_form)},
           {"phi", to_json(c.phi)},
           {"total_gram", to_json(c.total_gram)},
           {"lagrangian", to_json(c.lagrangian)},
           {"checks", Json{{"isometry", c.isometry_ok}, {"lagrangian", c.lagrangian_ok}, {"rank1_identity", c.rank1_ok}}},
           {"verdict", to_json(c.verdict)}};
    if (c.infinity_term) {
        j["infinity"] = Json{{"transfer", to_json(*c.infinity_term)},
                             {"closed_form", to_json(*c.closed_form_term)},
                             {"isometry", to_json(*c.infinity_witness)}};
    }
    return j;
}

Json to_json(const SurjectivityWitness& w)
{
    return Json{{"q", to_json(w.q)},
                {"line", Json::array({to_string(w.alpha1), to_string(w.alpha2), to_string(w.alpha3)})},
                {"point", to_json(w.point)},
                {"functional", to_json(w.functional)},
                {"f", to_json(w.f)},
                {"verified", w.verified}};
}

Json to_json(const DeltaLift& l)
{
    return Json{{"lambda", to_json(l.lambda)},
                {"u", to_json(l.u)},
                {"c", to_json(l.c)},
                {"f", to_json(l.f)},
                {"form", to_json(l.form)},
                {"target", to_json(l.target)},
                {"image", to_json(l.image)},
                {"auxiliary", to_json(l.auxiliary)},
                {"verified", l.verified}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace wittconic
