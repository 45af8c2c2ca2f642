#pragma once

#include "wittconic/residues/nullity.hpp"
#include "wittconic/residues/surjectivity.hpp"

#include <json.hpp>

namespace wittconic {

using Json = nlohmann::json;

// Exact scalars are strings ("p/q"); k(p)-values carry their modulus d.
Json to_json(const Rational& r);
Json to_json(const QuadElem& z);
Json to_json(const Quat& q);
Json to_json(const FFElem& f);
Json to_json(const ClosedPoint& p);
Json to_json(const WittVerdict& v);
Json to_json(const ResidueVector& v);
Json to_json(const NullityCertificate& c);
Json to_json(const SurjectivityWitness& w);
Json to_json(const DeltaLift& l);

template <class T>
Json to_json(const Matrix<T>& M)
{
    Json rows = Json::array();
    for (size_t r = 0; r < M.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < M.cols(); ++c) row.push_back(to_json(M(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
Json to_json(const std::vector<T>& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

// Two-space indentation and a trailing newline; keys are sorted, so equal
// reports are byte-identical.
std::string dump(const Json& j);

} // namespace wittconic
