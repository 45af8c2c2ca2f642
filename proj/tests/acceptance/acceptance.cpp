// Runs every suite on the reference instance (-1, -1), seed 0, and prints one
// PASS/FAIL line per acceptance criterion. A criterion passes when each of its
// check groups has at least the required number of records and none failed.

#include "wittconic/verify/suites.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace wittconic;

namespace {

struct Group {
    std::string prefix;
    size_t minimum;
};

struct Criterion {
    int id;
    std::string title;
    std::vector<Group> groups;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list{
        {1, "algebraic identities",
         {{"algebraic-identities/generic-e", 1}, {"algebraic-identities/fiber-lambda-mu-lambda", 5}}},
        {2, "coherent functional",
         {{"residue-basics/coherent-functional-p0", 1},
          {"coherence/triangle", 1},
          {"coherence/uniformizer-change", 20},
          {"residue-basics/first-residue-uniformizer", 1}}},
        {3, "nullity", {{"nullity/certificate", 7}, {"nullity/terms-of-x", 1}}},
        {4, "surjectivity", {{"surjectivity/random-q", 50}}},
        {5, "residue sequence for W-(D)",
         {{"morita/delta-prime-rho", 5}, {"residue-sequence/reciprocity-into-W(D)", 20}, {"residue-sequence/ext_D-surjective", 10}}},
        {6, "scalar-extension sequence for W(Q)",
         {{"ext-sequence/delta-ext-F", 20}, {"ext-sequence/norm-form-lagrangian", 1}, {"ext-sequence/s_D-ext_D-is-n_D", 20}}},
        {7, "octagon", {{"octagon/", 8}}},
        {8, "commuting diagrams", {{"residue-sequence/t_inf-is-sigma2-psi", 20}, {"residue-sequence/pi1-t_p-is-theta-s_p", 30}}},
        {9, "decision-engine soundness", {{"algebraic-identities/decision-oracle", 100}}},
        {10, "lifting", {{"residue-sequence/lift-to-delta-image", 10}}},
    };
    return list;
}

} // namespace

int main()
{
    SuiteReport report = run_suites(SuiteConfig{});
    bool all = true;
    for (const auto& c : criteria()) {
        bool ok = true;
        std::string detail;
        for (const auto& g : c.groups) {
            auto recs = report.matching(g.prefix);
            size_t failed = 0;
            for (const auto* r : recs) failed += r->passed ? 0 : 1;
            ok = ok && recs.size() >= g.minimum && failed == 0;
            if (!detail.empty()) detail += ", ";
            detail += g.prefix + " " + std::to_string(recs.size() - failed) + "/" + std::to_string(recs.size());
            if (recs.size() < g.minimum) detail += " (needs " + std::to_string(g.minimum) + ")";
        }
        all = all && ok;
        std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), detail.c_str());
    }
    return all ? 0 : 1;
}
