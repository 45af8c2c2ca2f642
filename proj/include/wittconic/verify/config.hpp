#pragma once

#include "wittconic/conic/conic.hpp"
#include "wittconic/arith/factor.hpp"
#include "wittconic/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wittconic {

// Sample sizes per property. Zero trials in the config keeps these defaults.
struct Budget {
    int fiber_points = 5;
    int fiber_trials = 100;
    int coherence = 20;
    int surjectivity = 50;
    int reciprocity = 20;
    int ext_d_targets = 10;
    int ext_sequence = 20;
    int octagon_seeds = 6;
    int diagram_points = 3;
    int diagram_generators = 10;
    int tinfty = 20;
    int oracle_forms = 100;
    int lifts = 10;
    int morita = 10;
    int random_nullity = 3;

    // Every per-property count becomes `trials`; structural counts stay.
    static Budget uniform(int trials);
};

struct SuiteConfig {
    Rational a = -1, b = -1;
    std::uint64_t seed = 0;
    int trials = 0;
    long height = 5;
    int degree_bound = default_degree_bound;
    std::vector<std::string> suites;  // empty: all
    bool timing = false;              // wall times make reports nondeterministic

    Budget budget() const { return trials > 0 ? Budget::uniform(trials) : Budget{}; }
    bool selected(const std::string& suite) const;
};

const std::vector<std::string>& suite_names();

// "key = value" lines; '#' starts a comment. Keys: a, b, seed, trials,
// height, degree_bound, suites (comma separated), timing (true/false).
SuiteConfig parse_config(const std::string& text);
SuiteConfig load_config(const std::string& path);

// Counts positive, suite names known, and (a, b) a division algebra
// (SplitAlgebra otherwise).
ConicPtr validate(const SuiteConfig& config);

} // namespace wittconic
