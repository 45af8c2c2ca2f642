#pragma once

#include "wittconic/io/serialize.hpp"
#include "wittconic/verify/config.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wittconic {

struct CheckRecord {
    std::string suite;
    std::string name;  // "<suite>/<check>[/<index>]", unique
    Json inputs;
    bool passed = false;
    std::string result;
    Json certificate;  // null when the check carries none
    std::string error;
    std::string repro;  // set on failure
    double seconds = 0;  // reported only with timing enabled
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CheckRecord> checks;  // sorted by name

    bool passed() const;
    size_t failures() const;
    // Records whose name starts with the prefix.
    std::vector<const CheckRecord*> matching(std::string_view prefix) const;
};

// Runs the selected suites; every suite draws from its own stream derived
// from the seed, so selecting a subset does not change any input.
SuiteReport run_suites(const SuiteConfig& config);

Json report_json(const SuiteReport& report);

// Command line that reruns one suite under the same configuration.
std::string repro_command(const SuiteConfig& config, const std::string& suite);

} // namespace wittconic
