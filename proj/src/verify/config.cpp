#include "wittconic/verify/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace wittconic {

Budget Budget::uniform(int trials)
{
    Budget b;
    b.fiber_trials = b.coherence = b.surjectivity = b.reciprocity = b.ext_d_targets = b.ext_sequence = trials;
    b.diagram_generators = b.tinfty = b.oracle_forms = b.lifts = b.morita = trials;
    return b;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"algebraic-identities", "residue-basics", "coherence",
                                                "octagon",              "ext-sequence",   "residue-sequence",
                                                "nullity",              "surjectivity",   "morita"};
    return names;
}

bool SuiteConfig::selected(const std::string& suite) const
{
    return suites.empty() || std::find(suites.begin(), suites.end(), suite) != suites.end();
}

namespace {

std::string trim(const std::string& s)
{
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long parse_count(const std::string& key, const std::string& value)
{
    try {
        size_t used = 0;
        long v = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("config: " + key + " must be an integer, got '" + value + "'");
    }
}

} // namespace

SuiteConfig parse_config(const std::string& text)
{
    SuiteConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw InvalidInput("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "a")
            cfg.a = parse_rational(value);
        else if (key == "b")
            cfg.b = parse_rational(value);
        else if (key == "seed") {
            auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), cfg.seed);
            if (ec != std::errc{} || end != value.data() + value.size())
                throw InvalidInput("config: seed must be a nonnegative integer");
        } else if (key == "trials")
            cfg.trials = static_cast<int>(parse_count(key, value));
        else if (key == "height")
            cfg.height = parse_count(key, value);
        else if (key == "degree_bound")
            cfg.degree_bound = static_cast<int>(parse_count(key, value));
        else if (key == "timing") {
            if (value != "true" && value != "false" && value != "1" && value != "0")
                throw InvalidInput("config: timing must be true or false");
            cfg.timing = value == "true" || value == "1";
        }
        else if (key == "suites") {
            cfg.suites.clear();
            std::istringstream names(value);
            std::string name;
            while (std::getline(names, name, ','))
                if (!trim(name).empty()) cfg.suites.push_back(trim(name));
        } else
            throw InvalidInput("config: unknown key '" + key + "'");
    }
    return cfg;
}

SuiteConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

ConicPtr validate(const SuiteConfig& config)
{
    if (config.trials < 0 || config.height <= 0 || config.degree_bound <= 0)
        throw InvalidInput("config: trials must be nonnegative, height and degree_bound positive");
    for (const auto& s : config.suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw InvalidInput("config: unknown suite '" + s + "'");
    return make_conic(config.a, config.b);
}

} // namespace wittconic
