#include "wittconic/errors.hpp"
#include "wittconic/verify/suites.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wittconic;

TEST_CASE("config parsing")
{
    SuiteConfig d = parse_config("");
    CHECK(d.a == -1);
    CHECK(d.b == -1);
    CHECK(d.seed == 0);
    CHECK(d.suites.empty());
    CHECK_FALSE(d.timing);

    SuiteConfig c = parse_config("# comment\na = 2\nb = -5  # trailing\nseed = 17\nsuites = nullity, octagon\n"
                                 "trials = 3\ntiming = true\n");
    CHECK(c.a == 2);
    CHECK(c.b == -5);
    CHECK(c.seed == 17);
    CHECK(c.suites == std::vector<std::string>{"nullity", "octagon"});
    CHECK(c.selected("octagon"));
    CHECK_FALSE(c.selected("fiber"));
    CHECK(c.timing);
    CHECK(c.budget().surjectivity == 3);

    CHECK(parse_config("a = 1/3").a == Rational(1) / 3);
    CHECK_THROWS_AS(parse_config("colour = red"), InvalidInput);
    CHECK_THROWS_AS(parse_config("a"), InvalidInput);
    CHECK_THROWS_AS(parse_config("seed = -4"), InvalidInput);
    CHECK_THROWS_AS(parse_config("timing = maybe"), InvalidInput);
}

TEST_CASE("validation")
{
    SuiteConfig c;
    CHECK_NOTHROW(validate(c));
    c.a = 1;
    c.b = 1;
    CHECK_THROWS_AS(validate(c), SplitAlgebra);
    SuiteConfig bad_suite;
    bad_suite.suites = {"no-such-suite"};
    CHECK_THROWS_AS(validate(bad_suite), InvalidInput);
    SuiteConfig zero_a;
    zero_a.a = 0;
    CHECK_THROWS(validate(zero_a));
    for (const auto& name : suite_names()) CHECK(SuiteConfig{}.selected(name));
}

TEST_CASE("reports are deterministic and subsets do not shift inputs")
{
    SuiteConfig c;
    c.seed = 5;
    c.trials = 2;
    c.suites = {"nullity", "surjectivity"};
    SuiteReport first = run_suites(c), second = run_suites(c);
    CHECK(report_json(first).dump() == report_json(second).dump());
    CHECK(first.passed());
    CHECK(first.failures() == 0);
    CHECK(std::is_sorted(first.checks.begin(), first.checks.end(),
                         [](const CheckRecord& l, const CheckRecord& r) { return l.name < r.name; }));

    SuiteConfig alone = c;
    alone.suites = {"surjectivity"};
    SuiteReport sub = run_suites(alone);
    auto lhs = first.matching("surjectivity/"), rhs = sub.matching("surjectivity/");
    REQUIRE(lhs.size() == rhs.size());
    for (size_t k = 0; k < lhs.size(); ++k) CHECK(lhs[k]->inputs == rhs[k]->inputs);
}

TEST_CASE("nullity checks carry Zero certificates")
{
    SuiteConfig c;
    c.suites = {"nullity"};
    c.trials = 1;
    SuiteReport r = run_suites(c);
    auto certs = r.matching("nullity/certificate");
    REQUIRE(certs.size() >= 4);
    for (const auto* rec : certs) {
        CHECK(rec->passed);
        CHECK_FALSE(rec->certificate.is_null());
        CHECK(rec->result.find("Zero") != std::string::npos);
    }
}

TEST_CASE("reproduction commands")
{
    SuiteConfig c;
    c.a = 2;
    c.b = -5;
    c.seed = 9;
    std::string cmd = repro_command(c, "octagon");
    CHECK(cmd.rfind("wittconic verify", 0) == 0);
    for (const char* part : {"--a=2", "--b=-5", "--seed 9", "--suite octagon"}) {
        CAPTURE(part);
        CHECK(cmd.find(part) != std::string::npos);
    }
}
