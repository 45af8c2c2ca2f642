#include "wittconic/errors.hpp"
#include "wittconic/forms/hermitian.hpp"
#include "wittconic/io/parse.hpp"
#include "wittconic/residues/nullity.hpp"
#include "wittconic/verify/generators.hpp"

#include <doctest.h>

using namespace wittconic;

namespace {

const ConicPtr& hamilton()
{
    static const ConicPtr c = make_conic(-1, -1);
    return c;
}

// Rebuild the total form from the stored terms and decide it afresh. The
// pairing search may stop at Unknown in rank 4 and up, but it must never
// contradict the certificate.
bool terms_cancel(const NullityCertificate& cert, const Conic& c)
{
    std::vector<Quat> terms = cert.affine_terms;
    if (cert.infinity_term) terms.push_back(*cert.infinity_term);
    return !witt_zero_skewhermitian_D(d_diagonal(-1, terms), c).is_nonzero();
}

bool admissible(const FFElem& f)
{
    for (const auto& [p, v] : support(f))
        if (!p.is_infinity() && (v != 1 || !p.quad)) return false;
    return true;
}

} // namespace

TEST_CASE("nullity for f = x")
{
    const Conic& c = *hamilton();
    auto cert = nullity_certify(parse_function("x", hamilton()));
    CHECK(cert.n == 1);
    REQUIRE(cert.affine_terms.size() == 1);
    CHECK(cert.affine_terms[0] == parse_quaternion("ij", c));
    REQUIRE(cert.infinity_term.has_value());
    CHECK(*cert.infinity_term == parse_quaternion("-ij", c));
    CHECK(cert.verdict.is_zero());
    CHECK(cert.isometry_ok);
    CHECK(cert.lagrangian_ok);
    CHECK(verify_nullity(cert));
    CHECK(terms_cancel(cert, c));
}

TEST_CASE("nullity for y, 1 + y and xy")
{
    const Conic& c = *hamilton();
    for (const char* text : {"y", "1 + y", "x*y"}) {
        CAPTURE(text);
        auto cert = nullity_certify(parse_function(text, hamilton()));
        CHECK(cert.verdict.is_zero());
        CHECK(verify_nullity(cert));
        CHECK(terms_cancel(cert, c));
    }
    auto xy = nullity_certify(parse_function("x*y", hamilton()));
    CHECK(xy.n == 2);
    CHECK(xy.affine_terms.size() == 2);
    CHECK_FALSE(xy.infinity_term.has_value());
}

TEST_CASE("a tampered certificate is rejected")
{
    auto cert = nullity_certify(parse_function("x*y", hamilton()));
    REQUIRE(verify_nullity(cert));
    cert.affine_terms[0] = cert.affine_terms[0] + cert.affine_terms[0];
    CHECK_FALSE(verify_nullity(cert));
}

TEST_CASE("nullity over random products of lines on three algebras")
{
    for (auto [a, b] : {std::pair{-1, -1}, {2, -5}, {-1, -3}}) {
        auto conic = make_conic(a, b);
        FormGenerator gen(conic, 91, 4);
        int tried = 0;
        for (int attempt = 0; tried < 4 && attempt < 40; ++attempt) {
            FFElem f = gen.linear_element() * gen.linear_element();
            if (attempt % 2) f = f * gen.linear_element();
            if (!admissible(f)) continue;
            ++tried;
            auto cert = nullity_certify(f);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(cert.verdict.is_zero());
            CHECK(verify_nullity(cert));
            CHECK(terms_cancel(cert, *conic));
        }
        CHECK(tried > 0);
    }
}

TEST_CASE("places of degree four are reported, not guessed")
{
    CHECK_THROWS_AS(nullity_certify(parse_function("x^2 - 2", hamilton())), UnsupportedField);
}
