#include <catch2/catch_amalgamated.hpp>

#include <gottlieb/genexpr.hpp>

using namespace gottlieb;

namespace {

GenDims dims_of(const std::string& text) { return check_dims(parse_genexpr(text)); }

}  // namespace

TEST_CASE("parse and print round-trip") {
    const char* exprs[] = {
        "iota(7)",
        "eta(3)",
        "nu'(3)",
        "sg'''(5)",
        "a(1,3,4)",
        "E(om(3))",
        "cmp(eta(2),cmp(nu'(3),eta(6)))",
        "wh(iota(4),iota(4))",
        "scl(12,nu(4))",
        "gam(cmp(eta(11),sg(12)))",
        "ih(E(mu'(3)))",
        "ik(b1(8))",
    };
    for (const char* text : exprs) {
        CAPTURE(text);
        CHECK(parse_genexpr(text).str() == text);
    }
}

TEST_CASE("dimension bookkeeping") {
    GenDims d = dims_of("nu(5)");
    CHECK(d.source == 8);
    CHECK(d.target == 5);

    d = dims_of("E(om(3))");
    CHECK(d.source == 7);
    CHECK(d.target == 4);

    d = dims_of("cmp(nu(4),eta(7))");
    CHECK(d.source == 8);
    CHECK(d.target == 4);

    d = dims_of("wh(iota(5),iota(5))");
    CHECK(d.source == 9);
    CHECK(d.target == 5);

    d = dims_of("a(2,3,3)");
    CHECK(d.source == 10);
    CHECK(d.target == 3);

    d = dims_of("a(1,5,3)");
    CHECK(d.source == 10);
    CHECK(d.target == 3);

    d = dims_of("scl(8,gam(ze(11)))");
    CHECK(d.source == 22);
    CHECK(d.space == "gam");

    d = dims_of("ih(E(eps(3)))");
    CHECK(d.source == 12);
    CHECK(d.space == "ih");
}

TEST_CASE("ill-formed expressions are rejected") {
    CHECK_THROWS_AS(parse_genexpr("nu(4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_genexpr("cmp(eta(3))"), std::invalid_argument);
    CHECK_THROWS_AS(parse_genexpr(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_genexpr("mystery(4)"), std::invalid_argument);

    // parses, but the dimensions do not line up
    CHECK_THROWS_AS(dims_of("cmp(eta(3),nu(5))"), std::invalid_argument);
    CHECK_THROWS_AS(dims_of("wh(iota(4),iota(5))"), std::invalid_argument);
    CHECK_THROWS_AS(dims_of("nu'(4)"), std::invalid_argument);
    CHECK_THROWS_AS(dims_of("nu(3)"), std::invalid_argument);
    CHECK_THROWS_AS(dims_of("a(1,4,5)"), std::invalid_argument);
    CHECK_THROWS_AS(dims_of("E(gam(nu(4)))"), std::invalid_argument);
    CHECK_THROWS_AS(dims_of("ih(ik(nu(8)))"), std::invalid_argument);
}

TEST_CASE("odd-primary attribution") {
    CHECK(mentions_odd_prime(parse_genexpr("a(1,3,4)"), 3));
    CHECK_FALSE(mentions_odd_prime(parse_genexpr("a(1,3,4)"), 5));
    CHECK(mentions_odd_prime(parse_genexpr("cmp(a(1,5,3),a(1,5,10))"), 5));
    CHECK(mentions_odd_prime(parse_genexpr("ik(b1(8))"), 3));
    CHECK(mentions_odd_prime(parse_genexpr("cmp(a(1,3,3),ap3(6))"), 3));
    CHECK_FALSE(mentions_odd_prime(parse_genexpr("cmp(eta(7),mu(8))"), 3));
}
