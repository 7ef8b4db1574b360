#include <catch2/catch_amalgamated.hpp>

#include <gottlieb/catalog.hpp>

using namespace gottlieb;

namespace {

const char* kSmall =
    "version|1\n"
    "# comment\n"
    "pi|s3|6|0|12|om(3)|[T]\n"
    "pi|s4|7|1|12|nu(4);E(om(3))|[T]\n"
    "pi|s3|14|0|2,2,84||[T]\n"
    "pip3|s3|21|0|3|cmp(a(1,3,3),a(4,3,6))|[T13.3]\n"
    "pi|kp2|11|0|24|ik(nu(8))|[T]\n";

Catalog shipped() { return Catalog::load_file(GOTTLIEB_TEST_CATALOG); }

}  // namespace

TEST_CASE("loading a small table") {
    Catalog cat = Catalog::load_text(kSmall);
    const TableEntry* e = cat.lookup("pi", "s3", 6);
    REQUIRE(e != nullptr);
    CHECK(e->group.str() == "Z_12");
    CHECK(e->citation == "[T]");
    CHECK(e->group.gens.size() == 1);

    e = cat.lookup("pi", "s4", 7);
    REQUIRE(e != nullptr);
    CHECK(e->group.free_rank == 1);
    CHECK(e->group.str() == "Z+Z_12");

    CHECK(cat.lookup("pi", "s3", 7) == nullptr);
    CHECK(cat.lookup("pip3", "s3", 21) != nullptr);
}

TEST_CASE("synthesized sphere rows") {
    Catalog cat = Catalog::load_text(kSmall);
    auto below = cat.pi_sphere(5, 3);
    REQUIRE(below.has_value());
    CHECK(below->group.str() == "0");
    CHECK(below->citation == "[conn]");

    auto diag = cat.pi_sphere(5, 5);
    REQUIRE(diag.has_value());
    CHECK(diag->group.str() == "Z");
    CHECK(diag->citation == "[deg]");

    auto circle = cat.pi_sphere(1, 5);
    REQUIRE(circle.has_value());
    CHECK(circle->group.str() == "0");

    CHECK_FALSE(cat.pi_sphere(5, 8).has_value());
}

TEST_CASE("primary components of rows") {
    Catalog cat = Catalog::load_text(kSmall);
    auto two = cat.pi_sphere_p(3, 6, 2);
    REQUIRE(two.has_value());
    CHECK(two->group.str() == "Z_4");
    CHECK(two->group.gens.size() == 1);

    auto three = cat.pi_sphere_p(3, 6, 3);
    REQUIRE(three.has_value());
    CHECK(three->group.str() == "Z_3");

    auto five = cat.pi_sphere_p(3, 6, 5);
    REQUIRE(five.has_value());
    CHECK(five->group.str() == "0");

    // odd component keeps only generators naming that prime
    auto p3 = cat.lookup_p("s3", 21, 3);
    REQUIRE(p3.has_value());
    CHECK(p3->group.str() == "Z_3");
    CHECK(p3->group.gens.size() == 1);
}

TEST_CASE("malformed tables are rejected with positions") {
    auto load = [](const std::string& text) { return Catalog::load_text(text); };

    try {
        load("pi|s3|6|0|12||[T]\n");
        FAIL("missing version accepted");
    } catch (const CatalogError& e) {
        CHECK(e.code == CatalogError::Code::SchemaMismatch);
    }

    try {
        load("version|2\n");
        FAIL("wrong version accepted");
    } catch (const CatalogError& e) {
        CHECK(e.code == CatalogError::Code::SchemaMismatch);
    }

    try {
        load("version|1\npi|s3|6|0|12||[T]\npi|s3|6|0|12||[T]\n");
        FAIL("duplicate row accepted");
    } catch (const CatalogError& e) {
        CHECK(e.code == CatalogError::Code::DuplicateKey);
        CHECK(e.line == 3);
    }

    try {
        load("version|1\npi|s3|6|0|12,8||[T]\n");
        FAIL("non-chain torsion accepted");
    } catch (const CatalogError& e) {
        CHECK(e.code == CatalogError::Code::ParseError);
        CHECK(e.line == 2);
    }

    try {
        load("version|1\npi|s3|6|0|12|nu(4)|[T]\n");
        FAIL("generator on the wrong sphere accepted");
    } catch (const CatalogError& e) {
        CHECK(e.code == CatalogError::Code::ParseError);
    }

    try {
        load("version|1\npi|q3|6|0|12||[T]\n");
        FAIL("unknown space accepted");
    } catch (const CatalogError& e) {
        CHECK(e.code == CatalogError::Code::ParseError);
    }

    try {
        load("version|1\npi|s3|6|0|12|\n");
        FAIL("short record accepted");
    } catch (const CatalogError& e) {
        CHECK(e.code == CatalogError::Code::ParseError);
    }

    CHECK_THROWS_AS(Catalog::load_file("/nonexistent/catalog.txt"), CatalogError);
}

TEST_CASE("shipped table loads and round-trips") {
    Catalog cat = shipped();
    CHECK(cat.entries().size() > 300);

    Catalog again = Catalog::load_text(cat.export_text());
    CHECK(again.checksum() == cat.checksum());
    CHECK(again.export_text() == cat.export_text());
}

TEST_CASE("shipped table marks stability") {
    Catalog cat = shipped();
    const TableEntry* stable = cat.lookup("pi", "s9", 12);
    REQUIRE(stable != nullptr);
    CHECK(stable->stable);
    const TableEntry* unstable = cat.lookup("pi", "s3", 6);
    REQUIRE(unstable != nullptr);
    CHECK_FALSE(unstable->stable);
}
