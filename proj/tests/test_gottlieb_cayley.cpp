#include <catch2/catch_amalgamated.hpp>

#include <gottlieb/cayley.hpp>
#include <gottlieb/gottlieb.hpp>

using namespace gottlieb;

namespace {

Catalog shipped() { return Catalog::load_file(GOTTLIEB_TEST_CATALOG); }

}  // namespace

// ---- G over the real tower --------------------------------------------------

TEST_CASE("real G: closed arms") {
    Catalog cat = shipped();

    // RP^1 carries everything, but the groups above degree 1 vanish
    GroupResult g = g_rp(cat, 1, 5);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value_iso->str() == "0");

    // evaluative cells on RP^2
    CHECK(g_rp(cat, 2, 2).value_iso->str() == "0");
    g = g_rp(cat, 2, 3);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value->is_whole());
    CHECK(g.value_iso->str() == "Z");

    // k == n: parity decides, with the parallelizable exceptions
    CHECK(g_rp(cat, 4, 4).value_iso->str() == "0");
    CHECK(g_rp(cat, 7, 7).value->is_whole());
    g = g_rp(cat, 5, 5);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value->mult == 2);
    CHECK(g.value_index()->value == 2);

    // the equality band retargets the sphere calculus
    g = g_rp(cat, 3, 4);
    CHECK(g.machine() == "exact|Z_2|whole->Z_2|-|gam(eta(3))|[main]+[W1]+[T]");

    // high-offset parity arms
    g = g_rp(cat, 19, 27);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value->is_whole());
    CHECK(g.value_iso->str() == "Z_2+Z_2");
    g = g_rp(cat, 16, 24);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value_iso->str() == "0");
}

TEST_CASE("real G: excluded cells keep honest bounds") {
    Catalog cat = shipped();

    // (n,k) = (4,7): both bounds known, strict inclusion in P
    GroupResult g = g_rp(cat, 4, 7);
    REQUIRE(g.status == Status::Bounds);
    CHECK(g.value->mult == 12);
    CHECK(g.value_index()->value == 144);
    CHECK(g.upper_index()->value == 36);
    CHECK(g.upper_iso->str() == "Z+Z_2");

    // (4,8): only the P value survives, as an upper bound
    g = g_rp(cat, 4, 8);
    REQUIRE(g.status == Status::UpperBound);
    CHECK_FALSE(g.value.has_value());
    CHECK(g.upper_iso->str() == "Z_2");
    CHECK(g.upper_index()->value == 2);

    // (4,10): multiple lower bound against the covered P value
    g = g_rp(cat, 4, 10);
    REQUIRE(g.status == Status::Bounds);
    CHECK(g.value->mult == 3);
    CHECK(g.value_index()->value == 9);
    CHECK(g.upper_index()->value == 3);

    // (8,15): the boundary order 2520 bounds below, P above
    g = g_rp(cat, 8, 15);
    REQUIRE(g.status == Status::Bounds);
    CHECK(g.value_index()->value == 302400);
    CHECK(g.upper_index()->value == 120);

    // lower-only families
    g = g_rp(cat, 11, 18);
    REQUIRE(g.status == Status::LowerBound);
    CHECK(g.value_iso->str() == "Z_120");
    g = g_rp(cat, 13, 16);
    REQUIRE(g.status == Status::LowerBound);
    CHECK(g.value_iso->str() == "Z_12");

    // the one excluded diagonal with no salvage
    CHECK(g_rp(cat, 27, 33).status == Status::NotCovered);
}

// ---- G over the complex tower -----------------------------------------------

TEST_CASE("complex G") {
    Catalog cat = shipped();

    // CP^1 routes to the base-sphere table
    GroupResult g = g_cp(cat, 1, 4);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.subject == "G_4(CP^1)");
    CHECK(g.value->is_whole());
    CHECK(g.value_iso->str() == "Z_2");
    CHECK(g_cp(cat, 1, 2).value_iso->str() == "0");

    CHECK(g_cp(cat, 2, 2).value_iso->str() == "0");
    CHECK(g_cp(cat, 3, 6).machine() == "exact|0|0->0|-|-|[zero]");

    // top-degree arm: n = 2 is exact, odd n keeps only n!, even n brackets
    g = g_cp(cat, 2, 5);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value->mult == 2);
    g = g_cp(cat, 3, 7);
    REQUIRE(g.status == Status::LowerBound);
    CHECK(g.value->mult == 6);
    CHECK(g.value_index()->value == 6);
    g = g_cp(cat, 4, 9);
    REQUIRE(g.status == Status::Bounds);
    CHECK(g.value_index()->value == 24);
    CHECK(g.upper_index()->value == 2);

    // offset 1..2: parity decides
    CHECK(g_cp(cat, 2, 6).value_iso->str() == "0");
    g = g_cp(cat, 3, 8);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value->is_whole());
    CHECK(g.value_iso->str() == "Z_2");
    CHECK(g_cp(cat, 4, 11).value_iso->str() == "0");

    // small-n whole arms
    g = g_cp(cat, 2, 10);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value_iso->str() == "Z_2");
    g = g_cp(cat, 2, 12);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value_iso->str() == "Z_30");

    // congruence whole arms at offsets 6 and 8
    g = g_cp(cat, 6, 19);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value->is_whole());
    g = g_cp(cat, 9, 27);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value->is_whole());
    CHECK(g.value_iso->str() == "Z_2+Z_2");

    // a cell where only the vacuous P value exists stays uncovered
    CHECK(g_cp(cat, 2, 9).status == Status::NotCovered);
}

// ---- G over the quaternionic tower ------------------------------------------

TEST_CASE("quaternionic G") {
    Catalog cat = shipped();

    // HP^1 routes to the base-sphere table
    GroupResult g = g_hp(cat, 1, 7);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.subject == "G_7(HP^1)");
    CHECK(g.value_iso->str() == "Z+Z_2");
    CHECK(g.value_index()->value == 36);

    // low band and the stable-zero band vanish
    CHECK(g_hp(cat, 2, 5).value_iso->str() == "0");
    CHECK(g_hp(cat, 2, 4).value_iso->str() == "0");
    CHECK(g_hp(cat, 3, 12).value_iso->str() == "0");

    // top-degree arm: factorial lower bound against the split P value
    g = g_hp(cat, 2, 11);
    REQUIRE(g.status == Status::Bounds);
    CHECK(g.value_index()->value == 1800);
    CHECK(g.upper_index()->value == 24);

    // offset 3: gcd-with-24 lower bound
    g = g_hp(cat, 2, 14);
    REQUIRE(g.status == Status::Bounds);
    CHECK(g.value_index()->value == 96);
    CHECK(g.upper_index()->value == 4);

    // printed exceptional cells on HP^2
    g = g_hp(cat, 2, 19);
    CHECK(g.machine() ==
          "bounds|Z_2+Z_2+Z_30|gen{gam(cmp(eta(11),sg(12)))}->Z_2"
          "|sum(sphere=whole,fiber=mult(6))->?|gam(cmp(eta(11),sg(12)))"
          "|[exa]+[PHP1]+[T]+[Q]+[LQ]");

    g = g_hp(cat, 2, 20);
    REQUIRE(g.status == Status::LowerBound);
    CHECK(g.value_iso->str() == "Z_2");
    CHECK(g.ambient->str() == "Z_2+Z_2+Z_2+Z_2+Z_6");

    g = g_hp(cat, 2, 22);
    REQUIRE(g.status == Status::LowerBound);
    CHECK_FALSE(g.ambient.has_value());
    CHECK(g.value_iso->str() == "Z_63");

    g = g_hp(cat, 2, 18);
    REQUIRE(g.status == Status::Bounds);
    CHECK(g.value_index()->value == 1200);
    CHECK(g.upper_index()->value == 1);

    // P pushes down an upper bound where G has no arm of its own
    g = g_hp(cat, 2, 7);
    REQUIRE(g.status == Status::UpperBound);
    CHECK(g.upper_iso->str() == "Z_4");
    CHECK(g.upper_index()->value == 3);
}

// ---- the primed variant and the comparison ----------------------------------

TEST_CASE("G-prime") {
    Catalog cat = shipped();

    // over R and C the fiber part is dead, so G' is G relabeled
    GroupResult g = g_prime(cat, 'R', 3, 4);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.subject == "G'_4(RP^3)");
    CHECK(g.citation == "[newP]+[main]+[W1]+[T]");
    CHECK(g.value_iso->str() == "Z_2");

    // the base sphere has no preferred splitting
    g = g_prime(cat, 'H', 1, 7);
    REQUIRE(g.status == Status::NotCovered);
    CHECK(g.ambient->str() == "Z+Z_12");

    // whole arms independent of the ambient group
    g = g_prime(cat, 'H', 2, 32);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value->is_whole());
    CHECK_FALSE(g.ambient.has_value());
    CHECK_FALSE(g.value_iso.has_value());

    // offset-6 vanishing for even n
    g = g_prime(cat, 'H', 2, 17);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value_iso->str() == "0");
    CHECK(g.ambient->str() == "Z_2+Z_6");

    // offset-3 whole arm for odd n away from the 3-divisible column
    g = g_prime(cat, 'H', 3, 18);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value->is_whole());
    CHECK(g.value_iso->str() == "Z_6+Z_120");

    // below the top sphere the sphere part is zero
    g = g_prime(cat, 'H', 2, 9);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value_iso->str() == "0");
    CHECK(g.citation.find("[sub]") != std::string::npos);
    CHECK(g.citation.find("[newP]") != std::string::npos);

    // catalog edges: the fiber column runs out
    CHECK(g_prime(cat, 'H', 3, 21).status == Status::NotCovered);
    CHECK(g_prime(cat, 'H', 3, 27).machine() == "not_covered|?|-|-|-|-");
}

TEST_CASE("G equals P where the theorem says so") {
    Catalog cat = shipped();
    CHECK(g_equals_p(cat, 'R', 7, 1) == true);
    CHECK(g_equals_p(cat, 'R', 5, 5) == true);
    CHECK(g_equals_p(cat, 'C', 2, 5) == true);
    CHECK(g_equals_p(cat, 'C', 2, 7) == true);   // P vanishes there
    CHECK(g_equals_p(cat, 'R', 3, 6) == true);   // indexes agree
    CHECK_FALSE(g_equals_p(cat, 'H', 2, 19).has_value());
}

// ---- the Cayley plane -------------------------------------------------------

TEST_CASE("Cayley pi") {
    Catalog cat = shipped();

    GroupResult r = pi_kp2(cat, 3);
    REQUIRE(r.status == Status::Exact);
    CHECK(r.value_iso->str() == "0");
    CHECK(r.citation == "[conn]");

    r = pi_kp2(cat, 8);
    REQUIRE(r.status == Status::Exact);
    CHECK(r.value_iso->str() == "Z");
    CHECK(r.generators == std::vector<std::string>{"ik(iota(8))"});

    CHECK(pi_kp2(cat, 18).machine() ==
          "exact|Z_2+Z_24|whole->Z_2+Z_24|-"
          "|ik(cmp(nu(8),sg(11)));ik(cmp(eta(8),mu(9)));ik(b1(8))|[T]");
    CHECK(pi_kp2(cat, 23).value_iso->str() == "Z+Z_2+Z_2+Z_120");

    // degree 26 is on record only through its extension data
    CHECK(pi_kp2(cat, 26).machine() == "not_covered|?|-|-|-|[JT]");
    CHECK(pi_kp2(cat, 27).citation == "-");

    // primary parts
    r = pi_kp2_p(cat, 5, 3);
    REQUIRE(r.status == Status::Exact);
    CHECK(r.value_iso->str() == "0");
    r = pi_kp2_p(cat, 15, 2);
    REQUIRE(r.status == Status::Exact);
    CHECK(r.value_iso->str() == "Z_8");
    CHECK(r.generators.size() == 1);
    r = pi_kp2_p(cat, 21, 3);
    REQUIRE(r.status == Status::Exact);
    CHECK(r.value_iso->str() == "Z_3");
    r = pi_kp2_p(cat, 26, 2);
    REQUIRE(r.status == Status::Exact);
    CHECK(r.value_iso->str() == "Z_2+Z_64");
    CHECK(r.citation == "[JT]");
    CHECK(pi_kp2_p(cat, 26, 3).status == Status::NotCovered);

    // the recorded degree-26 extension
    CayleyK26 rel = cayley_k26_relation();
    CHECK(rel.sub.str() == "Z_2+Z_24");
    CHECK(rel.quotient.str() == "Z_24");
    CHECK(rel.two_primary.str() == "Z_2+Z_64");
    CHECK(std::string(rel.citation) == "[JT]");
}

TEST_CASE("Cayley P") {
    Catalog cat = shipped();

    CHECK(p_kp2(cat, 12).value_iso->str() == "0");  // whole of a zero group
    CHECK(p_kp2(cat, 9).value_iso->str() == "0");
    CHECK(p_kp2(cat, 14).value_iso->str() == "0");

    CHECK(p_kp2(cat, 11).machine() == "exact|Z_24|mult(8)->Z_3|-|scl(8,ik(nu(8)))|[o2]+[T]");

    CHECK(p_kp2(cat, 16).machine() ==
          "bounds|Z_2+Z_2+Z_2|gen{ik(E(cmp(sg'(7),eta(14))))}->Z_2"
          "|gen{ik(E(cmp(sg'(7),eta(14)))),ik(cmp(eta(8),sg(9)))}->Z_2+Z_2"
          "|ik(E(cmp(sg'(7),eta(14))))|[o2]+[T]");

    GroupResult p = p_kp2(cat, 17);
    REQUIRE(p.status == Status::Bounds);
    CHECK(p.value_index()->value == 8);
    CHECK(p.upper_index()->value == 4);

    CHECK(p_kp2(cat, 18).machine() ==
          "exact|Z_2+Z_24|gen{ik(cmp(nu(8),sg(11))),ik(b1(8))}->Z_24|-"
          "|ik(cmp(nu(8),sg(11)));ik(b1(8))|[o2]+[T]");

    CHECK(p_kp2(cat, 19).machine() == "exact|Z_2+Z_504|gen{}->Z_126|-|-|[o2]+[T]");

    p = p_kp2(cat, 21);
    REQUIRE(p.status == Status::Exact);
    CHECK(p.value->is_whole());
    CHECK(p.value_iso->str() == "Z_6");

    // no claims: mid-band holes and everything past the table
    CHECK(p_kp2(cat, 8).status == Status::NotCovered);
    CHECK(p_kp2(cat, 15).status == Status::NotCovered);
    CHECK(p_kp2(cat, 26).status == Status::NotCovered);
}

TEST_CASE("Cayley G") {
    Catalog cat = shipped();

    CHECK(g_kp2(cat, 8).value_iso->str() == "0");
    CHECK(g_kp2(cat, 10).value_iso->str() == "0");
    CHECK(g_kp2(cat, 13).value_iso->str() == "0");  // zero ambient

    GroupResult g = g_kp2(cat, 11);
    REQUIRE(g.status == Status::Exact);
    CHECK(g.value_iso->str() == "Z_3");
    CHECK(g.value_index()->value == 8);

    g = g_kp2(cat, 15);
    REQUIRE(g.status == Status::LowerBound);
    CHECK(g.value_iso->str() == "Z_15");

    g = g_kp2(cat, 16);
    REQUIRE(g.status == Status::UpperBound);
    CHECK_FALSE(g.value.has_value());
    CHECK(g.upper_iso->str() == "Z_2+Z_2");
    CHECK(g.upper_index()->value == 2);

    g = g_kp2(cat, 19);
    REQUIRE(g.status == Status::UpperBound);
    CHECK(g.upper_iso->str() == "Z_126");
    CHECK(g.upper_index()->value == 8);

    CHECK(g_kp2(cat, 18).machine() ==
          "bounds|Z_2+Z_24|mult(8)->Z_3|gen{ik(cmp(nu(8),sg(11))),ik(b1(8))}->Z_24"
          "|scl(8,ik(cmp(nu(8),sg(11))));scl(8,ik(cmp(eta(8),mu(9))));scl(8,ik(b1(8)))"
          "|[o2]+[T]");

    CHECK(g_kp2(cat, 21).machine() == "lower_bound|Z_6|mult(2)->Z_3|-|-|[o2]");

    CHECK(g_kp2(cat, 22).status == Status::NotCovered);
    CHECK(g_kp2(cat, 26).status == Status::NotCovered);

    // the split variants make no claims over the Cayley plane
    g = cayley_not_covered(cat, "P'", 18);
    CHECK(g.subject == "P'_18(KP^2)");
    CHECK(g.status == Status::NotCovered);
    CHECK(g.ambient->str() == "Z_2+Z_24");
}
