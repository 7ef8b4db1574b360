#include <catch2/catch_amalgamated.hpp>

#include <gottlieb/piecewise.hpp>
#include <gottlieb/whitehead.hpp>

using namespace gottlieb;

namespace {

Catalog shipped() { return Catalog::load_file(GOTTLIEB_TEST_CATALOG); }

long long wv(long long n, WElem e) {
    auto o = w_order(n, e);
    REQUIRE(o.has_value());
    REQUIRE_FALSE(o->infinite);
    return o->value;
}

long long dv(long long n, WElem e) {
    auto o = delta_r_order(n, e);
    REQUIRE(o.has_value());
    REQUIRE_FALSE(o->infinite);
    return o->value;
}

}  // namespace

TEST_CASE("piecewise rules evaluate one-hot") {
    Piecewise<int> clean{"clean", {{Cond::mod(0, 2), 10}, {Cond::mod(1, 2), 11}}};
    CHECK(clean.eval(4) == 10);
    CHECK(clean.eval(7) == 11);
    CHECK(clean.audit(1, 100).empty());

    Piecewise<int> overlapping{"overlap", {{Cond::mod(0, 2), 1}, {Cond::ge(10), 2}}};
    CHECK_THROWS_AS(overlapping.eval(12), std::logic_error);
    CHECK_FALSE(overlapping.audit(1, 20).empty());

    Piecewise<int> gappy{"gap", {{Cond::eq(3), 1}}};
    CHECK_THROWS_AS(gappy.eval(4), std::logic_error);
    CHECK_FALSE(gappy.audit(1, 5).empty());

    Piecewise<int> fallback{"fallback", {{Cond::eq(3), 1}, {Cond::otherwise(), 9}}};
    CHECK(fallback.eval(100) == 9);
}

TEST_CASE("pinned bracket orders") {
    CHECK(wv(7, WElem::Iota) == 1);
    CHECK(wv(5, WElem::Iota) == 2);
    CHECK(w_order(6, WElem::Iota)->infinite);
    CHECK(w_order(2, WElem::Iota)->infinite);

    CHECK(wv(2, WElem::Eta) == 1);
    CHECK(wv(4, WElem::Eta) == 2);
    CHECK(wv(11, WElem::Eta) == 1);

    CHECK(wv(6, WElem::Nu) == 12);
    CHECK(wv(4, WElem::Nu) == 12);
    CHECK(wv(12, WElem::Nu) == 12);
    CHECK(wv(16, WElem::Nu) == 24);
    CHECK(wv(9, WElem::Nu) == 2);
    CHECK(wv(13, WElem::Nu) == 1);
    CHECK(wv(15, WElem::Nu) == 1);

    CHECK(wv(8, WElem::Sigma) == 120);
    CHECK(wv(10, WElem::Sigma) == 240);
    CHECK(wv(11, WElem::Sigma) == 1);
    CHECK(wv(31, WElem::Sigma) == 1);
    CHECK(wv(13, WElem::Sigma) == 2);
}

TEST_CASE("pinned boundary orders") {
    CHECK(dv(8, WElem::Sigma) == 2520);
    CHECK(dv(5, WElem::Nu) == 1);
    CHECK(dv(13, WElem::Nu) == 2);
    CHECK(dv(11, WElem::Sigma) == 2);

    CHECK(delta_c_order(4, WElem::Nu)->value == 4);
    CHECK(delta_c_order(3, WElem::Nu)->value == 3);
    CHECK(delta_c_order(6, WElem::Iota)->value == 720);
    CHECK(delta_c_order(5, WElem::Eta)->value == 1);

    CHECK(delta_h_order(2, WElem::Nu)->value == 4);
    CHECK(delta_h_order(1, WElem::Iota)->value == 12);
    CHECK(delta_h_order(2, WElem::Iota)->value == 120);
    CHECK(delta_h_order(3, WElem::Eta)->value == 2);
}

TEST_CASE("gap cells between bracket and boundary") {
    CHECK(delta_gap(4, WElem::ENuP));
    CHECK(delta_gap(8, WElem::Sigma));
    CHECK(delta_gap(11, WElem::Sigma));
    CHECK(delta_gap(13, WElem::Nu));
    CHECK(delta_gap(11, WElem::Nu2));
    CHECK_FALSE(delta_gap(9, WElem::Nu));
    CHECK_FALSE(delta_gap(5, WElem::Nu));
    CHECK_FALSE(delta_gap(15, WElem::Sigma));
}

TEST_CASE("order tables cover their domains") {
    for (const auto& t : all_order_tables()) CHECK(t.table->audit(t.lo, 400).empty());
}

TEST_CASE("vanishing-bracket subgroups of low spheres") {
    Catalog cat = shipped();

    GroupResult p47 = sphere_P(cat, 4, 7);
    REQUIRE(p47.status == Status::Exact);
    REQUIRE(p47.value_iso.has_value());
    CHECK(p47.value_iso->str() == "Z+Z_2");
    CHECK(p47.value_index()->value == 12);

    GroupResult p815 = sphere_P(cat, 8, 15);
    REQUIRE(p815.status == Status::Exact);
    CHECK(p815.value_iso->str() == "Z+Z_2");
    CHECK(p815.value_index()->value == 120);

    GroupResult p36 = sphere_P(cat, 3, 6);
    REQUIRE(p36.status == Status::Exact);
    CHECK(p36.value->is_whole());
    CHECK(p36.value_iso->str() == "Z_12");

    GroupResult p22 = sphere_P(cat, 2, 2);
    REQUIRE(p22.status == Status::Exact);
    CHECK(p22.value_iso->str() == "0");

    GroupResult p23 = sphere_P(cat, 2, 3);
    REQUIRE(p23.status == Status::Exact);
    CHECK(p23.value->is_whole());
}

TEST_CASE("evaluation subgroups of the two H-like spheres") {
    Catalog cat = shipped();

    CHECK(sphere_G_s2(cat, 2).value_iso->str() == "0");
    GroupResult g25 = sphere_G_s2(cat, 5);
    REQUIRE(g25.status == Status::Exact);
    CHECK(g25.value->is_whole());

    GroupResult g47 = sphere_G_s4(cat, 7);
    REQUIRE(g47.status == Status::Exact);
    CHECK(g47.value_iso->str() == "Z+Z_2");
    CHECK(g47.value_index()->value == 36);

    GroupResult g410 = sphere_G_s4(cat, 10);
    CHECK(g410.status == Status::Bounds);
    REQUIRE(g410.value_iso.has_value());
    CHECK(g410.value_iso->str() == "Z_8");

    GroupResult g411 = sphere_G_s4(cat, 11);
    REQUIRE(g411.status == Status::Exact);
    CHECK(g411.value_iso->str() == "0");
}

TEST_CASE("the two subgroups of pi_7 of the four-sphere differ") {
    auto p = p_spec_s4_7();
    auto g = g_spec_s4_7();
    REQUIRE(p.gen_index.has_value());
    REQUIRE(g.gen_index.has_value());
    CHECK(*p.gen_index == 12);
    CHECK(*g.gen_index == 36);
    CHECK(*g.gen_index % *p.gen_index == 0);
}
