#include <doctest.h>

#include "orbitope/polytope.hpp"

using namespace orbitope;

TEST_CASE("polytope: Sp(4) example and text form") {
    auto g = build("sp:n=2");
    auto p = assemble(g, int_vec({3, 1}));
    CHECK(polytope_text(p) == "xi1 - xi2 >= 0; xi1 >= 3; xi2 >= 1");
    CHECK(member(p, int_vec({3, 1})));
    CHECK(member(p, int_vec({5, 1})));
    CHECK_FALSE(member(p, int_vec({1, 3})));
    CHECK_THROWS(member(p, int_vec({1, 3, 4})));
    CHECK(p.provenance.size() == p.system.size());
    CHECK(p.provenance[0].ineq == p.system.ineqs()[0]);
}

TEST_CASE("polytope: SU(2,1) and SO*(6) instances") {
    auto su = build("su:n=2,q=1");
    auto ps = assemble(su, int_vec({2, 0}));
    HPolyhedron expect(2);
    expect.add(AffineIneq(int_vec({-2, 1}), -4));
    expect.add(AffineIneq(int_vec({-1, 2}), 4));
    expect.add(AffineIneq(int_vec({1, -2}), 2));
    expect.add(AffineIneq(int_vec({-1, 1}), 0));
    CHECK(poly_equal(ps.system, expect));

    auto so = build("so_star:n=3");
    auto po = assemble(so, int_vec({3, 2, 1}));
    HPolyhedron e3(3);
    e3.add(AffineIneq(int_vec({1, -1, -1}), 0));
    e3.add(AffineIneq(int_vec({-1, 1, -1}), -2));
    e3.add(AffineIneq(int_vec({-1, -1, 1}), -4));
    e3.add(AffineIneq(int_vec({-1, 1, 1}), 2));
    e3.add(AffineIneq(int_vec({1, -1, 1}), 4));
    e3.add(AffineIneq(int_vec({-1, 1, 0}), 0));
    e3.add(AffineIneq(int_vec({0, -1, 1}), 0));
    CHECK(poly_equal(po.system, e3));
}

TEST_CASE("polytope: closed forms match assembly") {
    std::vector<std::pair<const char*, RatVec>> cases{
        {"sp:n=2", int_vec({3, 2})},         {"sp:n=3", int_vec({4, 3, 2})},
        {"sp:n=3", int_vec({2, 1, 1})},      {"su:n=2,q=1", int_vec({2, 0})},
        {"su:n=3,q=1", int_vec({3, 1, -1})}, {"su:n=4,q=1", int_vec({4, 2, 0, -2})},
        {"so_star:n=3", int_vec({3, 2, 1})}, {"so_star:n=4", int_vec({4, 3, 2, 1})},
        {"su:p=2,q=2", int_vec({3, 1, -1, -3})}};
    for (auto& [spec, L] : cases) {
        CAPTURE(std::string(spec));
        auto g = build(spec);
        CHECK(poly_equal(assemble(g, L).system, closed_form(g, L).system));
    }
    auto su = build("su:p=2,q=2");
    auto cf = closed_form(su, int_vec({3, 1, -1, -3}));
    CHECK(implies(cf.system, AffineIneq(int_vec({1, -1, -1, 1}), 4)));
    CHECK_FALSE(implies(cf.system, AffineIneq(int_vec({1, -1, -1, 1}), 3)));
    CHECK_THROWS_AS(closed_form(build("so_star:n=5"), int_vec({5, 4, 3, 2, 1})), NoClosedForm);
}

TEST_CASE("polytope: input validation") {
    CHECK_THROWS_AS(assemble(build("sp:n=2"), int_vec({1, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(assemble(build("sp:n=2"), int_vec({-1, -2})), std::domain_error);
    CHECK_THROWS_AS(assemble(build("so:p=5"), int_vec({2, 1, 3})), UnsupportedFamily);
}

TEST_CASE("polytope: Horn oracle examples") {
    auto g = build("sp:n=2");
    RatVec L = int_vec({3, 1});
    CHECK(horn_oracle_member(g, L, L));
    CHECK_FALSE(horn_oracle_member(g, L, int_vec({2, 1})));
    CHECK(horn_oracle_member(g, L, int_vec({4, 2})));
    auto w = horn_oracle_witness(g, L, int_vec({4, 2}));
    REQUIRE(w);
    CHECK((*w)[0] >= (*w)[1]);
}

TEST_CASE("polytope: grid cross-check") {
    for (auto [spec, L] : std::vector<std::pair<const char*, RatVec>>{
             {"sp:n=2", int_vec({3, 1})}, {"su:n=2,q=1", int_vec({2, 0})}, {"so_star:n=3", int_vec({3, 2, 1})}}) {
        CAPTURE(std::string(spec));
        auto r = cross_check(build(spec), L, 3);
        CHECK(r.points > 0);
        CHECK(r.inside > 0);
        CHECK(r.disagreements.empty());
        CHECK(r.closed_form_checked);
        CHECK(r.closed_form_disagreements.empty());
        CHECK(r.closed_form_equal);
    }
}

TEST_CASE("polytope: geometric properties") {
    for (auto [spec, L] : std::vector<std::pair<const char*, RatVec>>{{"sp:n=3", {Rational(7, 2), 2, 1}},
                                                                     {"su:n=3,q=1", int_vec({4, 1, 0})},
                                                                     {"su:p=2,q=1", int_vec({3, 1, -4})},
                                                                     {"so_star:n=4", int_vec({5, 3, 2, 1})}}) {
        CAPTURE(std::string(spec));
        auto r = check_properties(build(spec), L);
        CHECK(r.contains_lambda);
        CHECK(r.in_root_cone);
        CHECK(r.in_hol_closure);
        CHECK(r.relaxed_equal);
    }
}

TEST_CASE("polytope: members lie strictly in the holomorphic chamber") {
    auto g = build("so_star:n=3");
    RatVec L = int_vec({3, 2, 1});
    auto p = assemble(g, L);
    int seen = 0;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b)
            for (int c = 0; c <= 8; ++c) {
                RatVec x{Rational(a, 2) + 1, Rational(b, 2) + 1, Rational(c, 2) + 1};
                if (!member(p, x)) continue;
                ++seen;
                CHECK(in_hol_chamber(g, x));
            }
    CHECK(seen > 0);
}

TEST_CASE("polytope: central shift for SU(2,2)") {
    auto g = build("su:p=2,q=2");
    for (int c = 1; c <= 3; ++c) {
        RatVec L = int_vec({c, c, -c, -c});
        HPolyhedron cone(4);
        cone.add(AffineIneq(int_vec({1, 0, 0, 1}), 0, true));
        cone.add(AffineIneq(int_vec({0, 1, 1, 0}), 0, true));
        cone.add(AffineIneq(int_vec({-1, 1, 0, 0}), 0));
        cone.add(AffineIneq(int_vec({0, -1, 0, 0}), -c));
        CHECK(poly_equal(assemble(g, L).system, cone));
    }
}

TEST_CASE("polytope: JSON output round-trips") {
    auto g = build("su:p=2,q=2");
    auto p = assemble(g, int_vec({3, 1, -1, -3}));
    auto j = to_json(p);
    CHECK(j["group"] == "su:p=2,q=2");
    CHECK(poly_from_json(j) == p.system);
    CHECK(j["provenance"].size() == p.system.size());
    CHECK(ineq_text(AffineIneq(int_vec({1, 1, 1, 1}), 0, true)) == "xi1 + xi2 + xi3 + xi4 = 0");
}
