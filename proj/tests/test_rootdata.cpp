#include <doctest.h>

#include <set>

#include "orbitope/rootdata.hpp"

using namespace orbitope;

namespace {

std::set<RatVec> as_set(const std::vector<RatVec>& v) { return {v.begin(), v.end()}; }

std::vector<std::string> small_groups() {
    return {"sp:n=1", "sp:n=2", "sp:n=3", "sp:n=4", "su:n=2,q=1", "su:n=3,q=1", "su:p=2,q=1", "su:p=2,q=2",
            "su:p=3,q=2", "su:p=3,q=3", "so_star:n=3", "so_star:n=4", "so_star:n=5", "so:p=3", "so:p=4",
            "so:p=5", "so:p=6", "so:p=7"};
}

} // namespace

TEST_CASE("group spec parsing") {
    CHECK(parse_group("sp:n=2").str() == "sp:n=2");
    CHECK(parse_group("su:p=2,q=2").str() == "su:p=2,q=2");
    CHECK(parse_group("su:n=2,q=1").u_coords);
    CHECK(parse_group("so_star:n=3").tag == Family::SOstar2n);
    CHECK(parse_group("so:p=5").p == 5);
    CHECK_THROWS_AS(parse_group("su:p=1,q=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group("so_star:n=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group("gl:n=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group("sp:n=x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group("sp:n=2,q=1"), std::invalid_argument);
}

TEST_CASE("root data examples") {
    auto sp = build("sp:n=2");
    CHECK(as_set(sp.noncompact_pos) == std::set<RatVec>{int_vec({2, 0}), int_vec({1, 1}), int_vec({0, 2})});
    auto so6 = build("so_star:n=3");
    CHECK(so6.schmid == std::vector<RatVec>{int_vec({1, 1, 0})});
    auto su = build("su:p=3,q=2");
    // The largest noncompact positive root dominates all others in the compact-root order.
    CHECK(su.schmid[0] == int_vec({1, 0, 0, 0, -1}));
    for (const auto& b : su.noncompact_pos) {
        RatVec diff = su.schmid[0] - b;
        CHECK((diff[0] >= 0 && diff[4] <= 0));
    }
    auto sun = build("su:n=3,q=1");
    CHECK(sun.noncompact_pos[0] == int_vec({2, 1, 1}));
    CHECK(sun.schmid.size() == 1);
}

TEST_CASE("root counts and structural invariants") {
    for (const auto& s : small_groups()) {
        CAPTURE(s);
        auto g = build(s);
        const auto& f = g.family;
        std::size_t expected = 0;
        switch (f.tag) {
        case Family::Sp2nR: expected = f.n * (f.n + 1) / 2; break;
        case Family::SUpq: expected = f.p * f.q; break;
        case Family::SOstar2n: expected = f.n * (f.n - 1) / 2; break;
        case Family::SOp2: expected = f.p; break;
        }
        CHECK(g.noncompact_pos.size() == expected);
        REQUIRE(g.weights_p_minus.size() == g.noncompact_pos.size());
        for (std::size_t i = 0; i < g.noncompact_pos.size(); ++i) CHECK(g.weights_p_minus[i] == -g.noncompact_pos[i]);
        RatVec twice_rho(g.dim, 0);
        for (const auto& a : g.compact_pos) twice_rho = twice_rho + a;
        CHECK(Rational(2) * g.rho == twice_rho);
        for (std::size_t i = 0; i < g.schmid.size(); ++i)
            for (std::size_t j = i + 1; j < g.schmid.size(); ++j) {
                CHECK_FALSE(is_root(g, g.schmid[i] + g.schmid[j]));
                CHECK_FALSE(is_root(g, g.schmid[i] - g.schmid[j]));
            }
        if (f.tag != Family::SOp2 && !f.u_coords)
            for (const auto& b : g.noncompact_pos)
                for (const auto& c : g.noncompact_pos) CHECK(dot(b, c) >= 0);
    }
}

TEST_CASE("holomorphic chamber") {
    auto sp = build("sp:n=2");
    CHECK(in_hol_chamber(sp, int_vec({3, 1})));
    CHECK_FALSE(in_hol_chamber(sp, int_vec({3, 0})));
    CHECK_FALSE(in_hol_chamber(sp, int_vec({1, 3})));
    auto su22 = build("su:p=2,q=2");
    CHECK(in_hol_chamber(su22, int_vec({3, 1, -1, -3})));
    CHECK(in_hol_chamber(su22, int_vec({1, 1, -1, -1})));
    CHECK_FALSE(in_hol_chamber(su22, int_vec({1, 0, 0, -1})));
    CHECK_FALSE(in_hol_chamber(su22, int_vec({3, 1, -1, -2})));
    CHECK(in_hol_chamber(build("su:n=2,q=1"), int_vec({2, 0})));
    CHECK_THROWS_AS(in_hol_chamber(sp, int_vec({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("Schmid cones") {
    auto sp = build("sp:n=3");
    HPolyhedron expected(3);
    expected.add(AffineIneq(int_vec({-1, 1, 0}), 0));
    expected.add(AffineIneq(int_vec({0, -1, 1}), 0));
    expected.add(AffineIneq(int_vec({0, 0, -1}), 0));
    CHECK(poly_equal(schmid_cone(sp), expected));

    auto su = build("su:n=3,q=1");
    auto cone = schmid_cone(su);
    CHECK(cone.contains(int_vec({4, 2, 2})));
    CHECK_FALSE(cone.contains(int_vec({-2, -1, -1})));
    CHECK_FALSE(cone.contains(int_vec({1, 2, 1})));
    for (const auto& c : cone.ineqs()) CHECK(implies(cone, c));

    auto su22 = build("su:p=2,q=2");
    auto c22 = schmid_cone(su22);
    CHECK(c22.contains(int_vec({3, 1, -1, -3})));
    CHECK_FALSE(c22.contains(int_vec({1, 3, -3, -1})));
    CHECK_FALSE(c22.contains(int_vec({1, 1, 0, -2})));
}
