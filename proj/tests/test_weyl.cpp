#include <doctest.h>

#include <set>

#include "orbitope/weyl.hpp"

using namespace orbitope;

namespace {

// Independent composition: apply the word to position labels, rightmost letter first.
std::vector<int> compose_word(int r, const std::vector<int>& word) {
    std::vector<int> out;
    for (int i = 1; i <= r; ++i) {
        int x = i;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (x == *it) x = *it + 1;
            else if (x == *it + 1) x = *it;
        }
        out.push_back(x);
    }
    return out;
}

std::vector<Perm> all_perms(int r) { return WeylGroup({r}).elements().empty() ? std::vector<Perm>{} : [&] {
    std::vector<Perm> ps;
    for (auto& w : WeylGroup({r}).elements()) ps.push_back(w.factors[0]);
    return ps;
}(); }

} // namespace

TEST_CASE("length examples") {
    CHECK(Perm::identity(4).length() == 0);
    for (int n = 1; n <= 6; ++n) CHECK(Perm::longest(n).length() == n * (n - 1) / 2);
    auto s = special_elements(6);
    for (int k = 1; k <= 6; ++k) CHECK(s.hat[k - 1].length() == k - 1);
}

TEST_CASE("special elements") {
    auto s3 = special_elements(3);
    CHECK(s3.check[1] == Perm({1, 3, 2}));
    CHECK(s3.hat[0] == Perm::identity(3));
    CHECK(s3.check[2] == Perm::identity(3));
    CHECK(special_elements(4).hat[2].images() == compose_word(4, {1, 2}));
    CHECK(special_elements(4).hat[2] == Perm({2, 3, 1, 4}));
    for (int r = 1; r <= 6; ++r) {
        auto s = special_elements(r);
        for (int k = 1; k <= r; ++k) {
            CHECK(s.check[k - 1].length() == r - k);
            CHECK(w0_wQhat(r) * s.hat[k - 1] == s.check[k - 1]);
        }
    }
}

TEST_CASE("act permutes coordinates") {
    WeylGroup W({2});
    auto v = int_vec({3, 1});
    CHECK(W.act(W.identity(), v) == v);
    CHECK(W.act(W.simple(0, 1), v) == int_vec({1, 3}));
    WeylGroup W3({3});
    auto s2s1 = W3.simple(0, 2) * W3.simple(0, 1);
    CHECK(W3.act(s2s1, int_vec({3, -1, -1})) == int_vec({-1, -1, 3}));
    WeylGroup W22({2, 2});
    CHECK(W22.act(W22.simple(1, 1), int_vec({1, 2, 3, 4})) == int_vec({1, 2, 4, 3}));
    CHECK_THROWS_AS(W.act(W.identity(), int_vec({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("word and inverse relations") {
    for (int r = 1; r <= 5; ++r)
        for (const auto& w : all_perms(r)) {
            CHECK(w.inverse().length() == w.length());
            CHECK((Perm::longest(r) * w).length() == Perm::longest(r).length() - w.length());
            auto word = w.reduced_word();
            CHECK(static_cast<int>(word.size()) == w.length());
            CHECK(compose_word(r, word) == w.images());
            for (int i = 1; i < r; ++i) {
                int l = (w * Perm::simple(r, i)).length();
                CHECK(l == w.length() + (w(i) < w(i + 1) ? 1 : -1));
            }
        }
    CHECK(Perm::from_word(4, {1, 3, 2}).reduced_word() == std::vector<int>{1, 3, 2});
}

TEST_CASE("lengths with the special elements") {
    for (int r = 2; r <= 6; ++r) {
        auto s = special_elements(r);
        for (const auto& w : all_perms(r)) {
            if (w(1) != 1) continue; // w in the subgroup generated by s_2..s_{r-1}
            for (int k = 1; k <= r; ++k) CHECK((w * s.hat[k - 1]).length() == w.length() + k - 1);
        }
        for (int k = 1; k <= r; ++k) {
            const Perm& c = s.check[k - 1];
            for (int i = 1; i < k; ++i)
                for (int j = k + 1; j <= r; ++j) {
                    int l = (c * Perm::transposition(r, i, j)).length();
                    if (i == k - 1 && j == k + 1) CHECK(l == c.length() + 1);
                    else CHECK(l >= c.length() + 2);
                }
            for (int j = k + 1; j <= r; ++j) CHECK((c * Perm::transposition(r, k, j)).length() <= c.length() - 1);
            if (k >= 2 && k <= r - 1) {
                std::vector<int> word;
                for (int i = r - 1; i > k; --i) word.push_back(i);
                word.push_back(k - 1);
                word.push_back(k);
                CHECK(c * Perm::transposition(r, k - 1, k + 1) == Perm::from_word(r, word));
                for (int i = 1; i < k - 1; ++i) CHECK((c * Perm::transposition(r, i, k)).length() >= c.length() + 2);
                CHECK(c * Perm::transposition(r, k - 1, k) == s.check[k - 2]);
            }
        }
        for (int k = 1; k <= r - 2; ++k) {
            std::vector<int> word, longer;
            for (int i = k; i >= 1; --i) word.push_back(i);
            for (int i = k + 1; i >= 1; --i) longer.push_back(i);
            Perm p = Perm::from_word(r, word);
            for (int j = 3; j <= r; ++j) {
                Perm q = p * Perm::transposition(r, 1, j);
                CHECK((q.length() == p.length() + 1) == (j == k + 2));
                if (j == k + 2) CHECK(q == Perm::from_word(r, longer));
            }
        }
    }
}

TEST_CASE("max coset representatives") {
    WeylGroup W({3});
    auto all = max_coset_reps(W, parabolic(W, int_vec({3, 2, 1})));
    CHECK(all.size() == 6);

    for (int n = 2; n <= 5; ++n) {
        WeylGroup Wn({n});
        RatVec lam(n, -1);
        lam[0] = n;
        auto pd = parabolic(Wn, lam);
        auto reps = max_coset_reps(Wn, pd);
        CHECK(reps.size() == static_cast<std::size_t>(n));
        auto s = special_elements(n);
        std::set<WeylElt> expected;
        for (int k = 1; k <= n; ++k) expected.insert(Wn.embed(0, s.hat[k - 1].inverse()) * pd.w_lambda);
        CHECK(std::set<WeylElt>(reps.begin(), reps.end()) == expected);
    }

    WeylGroup W4({4});
    auto pd = parabolic(W4, int_vec({1, 1, -1, -1}));
    CHECK(pd.w_lambda.factors[0] == Perm::from_word(4, {1, 3}));
    auto reps = max_coset_reps(W4, pd);
    std::vector<std::pair<std::vector<int>, RatVec>> table = {
        {{1, 3}, int_vec({1, 1, -1, -1})},
        {{2, 1, 3}, int_vec({1, -1, 1, -1})},
        {{1, 2, 1, 3}, int_vec({-1, 1, 1, -1})},
        {{3, 2, 1, 3}, int_vec({1, -1, -1, 1})},
        {{3, 1, 2, 1, 3}, int_vec({-1, 1, -1, 1})},
        {{2, 1, 3, 2, 1, 3}, int_vec({-1, -1, 1, 1})},
    };
    REQUIRE(reps.size() == 6);
    std::set<WeylElt> got(reps.begin(), reps.end());
    for (const auto& [word, wl] : table) {
        auto w = W4.embed(0, Perm::from_word(4, word));
        CHECK(got.count(w) == 1);
        CHECK(W4.act(w, pd.lambda) == wl);
    }
    for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1] < reps[i]);
}

TEST_CASE("coset representatives partition the group") {
    WeylGroup W({2, 3});
    for (const auto& lam : {int_vec({1, 1, 2, 2, 0}), int_vec({0, 0, 1, 1, 1}), int_vec({2, 1, 3, 1, 0})}) {
        auto pd = parabolic(W, lam);
        auto reps = max_coset_reps(W, pd);
        std::size_t stab = 0;
        for (const auto& w : W.elements())
            if (W.act(w, lam) == lam) ++stab;
        CHECK(reps.size() * stab == W.order());
        std::set<RatVec> orbit;
        for (const auto& w : reps) orbit.insert(W.act(w, lam));
        CHECK(orbit.size() == reps.size());
    }
    CHECK_THROWS_AS(parabolic(W, int_vec({1, 2, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("text form") {
    WeylElt w = parse_weyl("2 1 3|1 2");
    CHECK(w.str() == "2 1 3|1 2");
    CHECK(w.length() == 1);
    CHECK_THROWS_AS(parse_weyl("1 1"), std::invalid_argument);
}
