#include <doctest.h>

#include <algorithm>
#include <array>

#include "orbitope/schubert.hpp"

using namespace orbitope;

namespace {

WeylElt one_factor(const Perm& p) { return WeylElt{{p}}; }

WeylElt word(int r, std::vector<int> w) { return one_factor(Perm::from_word(r, w)); }

// s_{r-1} ... s_k
std::vector<int> desc(int r, int k) {
    std::vector<int> w;
    for (int i = r - 1; i >= k; --i) w.push_back(i);
    return w;
}

// Coinvariant algebra of GL_3 with hard-coded Schubert polynomials, reduced by the
// Groebner basis h_1(x1,x2,x3), h_2(x2,x3), h_3(x3).
using Mono = std::array<int, 3>;
using P3 = std::map<Mono, long long>;

P3 mul(const P3& a, const P3& b) {
    P3 o;
    for (auto& [m, c] : a)
        for (auto& [n, d] : b) o[{m[0] + n[0], m[1] + n[1], m[2] + n[2]}] += c * d;
    std::erase_if(o, [](auto& kv) { return kv.second == 0; });
    return o;
}

P3 complete_h(int deg, int from) {
    P3 o;
    for (int a = 0; a <= deg; ++a)
        for (int b = 0; a + b <= deg; ++b) {
            Mono m{0, 0, 0};
            int c = deg - a - b;
            if (from == 0) m = {a, b, c};
            else if (from == 1) { if (a) continue; m = {0, b, c}; }
            else { if (a || b) continue; m = {0, 0, c}; }
            o[m] += 1;
        }
    return o;
}

P3 reduce(P3 f) {
    for (;;) {
        bool changed = false;
        for (auto& [m, c] : f) {
            for (int i = 0; i < 3; ++i) {
                if (m[i] < i + 1) continue;
                Mono shift = m;
                shift[i] -= i + 1;
                P3 g = mul(P3{{shift, c}}, complete_h(i + 1, i));
                for (auto& [gm, gc] : g) f[gm] -= gc;
                std::erase_if(f, [](auto& kv) { return kv.second == 0; });
                changed = true;
                break;
            }
            if (changed) break;
        }
        if (!changed) return f;
    }
}

std::map<Perm, P3> gl3_schubert() {
    auto x = [](int a, int b, int c) { return P3{{Mono{a, b, c}, 1}}; };
    std::map<Perm, P3> s;
    s[Perm::identity(3)] = x(0, 0, 0);
    s[Perm::from_word(3, {1})] = x(1, 0, 0);
    P3 s2 = x(1, 0, 0);
    s2[{0, 1, 0}] = 1;
    s[Perm::from_word(3, {2})] = s2;
    s[Perm::from_word(3, {1, 2})] = x(1, 1, 0);
    s[Perm::from_word(3, {2, 1})] = x(2, 0, 0);
    s[Perm::longest(3)] = x(2, 1, 0);
    return s;
}

} // namespace

TEST_CASE("schubert: text form and basic ring structure") {
    SchubertRing R(WeylGroup({4}));
    auto c = 3 * R.basis(word(4, {1, 3, 2})) + R.basis(word(4, {2}));
    CHECK(c.str() == "3*s1.s3.s2 + 1*s2");
    CHECK(R.one().degree() == 0);
    CHECK(R.point().degree() == 12);
    CHECK((c - c).is_zero());
    CHECK(R.cup(R.one(), c) == c);
}

TEST_CASE("schubert: small product check") {
    SchubertRing R(WeylGroup({4}));
    CHECK(R.cup(R.basis(word(4, {2})), R.basis(word(4, {1, 2}))) == R.basis(word(4, {1, 3, 2})));
}

TEST_CASE("schubert: powers of sigma_{s1} and products of hat inverses") {
    for (int n = 2; n <= 6; ++n) {
        SchubertRing R(WeylGroup({n}));
        auto s1 = R.basis(word(n, {1}));
        auto hatinv = [&](int a) { return R.basis(one_factor(special_elements(n).hat[a - 1].inverse())); };
        auto p = s1;
        for (int k = 1; k <= n - 1; ++k) {
            std::vector<int> w;
            for (int i = k; i >= 1; --i) w.push_back(i);
            CHECK(p == R.basis(word(n, w)));
            CHECK(p == hatinv(k + 1));
            p = R.cup(p, s1);
        }
        CHECK(p.is_zero());
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                auto prod = R.cup(hatinv(a), hatinv(b));
                if (a + b <= n + 1) CHECK(prod == hatinv(a + b - 1));
                else CHECK(prod.is_zero());
            }
    }
}

TEST_CASE("schubert: products with check elements") {
    for (int r = 3; r <= 6; ++r) {
        SchubertRing R(WeylGroup({r}));
        auto chk = [&](int k) { return R.basis(word(r, desc(r, k))); };
        auto s = [&](int i) { return R.basis(word(r, {i})); };
        CHECK(R.cup(s(1), chk(1)).is_zero());
        for (int k = 1; k < r; ++k) CHECK(R.cup(s(k), chk(r)) == s(k));
        for (int k = 2; k <= r - 1; ++k) {
            auto w = desc(r, k + 1);
            w.push_back(k - 1);
            w.push_back(k);
            auto first = R.basis(word(r, w));
            CHECK(R.cup(s(k), chk(k)) == first);
            CHECK(R.cup(s(k - 1), chk(k)) == first + chk(k - 1));
            CHECK(chk(k - 1) == R.cup(s(k - 1) - s(k), chk(k)));
            auto prod = s(r - 1);
            for (int i = r - 2; i >= k - 1; --i) prod = R.cup(s(i) - s(i + 1), prod);
            CHECK(prod == chk(k - 1));
        }
    }
}

TEST_CASE("schubert: Chevalley formula agrees with cup by theta") {
    for (int n = 2; n <= 4; ++n) {
        SchubertRing R(WeylGroup({n}));
        std::vector<RatVec> weights{int_vec({3, 1, 0, -2}), int_vec({1, 0, 0, 0}), int_vec({0, 2, 2, 5}),
                                    int_vec({-1, 4, 1, 1})};
        for (auto mu : weights) {
            mu.resize(n);
            auto th = R.theta(mu);
            for (const auto& w : R.weyl().elements())
                CHECK(R.chevalley_mult(R.basis(w), mu) == R.cup(th, R.basis(w)));
        }
    }
}

TEST_CASE("schubert: GL3 products agree with coinvariant-algebra oracle") {
    auto S = gl3_schubert();
    std::vector<Perm> basis;
    for (auto& [p, _] : S) basis.push_back(p);
    std::map<Perm, P3> red;
    for (auto& [p, f] : S) red[p] = reduce(f);
    for (const auto& u : basis)
        for (const auto& v : basis) {
            P3 prod = reduce(mul(S[u], S[v]));
            // Solve prod = sum c_w red[w] over the Artin monomials.
            std::vector<Mono> monos;
            for (int b = 0; b <= 1; ++b)
                for (int c = 0; c <= 2; ++c) monos.push_back({0, b, c});
            const int N = 6;
            std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N + 1, 0));
            for (int i = 0; i < N; ++i) {
                for (int j = 0; j < N; ++j) {
                    auto it = red[basis[j]].find(monos[i]);
                    if (it != red[basis[j]].end()) M[i][j] = static_cast<long>(it->second);
                }
                auto it = prod.find(monos[i]);
                if (it != prod.end()) M[i][N] = static_cast<long>(it->second);
            }
            for (auto& [m, c] : prod) REQUIRE(std::find(monos.begin(), monos.end(), m) != monos.end());
            for (int c = 0; c < N; ++c) {
                int piv = c;
                while (M[piv][c] == 0) ++piv;
                std::swap(M[c], M[piv]);
                for (int i = 0; i < N; ++i)
                    if (i != c && M[i][c] != 0) {
                        Rational f = M[i][c] / M[c][c];
                        for (int j = c; j <= N; ++j) M[i][j] -= f * M[c][j];
                    }
            }
            std::map<Perm, long long> coef;
            for (int j = 0; j < N; ++j) {
                Rational c = M[j][N] / M[j][j];
                REQUIRE(c.get_den() == 1);
                if (c != 0) coef[basis[j]] = c.get_num().get_si();
            }
            CHECK(gl_product(u, v) == coef);
        }
}

TEST_CASE("schubert: commutativity, associativity, positivity, degree") {
    SchubertRing R(WeylGroup({2, 3}));
    auto els = R.weyl().elements();
    for (const auto& a : els)
        for (const auto& b : els) {
            auto ab = R.cup(R.basis(a), R.basis(b));
            CHECK(ab == R.cup(R.basis(b), R.basis(a)));
            for (auto& [w, c] : ab.terms) {
                CHECK(c > 0);
                CHECK(w.length() == a.length() + b.length());
            }
        }
    for (std::size_t i = 0; i < els.size(); i += 2)
        for (std::size_t j = 1; j < els.size(); j += 3)
            for (std::size_t k = 0; k < els.size(); k += 5) {
                auto a = R.basis(els[i]), b = R.basis(els[j]), c = R.basis(els[k]);
                CHECK(R.cup(R.cup(a, b), c) == R.cup(a, R.cup(b, c)));
            }
    for (int n = 2; n <= 4; ++n) {
        SchubertRing G(WeylGroup({n}));
        for (const auto& a : G.weyl().elements())
            for (const auto& b : G.weyl().elements())
                for (auto& [w, c] : G.cup(G.basis(a), G.basis(b)).terms) CHECK(c > 0);
    }
}

TEST_CASE("schubert: Poincare duality on flag and partial flag varieties") {
    std::vector<std::pair<std::vector<int>, RatVec>> cases{
        {{3}, int_vec({2, 1, 0})},   {{4}, int_vec({3, 2, 1, 0})}, {{4}, int_vec({1, 1, 0, 0})},
        {{4}, int_vec({2, 0, 0, 0})}, {{2, 2}, int_vec({1, 1, 3, 0})}, {{4}, int_vec({1, 1, -1, -1})}};
    for (auto& [deg, lam] : cases) {
        WeylGroup W(deg);
        SchubertRing R(W);
        auto pd = parabolic(W, lam);
        auto reps = max_coset_reps(W, pd);
        const int need = W.longest_length() + pd.w_lambda.length();
        int hits = 0;
        for (const auto& w : reps)
            for (const auto& wp : reps) {
                if (w.length() + wp.length() < need) continue;
                bool dual = duality_check(R, w, wp, pd);
                CHECK(dual == (wp == W.longest() * w * pd.w_lambda));
                hits += dual;
            }
        CHECK(hits == static_cast<int>(reps.size()));
    }
}

TEST_CASE("schubert: input validation") {
    SchubertRing R(WeylGroup({3}));
    CHECK_THROWS(R.theta({Rational(1, 2), 0, 0}));
    CHECK_THROWS(R.theta(int_vec({1, 0})));
    CHECK_THROWS(R.basis(word(4, {1})));
    CHECK_THROWS(SchubertRing(WeylGroup({7})));
}
