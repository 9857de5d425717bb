#include "orbitope/horn.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace orbitope {

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

void check_subset(const std::vector<int>& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n) throw std::invalid_argument("index outside {1..n}");
        if (i && s[i] <= s[i - 1]) throw std::invalid_argument("index list not strictly increasing");
    }
}

std::mutex memo_mutex;
std::map<std::pair<int, int>, std::vector<HornTriple>> memo;

} // namespace

bool HornTriple::balanced() const {
    int k = r();
    return sum(I) + sum(J) == sum(L) + k * (k + 1) / 2;
}

std::vector<std::vector<int>> subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n) return out;
    std::vector<int> cur(r);
    std::iota(cur.begin(), cur.end(), 1);
    for (;;) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - r + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<HornTriple> enum_U(int r, int n) {
    if (r < 1 || r >= n || n > kHornMaxN) throw std::invalid_argument("Horn bounds violated: need 1 <= r < n <= 8");
    auto subs = subsets(n, r);
    std::vector<HornTriple> out;
    const int shift = r * (r + 1) / 2;
    for (const auto& I : subs)
        for (const auto& J : subs)
            for (const auto& L : subs)
                if (sum(I) + sum(J) == sum(L) + shift) out.push_back({n, I, J, L});
    return out;
}

static bool satisfies_smaller(const HornTriple& t) {
    const int r = t.r();
    for (int p = 1; p < r; ++p)
        for (const auto& s : enum_T(p, r)) {
            int lhs = 0, rhs = p * (p + 1) / 2;
            for (int f : s.I) lhs += t.I[f - 1];
            for (int g : s.J) lhs += t.J[g - 1];
            for (int h : s.L) rhs += t.L[h - 1];
            if (lhs > rhs) return false;
        }
    return true;
}

const std::vector<HornTriple>& enum_T(int r, int n) {
    if (r < 1 || r >= n || n > kHornMaxN) throw std::invalid_argument("Horn bounds violated: need 1 <= r < n <= 8");
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({r, n});
        if (it != memo.end()) return it->second;
    }
    // Smaller tables first, outside the lock.
    for (int p = 1; p < r; ++p) enum_T(p, r);
    std::vector<HornTriple> out;
    for (auto& t : enum_U(r, n))
        if (r == 1 || satisfies_smaller(t)) out.push_back(std::move(t));
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(std::make_pair(r, n), std::move(out)).first->second;
}

bool in_T(const HornTriple& t) {
    const int r = t.r();
    if (static_cast<int>(t.J.size()) != r || static_cast<int>(t.L.size()) != r)
        throw std::invalid_argument("index lists of unequal size");
    check_subset(t.I, t.n);
    check_subset(t.J, t.n);
    check_subset(t.L, t.n);
    if (r < 1 || r >= t.n) return false;
    if (!t.balanced()) return false;
    return r == 1 || satisfies_smaller(t);
}

bool horn_member(const Spectrum& alpha, const Spectrum& beta, const Spectrum& gamma) {
    const std::size_t n = alpha.size();
    if (beta.size() != n || gamma.size() != n) throw std::invalid_argument("spectrum length mismatch");
    if (n == 0) return true;
    Rational ta = 0, tb = 0, tc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ta += alpha[i];
        tb += beta[i];
        tc += gamma[i];
    }
    if (ta + tb != tc) return false;
    for (int r = 1; r < static_cast<int>(n); ++r)
        for (const auto& t : enum_T(r, static_cast<int>(n))) {
            Rational lhs = 0, rhs = 0;
            for (int i : t.I) lhs += alpha[i - 1];
            for (int j : t.J) lhs += beta[j - 1];
            for (int l : t.L) rhs += gamma[l - 1];
            if (lhs < rhs) return false;
        }
    return true;
}

bool lr_nonzero(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
    for (const auto* s : {&lam, &mu, &nu})
        for (const auto& x : *s)
            if (x.get_den() != 1) throw std::invalid_argument("LR weights must be integral");
    return horn_member(lam, mu, nu);
}

Spectrum lambda_of(const std::vector<int>& I) {
    const int r = static_cast<int>(I.size());
    Spectrum s(r);
    for (int k = 0; k < r; ++k) s[k] = I[r - 1 - k] - (r - k);
    return s;
}

bool triple_via_eigen(const HornTriple& t) {
    return horn_member(lambda_of(t.I), lambda_of(t.J), lambda_of(t.L));
}

nlohmann::json to_json(const HornTriple& t) { return nlohmann::json::array({t.I, t.J, t.L}); }

HornTriple triple_from_json(const nlohmann::json& j, int n) {
    HornTriple t{n, j.at(0).get<std::vector<int>>(), j.at(1).get<std::vector<int>>(), j.at(2).get<std::vector<int>>()};
    return t;
}

} // namespace orbitope
