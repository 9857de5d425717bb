#include "orbitope/admissible.hpp"

#include <numeric>
#include <stdexcept>

#include "orbitope/horn.hpp"

namespace orbitope {

namespace {

bool full_su(const GroupData& g) { return g.family.tag == Family::SUpq && !g.family.u_coords; }

// Row-reduces in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& m, std::size_t cols) {
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != row && m[i][c] != 0) {
                Rational f = m[i][c];
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[row][j];
            }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

int rank_of(std::vector<RatVec> rows, std::size_t cols) { return static_cast<int>(rref(rows, cols).size()); }

// Generator of a one-dimensional kernel, or empty.
RatVec line_kernel(std::vector<RatVec> rows, std::size_t cols) {
    auto piv = rref(rows, cols);
    if (piv.size() + 1 != cols) return {};
    std::size_t free = 0;
    while (free < piv.size() && piv[free] == free) ++free;
    RatVec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][free];
    return primitive(v);
}

RatVec repeat(std::initializer_list<std::pair<int, long>> blocks) {
    RatVec v;
    for (auto [count, value] : blocks)
        for (int i = 0; i < count; ++i) v.push_back(value);
    return v;
}

} // namespace

int admissible_rank(const GroupData& g) { return static_cast<int>(g.dim) - (full_su(g) ? 1 : 0); }

int zero_span_dim(const GroupData& g, const OneParamSubgroup& lam) {
    std::vector<RatVec> rows;
    for (const auto& b : g.noncompact_pos)
        if (dot(lam, b) == 0) rows.push_back(b);
    return rows.empty() ? 0 : rank_of(rows, g.dim);
}

bool is_admissible(const GroupData& g, const OneParamSubgroup& lam) {
    if (lam.size() != g.dim || is_zero(lam)) return false;
    if (full_su(g)) {
        Rational t = 0;
        for (const auto& x : lam) t += x;
        if (t != 0) return false;
    }
    return zero_span_dim(g, lam) == admissible_rank(g) - 1;
}

AdmissibleSet enumerate_admissible(const GroupData& g) {
    const int k = admissible_rank(g) - 1;
    const auto& roots = g.noncompact_pos;
    const int nr = static_cast<int>(roots.size());
    AdmissibleSet out;
    if (k > nr) return out;
    auto subs = k == 0 ? std::vector<std::vector<int>>{{}} : subsets(nr, k);
    if (subs.size() > 100000) throw std::length_error("admissible subset enumeration exceeds 1e5 subsets");
    for (const auto& s : subs) {
        std::vector<RatVec> rows;
        for (int i : s) rows.push_back(roots[i - 1]);
        if (full_su(g)) rows.push_back(RatVec(g.dim, 1));
        RatVec v = line_kernel(rows, g.dim);
        if (v.empty()) continue;
        for (const RatVec& c : {v, -v})
            if (in_chamber(g, c)) out.insert(c);
    }
    return out;
}

AdmissibleSet closed_form_admissible(const GroupData& g) {
    const auto& f = g.family;
    AdmissibleSet out;
    switch (f.tag) {
    case Family::Sp2nR: {
        const int n = f.n;
        out.insert(repeat({{1, 1}, {n - 1, 0}}));
        out.insert(repeat({{n - 1, 0}, {1, -1}}));
        for (int k = 1; k <= n - 1; ++k)
            for (int l = 1; l <= n - k; ++l) out.insert(repeat({{k, 1}, {n - k - l, 0}, {l, -1}}));
        break;
    }
    case Family::SOstar2n: {
        const int n = f.n;
        if (n == 3) {
            out.insert(int_vec({1, -1, -1}));
            out.insert(int_vec({1, 1, -1}));
            break;
        }
        out.insert(repeat({{1, 1}, {n - 1, 0}}));
        out.insert(repeat({{n - 1, 0}, {1, -1}}));
        for (int k = 1; k <= n - 1; ++k) out.insert(repeat({{k, 1}, {n - k, -1}}));
        for (int k = 1; k <= n - 4; ++k)
            for (int l = 1; l <= n - k - 3; ++l) out.insert(repeat({{k, 1}, {n - k - l, 0}, {l, -1}}));
        break;
    }
    case Family::SUpq: {
        if (f.u_coords) {
            const int n = f.n;
            out.insert(repeat({{1, n}, {n - 1, -1}}));
            out.insert(repeat({{n - 1, 1}, {1, -n}}));
            break;
        }
        const int p = f.p, q = f.q, s = p + q;
        out.insert(repeat({{1, s - 1}, {p - 1, -1}, {q, -1}}));
        out.insert(repeat({{p - 1, 1}, {1, 1 - s}, {q, 1}}));
        if (q >= 2) {
            out.insert(repeat({{p, 1}, {q - 1, 1}, {1, 1 - s}}));
            out.insert(repeat({{p, -1}, {1, s - 1}, {q - 1, -1}}));
            for (int k = 1; k <= p - 1; ++k)
                for (int l = 1; l <= q - 1; ++l) {
                    const long d = std::gcd(s - k - l, k + l);
                    const long a = (s - k - l) / d, b = -(k + l) / d;
                    out.insert(repeat({{k, a}, {p - k, b}, {l, a}, {q - l, b}}));
                }
        }
        break;
    }
    case Family::SOp2: {
        const int m = f.p / 2;
        out.insert(repeat({{1, 1}, {m - 1, 0}, {1, 0}}));
        for (long e : {1L, -1L}) {
            out.insert(repeat({{m, 1}, {1, e}}));
            if (f.p % 2 == 0) out.insert(repeat({{m - 1, 1}, {1, -1}, {1, e}}));
        }
        break;
    }
    }
    return out;
}

} // namespace orbitope
