#include "orbitope/exactmath.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbitope {

Rational parse_rational(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw std::invalid_argument("malformed rational: " + raw);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + raw);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_pretty(const Rational& q) { return q.get_str(); }

RatVec parse_ratvec(const std::string& csv) {
    RatVec v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    if (v.empty()) throw std::invalid_argument("empty vector");
    return v;
}

std::string ratvec_str(const RatVec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rational_pretty(v[i]);
    }
    return out;
}

RatVec int_vec(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

static void check_dims(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
}

Rational dot(const RatVec& a, const RatVec& b) {
    check_dims(a, b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    check_dims(a, b);
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    check_dims(a, b);
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec operator-(const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

RatVec operator*(const Rational& c, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool is_zero(const RatVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

RatVec primitive(const RatVec& v) {
    mpz_class l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& x : v) {
        mpz_class n = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(n);
    }
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = g == 0 ? Rational(0) : Rational(ints[i] / g);
    return r;
}

// ---------------------------------------------------------------- AffineIneq

AffineIneq AffineIneq::canonical() const {
    RatVec all = a;
    all.push_back(b);
    RatVec p = primitive(all);
    AffineIneq c(RatVec(p.begin(), p.end() - 1), p.back(), eq);
    if (eq) {
        auto lead = std::find_if(c.a.begin(), c.a.end(), [](const Rational& x) { return x != 0; });
        bool flip = lead != c.a.end() ? *lead < 0 : c.b < 0;
        if (flip) {
            c.a = -c.a;
            c.b = -c.b;
        }
    }
    return c;
}

bool AffineIneq::satisfied_by(const RatVec& x) const {
    Rational v = dot(a, x);
    return eq ? v == b : v <= b;
}

bool AffineIneq::trivial_true() const { return is_zero(a) && (eq ? b == 0 : b >= 0); }

bool AffineIneq::trivial_false() const { return is_zero(a) && (eq ? b != 0 : b < 0); }

bool operator<(const AffineIneq& x, const AffineIneq& y) {
    if (x.eq != y.eq) return x.eq > y.eq;
    if (x.a != y.a) return std::lexicographical_compare(x.a.begin(), x.a.end(), y.a.begin(), y.a.end());
    return x.b < y.b;
}

// --------------------------------------------------------------- HPolyhedron

HPolyhedron::HPolyhedron(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("polyhedron dimension must be positive");
}

HPolyhedron HPolyhedron::empty(std::size_t dim) {
    HPolyhedron p(dim);
    p.ineqs_ = {AffineIneq(RatVec(dim, 0), -1)};
    p.empty_ = true;
    return p;
}

bool HPolyhedron::add(const AffineIneq& raw) {
    if (raw.dim() != dim_) throw std::invalid_argument("constraint dimension mismatch");
    if (empty_) return false;
    if (raw.trivial_true()) return false;
    if (raw.trivial_false()) {
        *this = empty(dim_);
        return true;
    }
    AffineIneq c = raw.canonical();
    if (std::find(ineqs_.begin(), ineqs_.end(), c) != ineqs_.end()) return false;
    ineqs_.push_back(std::move(c));
    return true;
}

void HPolyhedron::add_all(const HPolyhedron& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("constraint dimension mismatch");
    if (other.empty_) {
        *this = empty(dim_);
        return;
    }
    for (const auto& c : other.ineqs_) add(c);
}

bool HPolyhedron::contains(const RatVec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("point dimension mismatch");
    return std::all_of(ineqs_.begin(), ineqs_.end(), [&](const AffineIneq& c) { return c.satisfied_by(x); });
}

// ------------------------------------------------------------------- simplex

namespace {

// Slack-form tableau: x_B[i] = b[i] - sum_j A[i][j] x_N[j],  z = v + sum_j c[j] x_N[j].
struct Tableau {
    std::size_t m, n;
    std::vector<RatVec> A;
    RatVec b, c;
    Rational v = 0;
    std::vector<std::size_t> B, N;

    void pivot(std::size_t l, std::size_t e) {
        Rational inv = 1 / A[l][e];
        for (std::size_t j = 0; j < n; ++j)
            if (j != e) A[l][j] *= inv;
        A[l][e] = inv;
        b[l] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == l || A[i][e] == 0) continue;
            Rational f = A[i][e];
            b[i] -= f * b[l];
            for (std::size_t j = 0; j < n; ++j)
                if (j != e) A[i][j] -= f * A[l][j];
            A[i][e] = -f * inv;
        }
        if (c[e] != 0) {
            Rational f = c[e];
            v += f * b[l];
            for (std::size_t j = 0; j < n; ++j)
                if (j != e) c[j] -= f * A[l][j];
            c[e] = -f * inv;
        }
        std::swap(B[l], N[e]);
    }

    // Returns false when unbounded.
    bool optimize() {
        for (;;) {
            std::size_t e = n;
            for (std::size_t j = 0; j < n; ++j)
                if (c[j] > 0 && (e == n || N[j] < N[e])) e = j;
            if (e == n) return true;
            std::size_t l = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (A[i][e] <= 0) continue;
                Rational r = b[i] / A[i][e];
                if (l == m || r < best || (r == best && B[i] < B[l])) {
                    l = i;
                    best = r;
                }
            }
            if (l == m) return false;
            pivot(l, e);
        }
    }
};

// max c.y  s.t.  A y <= b, y >= 0.
LpResult simplex_nonneg(const std::vector<RatVec>& A, const RatVec& b, const RatVec& c) {
    const std::size_t m = A.size(), n = c.size();
    Tableau t{m, n, A, b, RatVec(n, 0), 0, {}, {}};
    for (std::size_t j = 0; j < n; ++j) t.N.push_back(j);
    for (std::size_t i = 0; i < m; ++i) t.B.push_back(n + i);

    std::size_t lmin = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (b[i] < b[lmin]) lmin = i;
    if (m > 0 && b[lmin] < 0) {
        const std::size_t aux = n + m;
        for (auto& row : t.A) row.push_back(-1);
        t.N.push_back(aux);
        t.c.push_back(-1);
        t.n = n + 1;
        t.pivot(lmin, n);
        t.optimize();
        if (t.v < 0) return {LpStatus::Infeasible, 0, {}};
        auto bpos = std::find(t.B.begin(), t.B.end(), aux);
        if (bpos != t.B.end()) {
            std::size_t l = bpos - t.B.begin(), e = t.n;
            for (std::size_t j = 0; j < t.n; ++j)
                if (t.A[l][j] != 0 && (e == t.n || t.N[j] < t.N[e])) e = j;
            if (e < t.n) {
                t.pivot(l, e);
            } else {
                t.A.erase(t.A.begin() + l);
                t.b.erase(t.b.begin() + l);
                t.B.erase(t.B.begin() + l);
                --t.m;
            }
        }
        auto npos = std::find(t.N.begin(), t.N.end(), aux);
        if (npos != t.N.end()) {
            std::size_t col = npos - t.N.begin();
            for (auto& row : t.A) row.erase(row.begin() + col);
            t.N.erase(npos);
        }
        t.n = t.N.size();
        t.c.assign(t.n, 0);
        t.v = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (c[k] == 0) continue;
            auto np = std::find(t.N.begin(), t.N.end(), k);
            if (np != t.N.end()) {
                t.c[np - t.N.begin()] += c[k];
            } else {
                std::size_t i = std::find(t.B.begin(), t.B.end(), k) - t.B.begin();
                t.v += c[k] * t.b[i];
                for (std::size_t j = 0; j < t.n; ++j) t.c[j] -= c[k] * t.A[i][j];
            }
        }
    } else {
        t.c = c;
    }
    if (!t.optimize()) return {LpStatus::Unbounded, 0, {}};
    RatVec y(n, 0);
    for (std::size_t i = 0; i < t.m; ++i)
        if (t.B[i] < n) y[t.B[i]] = t.b[i];
    return {LpStatus::Optimal, t.v, y};
}

} // namespace

LpResult lp_maximize(const HPolyhedron& sys, const RatVec& c) {
    const std::size_t d = sys.dim();
    if (c.size() != d) throw std::invalid_argument("objective dimension mismatch");
    for (const auto& k : sys.ineqs())
        if (k.dim() != d) throw std::invalid_argument("constraint dimension mismatch");
    if (sys.is_empty_marker()) return {LpStatus::Infeasible, 0, {}};

    // Reduced row echelon form of the equalities.
    std::vector<RatVec> E;
    for (const auto& k : sys.ineqs())
        if (k.eq) {
            RatVec row = k.a;
            row.push_back(k.b);
            E.push_back(row);
        }
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t col = 0; col < d && r < E.size(); ++col) {
        std::size_t p = r;
        while (p < E.size() && E[p][col] == 0) ++p;
        if (p == E.size()) continue;
        std::swap(E[p], E[r]);
        Rational inv = 1 / E[r][col];
        for (auto& x : E[r]) x *= inv;
        for (std::size_t i = 0; i < E.size(); ++i) {
            if (i == r || E[i][col] == 0) continue;
            Rational f = E[i][col];
            for (std::size_t j = 0; j <= d; ++j) E[i][j] -= f * E[r][j];
        }
        pivcol.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < E.size(); ++i)
        if (E[i][d] != 0) return {LpStatus::Infeasible, 0, {}};

    // x = x0 + T y over the free coordinates.
    std::vector<std::size_t> freecol;
    std::vector<bool> is_piv(d, false);
    for (auto col : pivcol) is_piv[col] = true;
    for (std::size_t j = 0; j < d; ++j)
        if (!is_piv[j]) freecol.push_back(j);
    const std::size_t k = freecol.size();
    RatVec x0(d, 0);
    std::vector<RatVec> T(d, RatVec(k, 0));
    for (std::size_t f = 0; f < k; ++f) T[freecol[f]][f] = 1;
    for (std::size_t i = 0; i < r; ++i) {
        x0[pivcol[i]] = E[i][d];
        for (std::size_t f = 0; f < k; ++f) T[pivcol[i]][f] = -E[i][freecol[f]];
    }
    auto reduce = [&](const RatVec& a) {
        RatVec out(k, 0);
        for (std::size_t j = 0; j < d; ++j) {
            if (a[j] == 0) continue;
            for (std::size_t f = 0; f < k; ++f) out[f] += a[j] * T[j][f];
        }
        return out;
    };

    std::vector<RatVec> A;
    RatVec bvec;
    for (const auto& con : sys.ineqs()) {
        if (con.eq) continue;
        RatVec ar = reduce(con.a);
        Rational br = con.b - dot(con.a, x0);
        if (k == 0) {
            if (br < 0) return {LpStatus::Infeasible, 0, {}};
            continue;
        }
        RatVec row(2 * k);
        for (std::size_t f = 0; f < k; ++f) {
            row[f] = ar[f];
            row[k + f] = -ar[f];
        }
        A.push_back(std::move(row));
        bvec.push_back(br);
    }
    if (k == 0) return {LpStatus::Optimal, dot(c, x0), x0};

    RatVec cr = reduce(c), cs(2 * k);
    for (std::size_t f = 0; f < k; ++f) {
        cs[f] = cr[f];
        cs[k + f] = -cr[f];
    }
    LpResult res = simplex_nonneg(A, bvec, cs);
    if (res.status != LpStatus::Optimal) return res;
    RatVec x = x0;
    for (std::size_t f = 0; f < k; ++f) {
        Rational y = res.point[f] - res.point[k + f];
        if (y == 0) continue;
        for (std::size_t j = 0; j < d; ++j) x[j] += T[j][f] * y;
    }
    return {LpStatus::Optimal, res.value + dot(c, x0), x};
}

bool lp_feasible(const HPolyhedron& sys) {
    return lp_maximize(sys, RatVec(sys.dim(), 0)).status != LpStatus::Infeasible;
}

std::optional<RatVec> lp_witness(const HPolyhedron& sys) {
    auto r = lp_maximize(sys, RatVec(sys.dim(), 0));
    if (r.status != LpStatus::Optimal) return std::nullopt;
    return r.point;
}

bool implies(const HPolyhedron& sys, const AffineIneq& c) {
    if (c.dim() != sys.dim()) throw std::invalid_argument("constraint dimension mismatch");
    auto hi = lp_maximize(sys, c.a);
    if (hi.status == LpStatus::Infeasible) return true;
    if (hi.status == LpStatus::Unbounded || hi.value > c.b) return false;
    if (!c.eq) return true;
    auto lo = lp_maximize(sys, -c.a);
    return lo.status == LpStatus::Optimal && -lo.value >= c.b;
}

std::vector<bool> irredundant_mask(const HPolyhedron& sys) {
    const auto& cs = sys.ineqs();
    std::vector<bool> keep(cs.size(), true);
    if (sys.is_empty_marker()) return keep;
    if (!lp_feasible(sys)) {
        std::fill(keep.begin(), keep.end(), false);
        return keep;
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
        HPolyhedron rest(sys.dim());
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (j != i && keep[j]) rest.add(cs[j]);
        if (implies(rest, cs[i])) keep[i] = false;
    }
    return keep;
}

HPolyhedron remove_redundant(const HPolyhedron& sys) {
    if (sys.is_empty_marker()) return sys;
    if (!lp_feasible(sys)) return HPolyhedron::empty(sys.dim());
    auto keep = irredundant_mask(sys);
    HPolyhedron out(sys.dim());
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (keep[i]) out.add(sys.ineqs()[i]);
    return out;
}

bool poly_subset(const HPolyhedron& p, const HPolyhedron& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("polyhedron dimension mismatch");
    if (!lp_feasible(p)) return true;
    return std::all_of(q.ineqs().begin(), q.ineqs().end(), [&](const AffineIneq& c) { return implies(p, c); });
}

bool poly_equal(const HPolyhedron& p, const HPolyhedron& q) {
    return poly_subset(p, q) && poly_subset(q, p);
}

// ----------------------------------------------------------- Fourier-Motzkin

HPolyhedron fm_eliminate(const HPolyhedron& sys, std::size_t var) {
    const std::size_t d = sys.dim();
    if (var >= d) throw std::invalid_argument("variable index out of range");
    if (sys.is_empty_marker()) return sys;
    const auto& cs = sys.ineqs();
    HPolyhedron out(d);

    auto pivot = std::find_if(cs.begin(), cs.end(), [&](const AffineIneq& c) { return c.eq && c.a[var] != 0; });
    if (pivot != cs.end()) {
        const AffineIneq& e = *pivot;
        for (const auto& c : cs) {
            if (&c == &e) continue;
            if (c.a[var] == 0) {
                out.add(c);
                continue;
            }
            Rational f = c.a[var] / e.a[var];
            AffineIneq s(c.a - f * e.a, c.b - f * e.b, c.eq);
            s.a[var] = 0;
            out.add(s);
        }
        return out;
    }

    std::vector<const AffineIneq*> pos, neg;
    for (const auto& c : cs) {
        if (c.a[var] > 0) pos.push_back(&c);
        else if (c.a[var] < 0) neg.push_back(&c);
        else out.add(c);
    }
    for (auto* p : pos)
        for (auto* n : neg) {
            Rational fp = -n->a[var], fn = p->a[var];
            AffineIneq s(fp * p->a + fn * n->a, fp * p->b + fn * n->b);
            s.a[var] = 0;
            out.add(s);
        }
    return out;
}

bool fm_feasible(const HPolyhedron& sys) {
    HPolyhedron cur = sys;
    for (std::size_t v = 0; v < sys.dim() && !cur.is_empty_marker(); ++v) cur = fm_eliminate(cur, v);
    return !cur.is_empty_marker();
}

HPolyhedron fm_project(const HPolyhedron& sys, std::size_t k) {
    if (k == 0 || k > sys.dim()) throw std::invalid_argument("projection size out of range");
    HPolyhedron cur = sys;
    for (std::size_t v = sys.dim(); v-- > k;) {
        cur = fm_eliminate(cur, v);
        if (!cur.is_empty_marker() && cur.size() > 24) cur = remove_redundant(cur);
    }
    if (cur.is_empty_marker()) return HPolyhedron::empty(k);
    HPolyhedron out(k);
    for (const auto& c : cur.ineqs()) out.add(AffineIneq(RatVec(c.a.begin(), c.a.begin() + k), c.b, c.eq));
    return out;
}

// ---------------------------------------------------------------------- JSON

nlohmann::json to_json(const AffineIneq& c) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : c.a) a.push_back(rational_str(x));
    return {{"a", a}, {"b", rational_str(c.b)}, {"eq", c.eq}};
}

nlohmann::json to_json(const HPolyhedron& p) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : p.ineqs()) cs.push_back(to_json(c));
    return {{"dim", p.dim()}, {"ineqs", cs}};
}

AffineIneq ineq_from_json(const nlohmann::json& j) {
    AffineIneq c;
    for (const auto& x : j.at("a")) c.a.push_back(parse_rational(x.get<std::string>()));
    c.b = parse_rational(j.at("b").get<std::string>());
    c.eq = j.value("eq", false);
    return c;
}

HPolyhedron poly_from_json(const nlohmann::json& j) {
    std::size_t d = j.at("dim").get<std::size_t>();
    HPolyhedron p(d);
    for (const auto& c : j.at("ineqs")) p.add(ineq_from_json(c));
    return p;
}

} // namespace orbitope
