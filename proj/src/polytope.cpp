#include "orbitope/polytope.hpp"

#include <algorithm>
#include <mutex>

#include "orbitope/horn.hpp"
#include "orbitope/parallel.hpp"

namespace orbitope {

namespace {

void validate(const GroupData& g, const RatVec& Lambda) {
    if (!g.type_a()) throw UnsupportedFamily("unsupported family for polytope assembly: " + g.key());
    if (Lambda.size() != g.dim)
        throw std::invalid_argument("Lambda has " + std::to_string(Lambda.size()) + " coordinates, expected " +
                                    std::to_string(g.dim));
    if (!in_hol_chamber(g, Lambda)) throw std::domain_error("Lambda must lie strictly inside the holomorphic chamber");
}

// <a, xi> >= b
AffineIneq ge(const RatVec& a, const Rational& b) { return AffineIneq(-a, -b); }

RatVec vec(std::initializer_list<long> xs) { return int_vec(xs); }

OrbitPolytope finish(const GroupData& g, const RatVec& Lambda, std::vector<Provenance> sources) {
    HPolyhedron raw(g.dim);
    for (auto& s : sources) {
        s.ineq = s.ineq.canonical();
        raw.add(s.ineq);
    }
    HPolyhedron sys = remove_redundant(raw);
    OrbitPolytope p{g, Lambda, sys, {}, {}};
    for (const auto& c : sys.ineqs()) {
        auto it = std::find_if(sources.begin(), sources.end(), [&](const Provenance& s) { return s.ineq == c; });
        Provenance pr = it != sources.end() ? *it : Provenance{};
        pr.ineq = c;
        p.provenance.push_back(pr);
    }
    for (const auto& s : sources)
        if (std::find(sys.ineqs().begin(), sys.ineqs().end(), s.ineq) == sys.ineqs().end()) p.dropped.push_back(s);
    return p;
}

std::vector<Provenance> chamber_sources(const GroupData& g) {
    std::vector<Provenance> out;
    for (const auto& c : g.chamber.ineqs()) out.push_back({true, {}, {}, {}, c});
    return out;
}

std::string term(const Rational& c, std::size_t i, bool first) {
    std::string s;
    Rational a = c;
    if (a < 0) {
        s = first ? "-" : " - ";
        a = -a;
    } else if (!first) {
        s = " + ";
    }
    if (a != 1) s += rational_pretty(a) + "*";
    return s + "xi" + std::to_string(i + 1);
}

} // namespace

OrbitPolytope assemble(const GroupData& g, const RatVec& Lambda, PairMode mode) {
    validate(g, Lambda);
    auto adm = enumerate_admissible(g);
    std::vector<OneParamSubgroup> lams(adm.begin(), adm.end());
    std::vector<std::vector<WCPair>> pairs(lams.size());
    parallel_for(lams.size(), [&](std::size_t i) {
        pairs[i] = mode == PairMode::WellCovering ? enumerate_m0(g, lams[i]) : enumerate_dominant_m0(g, lams[i]);
    });
    std::vector<Provenance> sources = chamber_sources(g);
    const WeylElt w0 = g.weyl.longest();
    for (const auto& ps : pairs)
        for (const auto& p : ps) {
            RatVec a = g.weyl.act(p.w, p.lam);
            Rational b = dot(g.weyl.act(w0 * p.w_prime, p.lam), Lambda);
            sources.push_back({false, p.lam, p.w, p.w_prime, AffineIneq(a, b)});
        }
    return finish(g, Lambda, std::move(sources));
}

bool has_closed_form(const GroupData& g) {
    const auto& f = g.family;
    switch (f.tag) {
    case Family::Sp2nR: return true;
    case Family::SUpq: return f.u_coords || (f.p == 2 && f.q == 2);
    case Family::SOstar2n: return f.n == 3 || f.n == 4;
    case Family::SOp2: return false;
    }
    return false;
}

OrbitPolytope closed_form(const GroupData& g, const RatVec& Lambda) {
    if (!has_closed_form(g)) throw NoClosedForm("no closed form for " + g.key());
    validate(g, Lambda);
    const auto& f = g.family;
    const auto& L = Lambda;
    std::vector<AffineIneq> cs;
    switch (f.tag) {
    case Family::Sp2nR:
        for (std::size_t i = 0; i < g.dim; ++i) {
            RatVec e(g.dim, 0);
            e[i] = 1;
            cs.push_back(ge(e, L[i]));
        }
        break;
    case Family::SUpq:
        if (f.u_coords) {
            const int n = f.n;
            auto lam = [&](int k) {
                RatVec v(n, -1);
                v[k - 1] += n + 1;
                return v;
            };
            for (int k = 1; k <= n; ++k) cs.push_back(ge(lam(k), dot(lam(k), L)));
            for (int k = 1; k < n; ++k) cs.push_back(AffineIneq(lam(k + 1), dot(lam(k), L)));
        } else {
            cs.push_back(ge(vec({1, 0, 0, 0}), L[0]));
            cs.push_back(ge(vec({0, 1, 0, 0}), L[1]));
            cs.push_back(AffineIneq(vec({0, 0, 1, 0}), L[2]));
            cs.push_back(AffineIneq(vec({0, 0, 0, 1}), L[3]));
            RatVec u = vec({1, -1, -1, 1}), v = vec({-1, 1, -1, 1});
            Rational bu = L[0] - L[1] + L[2] - L[3];
            cs.push_back(AffineIneq(u, bu));
            cs.push_back(AffineIneq(-u, bu));
            Rational t = L[0] - L[1] - L[2] + L[3];
            cs.push_back(AffineIneq(v, -abs(t)));
        }
        break;
    case Family::SOstar2n:
        if (f.n == 3) {
            cs.push_back(ge(vec({-1, 1, 1}), -L[0] + L[1] + L[2]));
            cs.push_back(ge(vec({1, -1, 1}), L[0] - L[1] + L[2]));
            cs.push_back(ge(vec({1, 1, -1}), L[0] + L[1] - L[2]));
            cs.push_back(ge(vec({1, -1, -1}), -L[0] + L[1] - L[2]));
            cs.push_back(ge(vec({-1, 1, -1}), -L[0] - L[1] + L[2]));
        } else {
            auto le = [&](RatVec a, RatVec c) { cs.push_back(AffineIneq(a, dot(c, L))); };
            le(vec({1, -1, 1, -1}), vec({1, 1, -1, -1}));
            le(vec({-1, 1, 1, -1}), vec({1, -1, 1, -1}));
            le(vec({1, -1, -1, 1}), vec({1, -1, 1, -1}));
            le(vec({-1, 1, -1, 1}), vec({-1, 1, 1, -1}));
            le(vec({-1, 1, -1, 1}), vec({1, -1, -1, 1}));
            le(vec({-1, -1, 1, 1}), vec({-1, 1, -1, 1}));
            for (const RatVec& a : {vec({-1, 1, 1, 1}), vec({1, -1, 1, 1}), vec({1, 1, -1, 1}), vec({1, 1, 1, -1}),
                                    vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})})
                cs.push_back(ge(a, dot(a, L)));
        }
        break;
    case Family::SOp2: break;
    }
    std::vector<Provenance> sources = chamber_sources(g);
    for (const auto& c : cs) sources.push_back({false, {}, {}, {}, c});
    return finish(g, Lambda, std::move(sources));
}

std::optional<RatVec> horn_oracle_witness(const GroupData& g, const RatVec& Lambda, const RatVec& mu) {
    if (!g.type_a()) throw UnsupportedFamily("unsupported family for the Horn oracle: " + g.key());
    if (Lambda.size() != g.dim || mu.size() != g.dim) throw std::invalid_argument("vector dimension mismatch");
    if (!in_chamber(g, mu)) return std::nullopt;
    const std::size_t r = g.schmid.size();
    HPolyhedron sys(r);
    for (std::size_t i = 0; i < r; ++i) {
        RatVec a(r, 0);
        a[i] = -1;
        if (i + 1 < r) a[i + 1] = 1;
        sys.add(AffineIneq(a, 0));
    }
    // delta_k(m) = sum_i m_i gamma_i[k], as a row over m.
    auto delta_row = [&](std::size_t k) {
        RatVec a(r, 0);
        for (std::size_t i = 0; i < r; ++i) a[i] = g.schmid[i][k];
        return a;
    };
    const auto& deg = g.weyl.degrees();
    for (std::size_t f = 0; f < deg.size(); ++f) {
        const int n = deg[f], off = g.weyl.offset(f);
        std::vector<Rational> m_f(n), lstar(n);
        for (int i = 0; i < n; ++i) {
            m_f[i] = mu[off + i];
            lstar[i] = -Lambda[off + n - 1 - i];
        }
        RatVec tr(r, 0);
        Rational rhs = 0;
        for (int i = 0; i < n; ++i) {
            tr = tr + delta_row(off + i);
            rhs += m_f[i] + lstar[i];
        }
        sys.add(AffineIneq(tr, rhs, true));
        if (n > kHornMaxN) throw std::invalid_argument("factor too large for the Horn tables");
        for (int k = 1; k < n; ++k)
            for (const auto& t : enum_T(k, n)) {
                RatVec a(r, 0);
                Rational b = 0;
                for (int i : t.I) b += m_f[i - 1];
                for (int j : t.J) b += lstar[j - 1];
                for (int l : t.L) a = a + delta_row(off + l - 1);
                sys.add(AffineIneq(a, b));
            }
    }
    return lp_witness(sys);
}

bool horn_oracle_member(const GroupData& g, const RatVec& Lambda, const RatVec& mu) {
    return horn_oracle_witness(g, Lambda, mu).has_value();
}

bool member(const OrbitPolytope& p, const RatVec& xi) {
    if (xi.size() != p.system.dim()) throw std::invalid_argument("point dimension mismatch");
    return p.system.contains(xi);
}

CrossCheckReport cross_check(const GroupData& g, const RatVec& Lambda, int radius) {
    auto poly = assemble(g, Lambda);
    std::optional<OrbitPolytope> cf;
    CrossCheckReport rep;
    if (has_closed_form(g)) {
        cf = closed_form(g, Lambda);
        rep.closed_form_checked = true;
        rep.closed_form_equal = poly_equal(poly.system, cf->system);
    }
    const int steps = 4 * radius + 1, d = static_cast<int>(g.dim);
    std::vector<RatVec> pts;
    std::vector<int> idx(d, 0);
    for (;;) {
        RatVec x(d);
        for (int i = 0; i < d; ++i) x[i] = Lambda[i] + Rational(idx[i] - 2 * radius, 2);
        if (in_chamber(g, x)) pts.push_back(x);
        int i = 0;
        while (i < d && idx[i] == steps - 1) idx[i++] = 0;
        if (i == d) break;
        ++idx[i];
    }
    std::vector<char> in(pts.size()), agree(pts.size()), cf_agree(pts.size(), 1);
    parallel_for(pts.size(), [&](std::size_t k) {
        bool a = member(poly, pts[k]);
        in[k] = a;
        agree[k] = a == horn_oracle_member(g, Lambda, pts[k]);
        if (cf) cf_agree[k] = a == member(*cf, pts[k]);
    });
    rep.points = pts.size();
    for (std::size_t k = 0; k < pts.size(); ++k) {
        rep.inside += in[k];
        if (!agree[k]) rep.disagreements.push_back(pts[k]);
        if (!cf_agree[k]) rep.closed_form_disagreements.push_back(pts[k]);
    }
    return rep;
}

PropertyReport check_properties(const GroupData& g, const RatVec& Lambda) {
    auto p = assemble(g, Lambda);
    PropertyReport r;
    r.contains_lambda = member(p, Lambda);
    r.in_root_cone = poly_subset(p.system, root_cone(g, Lambda));
    r.in_hol_closure = poly_subset(p.system, hol_closure(g));
    r.relaxed_equal = poly_equal(assemble(g, Lambda, PairMode::Dominant).system, p.system);
    return r;
}

std::string ineq_text(const AffineIneq& c) {
    RatVec a = c.eq ? c.a : -c.a;
    Rational b = c.eq ? c.b : -c.b;
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) {
            s += term(a[i], i, s.empty());
        }
    if (s.empty()) s = "0";
    return s + (c.eq ? " = " : " >= ") + rational_pretty(b);
}

std::string polytope_text(const OrbitPolytope& p) {
    std::vector<std::pair<bool, AffineIneq>> rows;
    for (const auto& pr : p.provenance) {
        bool wall = std::find(p.group.chamber.ineqs().begin(), p.group.chamber.ineqs().end(), pr.ineq) !=
                    p.group.chamber.ineqs().end();
        rows.push_back({wall, pr.ineq});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first;
        if (x.second.eq != y.second.eq) return x.second.eq;
        RatVec nx = -x.second.a, ny = -y.second.a;
        if (nx != ny) return ny < nx;
        return x.second.b < y.second.b;
    });
    std::string s;
    for (const auto& [wall, c] : rows) s += (s.empty() ? "" : "; ") + ineq_text(c);
    return s;
}

nlohmann::json to_json(const OrbitPolytope& p) {
    nlohmann::json lam = nlohmann::json::array(), prov = nlohmann::json::array();
    for (const auto& x : p.Lambda) lam.push_back(rational_str(x));
    auto record = [](const Provenance& pr) {
        if (pr.chamber) return nlohmann::json{{"source", "chamber"}, {"ineq", to_json(pr.ineq)}};
        if (pr.lam.empty()) return nlohmann::json{{"source", "closed_form"}, {"ineq", to_json(pr.ineq)}};
        nlohmann::json l = nlohmann::json::array();
        for (const auto& x : pr.lam) l.push_back(x.get_num().get_si());
        return nlohmann::json{{"source", "pair"},
                              {"lambda", l},
                              {"w", pr.w.str()},
                              {"w_prime", pr.w_prime.str()},
                              {"ineq", to_json(pr.ineq)}};
    };
    for (const auto& pr : p.provenance) prov.push_back(record(pr));
    nlohmann::json dropped = nlohmann::json::array();
    for (const auto& pr : p.dropped) dropped.push_back(record(pr));
    nlohmann::json sys = to_json(p.system);
    return {{"group", p.group.key()},
            {"Lambda", lam},
            {"ineqs", sys["ineqs"]},
            {"dim", p.system.dim()},
            {"provenance", prov},
            {"dropped", dropped}};
}

} // namespace orbitope
