#include "orbitope/rootdata.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace orbitope {

std::string GroupFamily::str() const {
    switch (tag) {
    case Family::Sp2nR: return "sp:n=" + std::to_string(n);
    case Family::SUpq:
        if (u_coords) return "su:n=" + std::to_string(n) + ",q=1";
        return "su:p=" + std::to_string(p) + ",q=" + std::to_string(q);
    case Family::SOstar2n: return "so_star:n=" + std::to_string(n);
    case Family::SOp2: return "so:p=" + std::to_string(p);
    }
    return "";
}

GroupFamily parse_group(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("group spec needs a family prefix: " + spec);
    std::string name = spec.substr(0, colon);
    std::map<std::string, int> kv;
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("malformed group parameter: " + item);
        try {
            std::size_t used = 0;
            std::string val = item.substr(eq + 1);
            int v = std::stoi(val, &used);
            if (used != val.size()) throw std::invalid_argument(item);
            kv[item.substr(0, eq)] = v;
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed group parameter: " + item);
        }
    }
    auto get = [&](const char* k) {
        auto it = kv.find(k);
        if (it == kv.end()) throw std::invalid_argument(std::string("missing parameter ") + k + " in " + spec);
        return it->second;
    };
    auto only = [&](std::initializer_list<const char*> keys) {
        for (const auto& [k, _] : kv)
            if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }))
                throw std::invalid_argument("unexpected parameter " + k + " in " + spec);
    };
    GroupFamily f;
    if (name == "sp") {
        only({"n"});
        f.tag = Family::Sp2nR;
        f.n = get("n");
        if (f.n < 1) throw std::invalid_argument("Sp(2n,R) needs n >= 1");
    } else if (name == "su") {
        f.tag = Family::SUpq;
        if (kv.count("n")) {
            only({"n", "q"});
            if (kv.count("q") && kv["q"] != 1) throw std::invalid_argument("su:n=N form requires q=1");
            f.u_coords = true;
            f.n = get("n");
            f.p = f.n;
            f.q = 1;
            if (f.n < 1) throw std::invalid_argument("SU(n,1) needs n >= 1");
        } else {
            only({"p", "q"});
            f.p = get("p");
            f.q = get("q");
            if (f.q < 1 || f.p < f.q) throw std::invalid_argument("SU(p,q) needs p >= q >= 1");
        }
    } else if (name == "so_star") {
        only({"n"});
        f.tag = Family::SOstar2n;
        f.n = get("n");
        if (f.n < 3) throw std::invalid_argument("SO*(2n) needs n >= 3");
    } else if (name == "so") {
        only({"p"});
        f.tag = Family::SOp2;
        f.p = get("p");
        if (f.p < 3) throw std::invalid_argument("SO(p,2) needs p >= 3");
    } else {
        throw std::invalid_argument("unknown group family: " + name);
    }
    return f;
}

namespace {

RatVec unit(std::size_t d, std::size_t i, long c = 1) {
    RatVec v(d, 0);
    v[i] = c;
    return v;
}

void type_a_chamber(GroupData& g) {
    for (std::size_t f = 0; f < g.weyl.degrees().size(); ++f)
        for (int i = 1; i < g.weyl.degrees()[f]; ++i) {
            std::size_t k = g.weyl.offset(f) + i - 1;
            RatVec a = unit(g.dim, k + 1) - unit(g.dim, k);
            g.chamber.add(AffineIneq(a, 0));
            g.coroot_pairing.push_back({f, i, -a});
        }
}

} // namespace

GroupData build(const GroupFamily& f) {
    GroupData g;
    g.family = f;
    switch (f.tag) {
    case Family::Sp2nR: {
        const int n = f.n;
        g.dim = n;
        g.weyl = WeylGroup({n});
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) g.noncompact_pos.push_back(unit(n, i) + unit(n, j));
        for (int i = 0; i < n; ++i) g.schmid.push_back(unit(n, i, 2));
        break;
    }
    case Family::SUpq: {
        if (f.u_coords) {
            const int n = f.n;
            g.dim = n;
            g.weyl = WeylGroup({n});
            for (int k = 0; k < n; ++k) g.noncompact_pos.push_back(unit(n, k) + RatVec(n, 1));
            g.schmid.push_back(g.noncompact_pos[0]);
        } else {
            const int p = f.p, q = f.q, d = p + q;
            g.dim = d;
            g.weyl = WeylGroup({p, q});
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < q; ++j) g.noncompact_pos.push_back(unit(d, i) - unit(d, p + j));
            for (int j = 0; j < q; ++j) g.schmid.push_back(unit(d, j) - unit(d, d - 1 - j));
        }
        break;
    }
    case Family::SOstar2n: {
        const int n = f.n;
        g.dim = n;
        g.weyl = WeylGroup({n});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.noncompact_pos.push_back(unit(n, i) + unit(n, j));
        for (int j = 0; 2 * j + 1 < n; ++j) g.schmid.push_back(unit(n, 2 * j) + unit(n, 2 * j + 1));
        break;
    }
    case Family::SOp2: {
        const int m = f.p / 2, d = m + 1;
        const bool odd = f.p % 2 == 1;
        g.dim = d;
        g.sign_action = true;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                g.compact_pos.push_back(unit(d, i) - unit(d, j));
                g.compact_pos.push_back(unit(d, i) + unit(d, j));
            }
            if (odd) g.compact_pos.push_back(unit(d, i));
        }
        for (int i = 0; i < m; ++i) {
            g.noncompact_pos.push_back(unit(d, i) + unit(d, m));
            g.noncompact_pos.push_back(unit(d, m) - unit(d, i));
        }
        if (odd) g.noncompact_pos.push_back(unit(d, m));
        g.schmid = {unit(d, 0) + unit(d, m), unit(d, m) - unit(d, 0)};
        break;
    }
    }

    g.chamber = HPolyhedron(g.dim);
    if (g.type_a()) {
        for (std::size_t f2 = 0; f2 < g.weyl.degrees().size(); ++f2)
            for (int i = 0; i < g.weyl.degrees()[f2]; ++i)
                for (int j = i + 1; j < g.weyl.degrees()[f2]; ++j)
                    g.compact_pos.push_back(unit(g.dim, g.weyl.offset(f2) + i) - unit(g.dim, g.weyl.offset(f2) + j));
        type_a_chamber(g);
        if (f.tag == Family::SUpq && !f.u_coords) g.chamber.add(AffineIneq(RatVec(g.dim, 1), 0, true));
    } else {
        const int m = f.p / 2;
        for (int i = 0; i + 1 < m; ++i) g.chamber.add(AffineIneq(unit(g.dim, i + 1) - unit(g.dim, i), 0));
        if (f.p % 2 == 1) g.chamber.add(AffineIneq(unit(g.dim, m - 1, -1), 0));
        else if (m >= 2) g.chamber.add(AffineIneq(-(unit(g.dim, m - 2) + unit(g.dim, m - 1)), 0));
    }

    g.rho = RatVec(g.dim, 0);
    for (const auto& a : g.compact_pos) g.rho = g.rho + a;
    g.rho = Rational(1, 2) * g.rho;
    for (const auto& b : g.noncompact_pos) {
        g.weights_p_minus.push_back(-b);
        g.hol_chamber_strict.emplace_back(-b, 0);
    }
    return g;
}

bool in_chamber(const GroupData& g, const RatVec& v) {
    if (v.size() != g.dim) throw std::invalid_argument("vector dimension mismatch");
    return g.chamber.contains(v);
}

bool in_hol_chamber(const GroupData& g, const RatVec& v) {
    if (!in_chamber(g, v)) return false;
    return std::all_of(g.hol_chamber_strict.begin(), g.hol_chamber_strict.end(),
                       [&](const AffineIneq& c) { return dot(c.a, v) < c.b; });
}

HPolyhedron hol_closure(const GroupData& g) {
    HPolyhedron p = g.chamber;
    for (const auto& c : g.hol_chamber_strict) p.add(c);
    return p;
}

HPolyhedron schmid_cone(const GroupData& g) {
    const std::size_t d = g.dim, r = g.schmid.size();
    if (r == 0) {
        HPolyhedron p(d);
        for (std::size_t i = 0; i < d; ++i) p.add(AffineIneq(unit(d, i), 0, true));
        return p;
    }
    HPolyhedron sys(d + r);
    for (std::size_t k = 0; k < d; ++k) {
        RatVec a(d + r, 0);
        a[k] = 1;
        for (std::size_t i = 0; i < r; ++i) a[d + i] = -g.schmid[i][k];
        sys.add(AffineIneq(a, 0, true));
    }
    for (std::size_t i = 0; i < r; ++i) {
        RatVec a(d + r, 0);
        a[d + i] = -1;
        if (i + 1 < r) a[d + i + 1] = 1;
        sys.add(AffineIneq(a, 0));
    }
    return remove_redundant(fm_project(sys, d));
}

HPolyhedron root_cone(const GroupData& g, const RatVec& apex) {
    const std::size_t d = g.dim, r = g.noncompact_pos.size();
    HPolyhedron sys(d + r);
    for (std::size_t k = 0; k < d; ++k) {
        RatVec a(d + r, 0);
        a[k] = 1;
        for (std::size_t i = 0; i < r; ++i) a[d + i] = -g.noncompact_pos[i][k];
        sys.add(AffineIneq(a, apex[k], true));
    }
    for (std::size_t i = 0; i < r; ++i) sys.add(AffineIneq(-unit(d + r, i + d), 0));
    return remove_redundant(fm_project(sys, d));
}

bool is_root(const GroupData& g, const RatVec& v) {
    for (const auto* set : {&g.compact_pos, &g.noncompact_pos})
        for (const auto& a : *set)
            if (a == v || -a == v) return true;
    return false;
}

} // namespace orbitope
