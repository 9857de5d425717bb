#include "orbitope/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "orbitope/horn.hpp"
#include "orbitope/polytope.hpp"
#include "orbitope/svg.hpp"

namespace orbitope {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string group, lambda, xi, lam, format = "text", out, mode = "strict";
    int n = 0, r = 0, radius = 4, extent = 6;
    bool closed = false;
};

GroupData group_of(const Options& o) {
    try {
        return build(o.group);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --group: ") + e.what());
    }
}

RatVec vec_of(const std::string& flag, const std::string& s, const GroupData& g) {
    RatVec v;
    try {
        v = parse_ratvec(s);
    } catch (const std::exception& e) {
        throw UsageError("bad --" + flag + ": " + e.what());
    }
    if (v.size() != g.dim)
        throw std::invalid_argument("--" + flag + " needs " + std::to_string(g.dim) + " coordinates for " + g.key());
    return v;
}

json vec_json(const RatVec& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(rational_str(x));
    return j;
}

std::string vec_text(const RatVec& v) { return "(" + ratvec_str(v) + ")"; }

std::string cmd_ineqs(const Options& o) {
    auto g = group_of(o);
    auto L = vec_of("lambda", o.lambda, g);
    auto p = o.closed ? closed_form(g, L) : assemble(g, L, o.mode == "relaxed" ? PairMode::Dominant : PairMode::WellCovering);
    return o.format == "json" ? to_json(p).dump(2) + "\n" : polytope_text(p) + "\n";
}

std::string cmd_member(const Options& o) {
    auto g = group_of(o);
    auto L = vec_of("lambda", o.lambda, g);
    auto x = vec_of("xi", o.xi, g);
    auto p = assemble(g, L);
    std::optional<AffineIneq> violated;
    for (const auto& c : p.system.ineqs())
        if (!c.satisfied_by(x)) {
            violated = c;
            break;
        }
    if (o.format == "json") {
        json j{{"member", !violated}, {"xi", vec_json(x)}};
        j["violated"] = violated ? to_json(*violated) : json(nullptr);
        return j.dump(2) + "\n";
    }
    if (!violated) return "member: yes\n";
    return "member: no\nviolated: " + ineq_text(*violated) + "\n";
}

std::string cmd_oracle(const Options& o) {
    auto g = group_of(o);
    auto L = vec_of("lambda", o.lambda, g);
    auto x = vec_of("xi", o.xi, g);
    auto w = horn_oracle_witness(g, L, x);
    if (o.format == "json") {
        json j{{"member", w.has_value()}, {"xi", vec_json(x)}};
        j["schmid_multiplicities"] = w ? vec_json(*w) : json(nullptr);
        return j.dump(2) + "\n";
    }
    if (!w) return "oracle: no\n";
    return "oracle: yes\nschmid multiplicities: " + vec_text(*w) + "\n";
}

std::string cmd_check(const Options& o, bool& disagree) {
    auto g = group_of(o);
    auto L = vec_of("lambda", o.lambda, g);
    if (o.radius < 0) throw UsageError("--radius must be nonnegative");
    auto rep = cross_check(g, L, o.radius);
    disagree = !rep.disagreements.empty() || !rep.closed_form_disagreements.empty() || !rep.closed_form_equal;
    if (o.format == "json") {
        json d = json::array(), cd = json::array();
        for (const auto& x : rep.disagreements) d.push_back(vec_json(x));
        for (const auto& x : rep.closed_form_disagreements) cd.push_back(vec_json(x));
        json j{{"group", g.key()},       {"Lambda", vec_json(L)},     {"radius", o.radius},
               {"points", rep.points},   {"inside", rep.inside},      {"disagreements", d},
               {"closed_form_checked", rep.closed_form_checked},      {"closed_form_equal", rep.closed_form_equal},
               {"closed_form_disagreements", cd}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "points: " << rep.points << "\ninside: " << rep.inside << "\n";
    if (rep.closed_form_checked)
        os << "closed form: " << (rep.closed_form_equal ? "equal" : "differs") << ", "
           << rep.closed_form_disagreements.size() << " pointwise disagreements\n";
    for (const auto& x : rep.disagreements) os << "disagreement at " << vec_text(x) << "\n";
    os << rep.disagreements.size() << " disagreements\n";
    return os.str();
}

std::string cmd_adm(const Options& o) {
    auto g = group_of(o);
    auto set = enumerate_admissible(g);
    if (o.format == "json") {
        json j = json::array();
        for (const auto& l : set) j.push_back(vec_json(l));
        return j.dump() + "\n";
    }
    std::string s;
    for (const auto& l : set) s += vec_text(l) + "\n";
    return s;
}

std::string cmd_horn(const Options& o) {
    if (o.n < 1 || o.n > kHornMaxN || o.r < 1 || o.r >= o.n)
        throw UsageError("horn needs 1 <= r < n <= " + std::to_string(kHornMaxN));
    const auto& ts = enum_T(o.r, o.n);
    if (o.format == "json") {
        json j = json::array();
        for (const auto& t : ts) j.push_back(to_json(t));
        return j.dump() + "\n";
    }
    std::string s;
    for (const auto& t : ts) s += to_json(t).dump() + "\n";
    return s;
}

std::string cmd_pairs(const Options& o) {
    auto g = group_of(o);
    std::vector<OneParamSubgroup> lams;
    if (!o.lam.empty()) {
        auto l = vec_of("lam", o.lam, g);
        if (!is_admissible(g, l)) throw std::invalid_argument("--lam is not an admissible one-parameter subgroup");
        lams.push_back(l);
    } else {
        auto set = enumerate_admissible(g);
        lams.assign(set.begin(), set.end());
    }
    const bool relaxed = o.mode == "relaxed";
    json j = json::array();
    std::string s;
    for (const auto& l : lams) {
        auto pairs = relaxed ? enumerate_dominant_m0(g, l) : enumerate_m0(g, l);
        s += "lambda " + vec_text(l) + ": " + std::to_string(pairs.size()) + " pairs\n";
        for (const auto& p : pairs) {
            s += "  w = " + p.w.str() + "; w' = " + p.w_prime.str() + "\n";
            j.push_back(to_json(p));
        }
    }
    return o.format == "json" ? j.dump(2) + "\n" : s;
}

std::string cmd_plot(const Options& o) {
    auto g = group_of(o);
    auto L = vec_of("lambda", o.lambda, g);
    if (g.dim != 2) throw std::invalid_argument("plot supports rank-2 groups only (sp:n=2, su:n=2,q=1)");
    return plot_svg(assemble(g, L), o.extent);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"orbitope"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Moment polyhedra of holomorphic coadjoint orbits", "orbitope"};
    app.require_subcommand(1);
    Options o;

    auto fmt = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        c->add_option("--out", o.out, "write output to this file");
    };
    auto grp = [&](CLI::App* c) { c->add_option("--group", o.group, "sp:n=2, su:p=2,q=2, su:n=2,q=1, so_star:n=3, so:p=5")->required(); };
    auto lamb = [&](CLI::App* c) { c->add_option("--lambda", o.lambda, "orbit parameter, comma separated")->required(); };
    auto mode = [&](CLI::App* c) {
        c->add_option("--mode", o.mode, "strict or relaxed pair set")->check(CLI::IsMember({"strict", "relaxed"}));
    };

    auto* ineqs = app.add_subcommand("ineqs", "inequalities of the moment polyhedron");
    grp(ineqs), lamb(ineqs), fmt(ineqs), mode(ineqs);
    ineqs->add_flag("--closed-form", o.closed, "use the closed form instead of the pair assembly");
    auto* member = app.add_subcommand("member", "membership in the assembled polyhedron");
    grp(member), lamb(member), fmt(member);
    member->add_option("--xi", o.xi, "point, comma separated")->required();
    auto* oracle = app.add_subcommand("oracle", "membership through the Horn oracle");
    grp(oracle), lamb(oracle), fmt(oracle);
    oracle->add_option("--xi", o.xi, "point, comma separated")->required();
    auto* check = app.add_subcommand("check", "grid cross-check against the oracle and closed form");
    grp(check), lamb(check), fmt(check);
    check->add_option("--radius", o.radius, "grid radius");
    auto* adm = app.add_subcommand("adm", "admissible one-parameter subgroups");
    grp(adm), fmt(adm);
    auto* horn = app.add_subcommand("horn", "Horn triples T_r^n");
    horn->add_option("--n", o.n)->required();
    horn->add_option("--r", o.r)->required();
    fmt(horn);
    auto* pairs = app.add_subcommand("pairs", "m = 0 well-covering pairs");
    grp(pairs), fmt(pairs), mode(pairs);
    pairs->add_option("--lam", o.lam, "one admissible subgroup; all when omitted");
    auto* plot = app.add_subcommand("plot", "SVG of a rank-2 polyhedron");
    grp(plot), lamb(plot);
    plot->add_option("--out", o.out, "write output to this file");
    plot->add_option("--extent", o.extent, "half width of the view box");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    std::string text;
    bool disagree = false;
    try {
        auto* sub = app.get_subcommands().front();
        const std::string verb = sub->get_name();
        if (verb == "ineqs") text = cmd_ineqs(o);
        else if (verb == "member") text = cmd_member(o);
        else if (verb == "oracle") text = cmd_oracle(o);
        else if (verb == "check") text = cmd_check(o, disagree);
        else if (verb == "adm") text = cmd_adm(o);
        else if (verb == "horn") text = cmd_horn(o);
        else if (verb == "pairs") text = cmd_pairs(o);
        else text = cmd_plot(o);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }

    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!(f << text)) {
            err << "error: cannot write " << o.out << "\n";
            return kExitDomain;
        }
    }
    return disagree ? kExitDisagreement : kExitOk;
}

} // namespace orbitope
