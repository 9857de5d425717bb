#include "orbitope/goldens.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>

#ifndef ORBITOPE_GOLDEN_DIR
#define ORBITOPE_GOLDEN_DIR "goldens"
#endif

namespace orbitope {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::mutex g_mu;
std::set<std::string> g_used;

void require(bool ok, const std::string& id, const char* what) {
    if (!ok) throw std::runtime_error("golden " + id + ": " + what);
}

RatVec json_vec(const json& j) {
    RatVec v;
    for (const auto& x : j) v.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    return v;
}

WeylElt json_elt(const json& j, const WeylGroup& W) {
    if (j.size() != W.degrees().size()) throw std::runtime_error("factor count mismatch");
    WeylElt w;
    for (std::size_t f = 0; f < j.size(); ++f)
        w.factors.push_back(Perm::from_word(W.degrees()[f], j[f].get<std::vector<int>>()));
    return w;
}

void validate(const GoldenRecord& r) {
    const json& p = r.payload;
    require(p.is_object() && p.contains("kind") && p["kind"].is_string(), r.id, "missing kind");
    const std::string kind = p["kind"];
    if (kind == "triples") {
        require(p.contains("n") && p["triples"].is_array(), r.id, "bad triple set");
        for (const auto& t : p["triples"]) require(t.is_array() && t.size() == 3, r.id, "triple needs I, J, L");
    } else if (kind == "lambdas") {
        require(p.contains("group") && p["lambdas"].is_array(), r.id, "bad lambda list");
    } else if (kind == "pairs") {
        require(p.contains("group") && p.contains("lambda") && p["pairs"].is_array(), r.id, "bad pair table");
        for (const auto& t : p["pairs"]) require(t.is_array() && t.size() == 2, r.id, "pair needs w, w'");
    } else if (kind == "cosets") {
        require(p.contains("group") && p["cosets"].is_array(), r.id, "bad coset table");
    } else if (kind == "polytope") {
        require(p.contains("group") && p["rows"].is_array() && p.contains("chamber"), r.id, "bad polytope template");
        for (const auto& row : p["rows"]) {
            require(row.contains("a") && row.contains("c") && row["a"].size() == row["c"].size(), r.id,
                    "row needs a and c of equal length");
            const std::string rel = row.value("rel", "");
            require(rel == "<=" || rel == ">=" || rel == "=", r.id, "unknown relation");
        }
    } else {
        require(false, r.id, "unknown kind");
    }
}

} // namespace

std::string golden_dir() {
    if (const char* e = std::getenv("ORBITOPE_GOLDENS"); e && *e) return e;
    return ORBITOPE_GOLDEN_DIR;
}

std::vector<std::string> golden_ids() {
    std::vector<std::string> ids;
    const fs::path root(golden_dir());
    if (!fs::is_directory(root)) return ids;
    for (const auto& e : fs::recursive_directory_iterator(root)) {
        if (!e.is_regular_file() || e.path().extension() != ".json") continue;
        fs::path rel = fs::relative(e.path(), root);
        rel.replace_extension();
        ids.push_back(rel.generic_string());
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

GoldenRecord load(const std::string& id) {
    const fs::path file = fs::path(golden_dir()) / (id + ".json");
    if (id.find("..") != std::string::npos || !fs::is_regular_file(file))
        throw std::out_of_range("unknown golden id: " + id);
    std::ifstream in(file);
    GoldenRecord r;
    r.id = id;
    r.topic = id.substr(0, id.find('/'));
    try {
        r.payload = json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error("golden " + id + ": " + e.what());
    }
    validate(r);
    std::lock_guard<std::mutex> lock(g_mu);
    g_used.insert(id);
    return r;
}

std::vector<std::string> referenced_ids() {
    std::lock_guard<std::mutex> lock(g_mu);
    return {g_used.begin(), g_used.end()};
}

std::vector<std::string> unreferenced_ids() {
    auto used = referenced_ids();
    std::vector<std::string> out;
    for (const auto& id : golden_ids())
        if (!std::binary_search(used.begin(), used.end(), id)) out.push_back(id);
    return out;
}

std::vector<HornTriple> golden_triples(const GoldenRecord& rec) {
    const int n = rec.payload["n"];
    std::vector<HornTriple> out;
    for (const auto& t : rec.payload["triples"]) {
        HornTriple h;
        h.n = n;
        h.I = t[0].get<std::vector<int>>();
        h.J = t[1].get<std::vector<int>>();
        h.L = t[2].get<std::vector<int>>();
        out.push_back(std::move(h));
    }
    return out;
}

AdmissibleSet golden_lambdas(const GoldenRecord& rec) {
    AdmissibleSet out;
    for (const auto& l : rec.payload["lambdas"]) out.insert(json_vec(l));
    return out;
}

std::vector<std::pair<WeylElt, WeylElt>> golden_pairs(const GoldenRecord& rec, const WeylGroup& W) {
    std::vector<std::pair<WeylElt, WeylElt>> out;
    for (const auto& t : rec.payload["pairs"]) out.emplace_back(json_elt(t[0], W), json_elt(t[1], W));
    return out;
}

std::vector<std::pair<WeylElt, RatVec>> golden_cosets(const GoldenRecord& rec, const WeylGroup& W) {
    std::vector<std::pair<WeylElt, RatVec>> out;
    for (const auto& t : rec.payload["cosets"]) out.emplace_back(json_elt(t[0], W), json_vec(t[1]));
    return out;
}

HPolyhedron golden_polytope(const GoldenRecord& rec, const GroupData& g, const RatVec& Lambda) {
    if (Lambda.size() != g.dim) throw std::invalid_argument("Lambda dimension mismatch");
    HPolyhedron out(g.dim);
    if (rec.payload["chamber"].get<bool>()) out.add_all(g.chamber);
    for (const auto& row : rec.payload["rows"]) {
        RatVec a = json_vec(row["a"]);
        if (a.size() != g.dim) throw std::runtime_error("golden " + rec.id + ": row dimension mismatch");
        Rational b = dot(json_vec(row["c"]), Lambda) + Rational(row.value("k", 0L));
        const std::string rel = row["rel"];
        if (rel == ">=") out.add(AffineIneq(-a, -b));
        else out.add(AffineIneq(a, b, rel == "="));
    }
    return out;
}

} // namespace orbitope
