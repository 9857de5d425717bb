#pragma once

#include <optional>

#include "orbitope/wellcover.hpp"

namespace orbitope {

struct NoClosedForm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Provenance {
    bool chamber = false;
    OneParamSubgroup lam; // empty for chamber walls
    WeylElt w, w_prime;
    AffineIneq ineq; // canonical
};

struct OrbitPolytope {
    GroupData group;
    RatVec Lambda;
    HPolyhedron system;
    std::vector<Provenance> provenance; // parallel to system.ineqs()
    std::vector<Provenance> dropped;    // sources removed as redundant
};

enum class PairMode { WellCovering, Dominant };

// Chamber plus <w lam, xi> <= <w0 w' lam, Lambda> over admissible lam and m = 0 pairs.
OrbitPolytope assemble(const GroupData& g, const RatVec& Lambda, PairMode mode = PairMode::WellCovering);
OrbitPolytope closed_form(const GroupData& g, const RatVec& Lambda);
bool has_closed_form(const GroupData& g);

// Feasibility of the Schmid-cone/Horn system; the witness is the Schmid multiplicity vector m.
std::optional<RatVec> horn_oracle_witness(const GroupData& g, const RatVec& Lambda, const RatVec& mu);
bool horn_oracle_member(const GroupData& g, const RatVec& Lambda, const RatVec& mu);

bool member(const OrbitPolytope& p, const RatVec& xi);

struct CrossCheckReport {
    std::size_t points = 0;
    std::size_t inside = 0;
    std::vector<RatVec> disagreements;             // assemble vs oracle
    bool closed_form_checked = false;
    std::vector<RatVec> closed_form_disagreements; // assemble vs closed form, pointwise
    bool closed_form_equal = true;                 // poly_equal(assemble, closed_form)
};

// Dominant points of Lambda + [-r, r]^dim with step 1/2.
CrossCheckReport cross_check(const GroupData& g, const RatVec& Lambda, int radius);

struct PropertyReport {
    bool contains_lambda = false;
    bool in_root_cone = false;
    bool in_hol_closure = false;
    bool relaxed_equal = false;
    bool ok() const { return contains_lambda && in_root_cone && in_hol_closure && relaxed_equal; }
};

PropertyReport check_properties(const GroupData& g, const RatVec& Lambda);

// "xi1 - xi2 >= 0; xi1 >= 3; xi2 >= 1": chamber walls first, then by normal, descending.
std::string polytope_text(const OrbitPolytope& p);
std::string ineq_text(const AffineIneq& c);
nlohmann::json to_json(const OrbitPolytope& p);

} // namespace orbitope
