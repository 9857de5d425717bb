#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitope/admissible.hpp"
#include "orbitope/horn.hpp"

namespace orbitope {

struct GoldenRecord {
    std::string id;    // "<topic>/<name>"
    std::string topic;
    nlohmann::json payload;
};

// Root of the goldens tree: ORBITOPE_GOLDENS if set, else the source checkout.
std::string golden_dir();
// All ids found on disk, sorted.
std::vector<std::string> golden_ids();

// Throws std::out_of_range for unknown ids and std::runtime_error for malformed payloads.
// Every successful load is recorded for the coverage report.
GoldenRecord load(const std::string& id);

std::vector<std::string> referenced_ids();
std::vector<std::string> unreferenced_ids();

std::vector<HornTriple> golden_triples(const GoldenRecord& rec);
AdmissibleSet golden_lambdas(const GoldenRecord& rec);
std::vector<std::pair<WeylElt, WeylElt>> golden_pairs(const GoldenRecord& rec, const WeylGroup& W);
std::vector<std::pair<WeylElt, RatVec>> golden_cosets(const GoldenRecord& rec, const WeylGroup& W);
// Instantiates a row template a.xi (rel) c.Lambda + k at Lambda.
HPolyhedron golden_polytope(const GoldenRecord& rec, const GroupData& g, const RatVec& Lambda);

} // namespace orbitope
