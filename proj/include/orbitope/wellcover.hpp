#pragma once

#include <map>
#include <stdexcept>

#include "orbitope/admissible.hpp"
#include "orbitope/schubert.hpp"

namespace orbitope {

struct UnsupportedFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct WCPair {
    WeylElt w, w_prime;
    long m = 0;
    OneParamSubgroup lam;

    friend bool operator==(const WCPair&, const WCPair&) = default;
    friend auto operator<=>(const WCPair& a, const WCPair& b) {
        if (auto c = a.w <=> b.w; c != 0) return c;
        if (auto c = a.w_prime <=> b.w_prime; c != 0) return c;
        return a.m <=> b.m;
    }
};

// m-grading of p^- (+) C under lam. The C summand sits at level 0 with weight 0.
struct GradedModule {
    std::map<long, std::vector<RatVec>> levels;

    int total() const;
    int dim_below(long m) const;
    std::vector<RatVec> weights_below(long m) const;
    long min_level() const { return levels.begin()->first; }
    bool has_level(long m) const { return levels.count(m) > 0; }
};

GradedModule grade(const GroupData& g, const OneParamSubgroup& lam);

bool is_well_covering(const GroupData& g, const WCPair& pair);
bool is_dominant_pair(const GroupData& g, const WCPair& pair);

// Well-covering pairs at m = 0, sorted; cached per (group, lam).
std::vector<WCPair> enumerate_m0(const GroupData& g, const OneParamSubgroup& lam);
// Dominant pairs at m = 0, for the relaxed assembly mode.
std::vector<WCPair> enumerate_dominant_m0(const GroupData& g, const OneParamSubgroup& lam);

nlohmann::json to_json(const WCPair& p);

} // namespace orbitope
