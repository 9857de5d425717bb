#pragma once

#include <vector>

#include "orbitope/exactmath.hpp"

namespace orbitope {

struct HornTriple {
    int n = 0;
    std::vector<int> I, J, L; // strictly increasing, 1-based

    int r() const { return static_cast<int>(I.size()); }
    bool balanced() const;

    friend bool operator==(const HornTriple&, const HornTriple&) = default;
    friend bool operator<(const HornTriple& a, const HornTriple& b) {
        if (a.I != b.I) return a.I < b.I;
        if (a.J != b.J) return a.J < b.J;
        return a.L < b.L;
    }
};

using Spectrum = RatVec;

constexpr int kHornMaxN = 8;

// T_r^n in lexicographic order of (I, J, L). Memoized; safe to call concurrently.
const std::vector<HornTriple>& enum_T(int r, int n);
std::vector<HornTriple> enum_U(int r, int n);
bool in_T(const HornTriple& t);

bool horn_member(const Spectrum& alpha, const Spectrum& beta, const Spectrum& gamma);
bool lr_nonzero(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu);

// (i_r - r, ..., i_1 - 1).
Spectrum lambda_of(const std::vector<int>& I);
bool triple_via_eigen(const HornTriple& t);

// Increasing r-subsets of {1..n}.
std::vector<std::vector<int>> subsets(int n, int r);

nlohmann::json to_json(const HornTriple& t);
HornTriple triple_from_json(const nlohmann::json& j, int n);

} // namespace orbitope
