#pragma once

#include <string>
#include <vector>

#include "orbitope/exactmath.hpp"
#include "orbitope/weyl.hpp"

namespace orbitope {

enum class Family { Sp2nR, SUpq, SOstar2n, SOp2 };

struct GroupFamily {
    Family tag = Family::Sp2nR;
    int n = 0;             // Sp, SO*, and SU(n,1) in U(n) coordinates
    int p = 0, q = 0;      // SU(p,q); SO(p,2) uses p
    bool u_coords = false; // SU(n,1) in the n-coordinate U(n) convention

    std::string str() const;
    friend bool operator==(const GroupFamily&, const GroupFamily&) = default;
};

// Accepts "sp:n=2", "su:p=2,q=2", "su:n=2,q=1", "so_star:n=3", "so:p=5".
GroupFamily parse_group(const std::string& spec);

struct SimpleCoroot {
    std::size_t factor;
    int index;     // s_index in that factor
    RatVec coroot; // mu(alpha^vee) = <coroot, mu>
};

struct GroupData {
    GroupFamily family;
    std::size_t dim = 0;
    std::vector<RatVec> compact_pos;
    std::vector<RatVec> noncompact_pos;
    std::vector<RatVec> weights_p_minus;
    std::vector<RatVec> schmid;
    RatVec rho;
    HPolyhedron chamber;
    std::vector<AffineIneq> hol_chamber_strict; // <a, xi> < b
    WeylGroup weyl;        // type-A factors; empty degrees for SO(p,2)
    bool sign_action = false;
    std::vector<SimpleCoroot> coroot_pairing;

    bool type_a() const { return family.tag != Family::SOp2; }
    std::string key() const { return family.str(); }
};

GroupData build(const GroupFamily& f);
inline GroupData build(const std::string& spec) { return build(parse_group(spec)); }

bool in_chamber(const GroupData& g, const RatVec& v);
bool in_hol_chamber(const GroupData& g, const RatVec& v);
// Closure of the holomorphic chamber.
HPolyhedron hol_closure(const GroupData& g);
// {sum m_i gamma_i : m_1 >= ... >= m_r >= 0}.
HPolyhedron schmid_cone(const GroupData& g);
// Lambda + nonnegative span of the noncompact positive roots.
HPolyhedron root_cone(const GroupData& g, const RatVec& apex);
bool is_root(const GroupData& g, const RatVec& v);

} // namespace orbitope
