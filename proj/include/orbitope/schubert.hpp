#pragma once

#include <map>
#include <string>

#include "orbitope/weyl.hpp"

namespace orbitope {

// Integer combination of Schubert classes sigma_w of a product of complete flag varieties.
struct CohClass {
    std::map<WeylElt, long long> terms;

    bool is_zero() const { return terms.empty(); }
    // 2 * length of the common index length; -1 for the zero class.
    int degree() const;
    long long coeff(const WeylElt& w) const;
    void add(const WeylElt& w, long long c);
    std::string str() const; // "3*s1.s3.s2 + 1*s2"

    friend CohClass operator+(const CohClass& a, const CohClass& b);
    friend CohClass operator-(const CohClass& a, const CohClass& b);
    friend CohClass operator*(long long c, const CohClass& a);
    friend bool operator==(const CohClass&, const CohClass&) = default;
};

class SchubertRing {
public:
    explicit SchubertRing(WeylGroup W);

    const WeylGroup& weyl() const { return W_; }
    int top_degree() const { return 2 * W_.longest_length(); }

    CohClass basis(const WeylElt& w) const;
    CohClass one() const { return basis(W_.identity()); }
    CohClass point() const { return basis(W_.longest()); }

    // Degree-2 class of an integral weight in e*-coordinates.
    CohClass theta(const RatVec& mu) const;
    CohClass chevalley_mult(const CohClass& c, const RatVec& mu) const;
    CohClass cup(const CohClass& a, const CohClass& b) const;

private:
    WeylGroup W_;
};

// Per-factor structure constants sigma_u * sigma_v in H*(GL_n / B), computed in the polynomial model.
std::map<Perm, long long> gl_product(const Perm& u, const Perm& v);

// True iff sigma^P_w * sigma^P_w' is the point class, tested in the B-model through the
// shortest coset representatives. w and w' must be longest in their cosets.
bool duality_check(const SchubertRing& ring, const WeylElt& w, const WeylElt& wp, const ParabolicData& pd);

bool is_max_coset_rep(const WeylGroup& W, const ParabolicData& pd, const WeylElt& w);

constexpr int kSchubertMaxDegree = 6;

} // namespace orbitope
