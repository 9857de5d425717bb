#pragma once

#include <string>
#include <vector>

#include "orbitope/exactmath.hpp"

namespace orbitope {

// Permutation of {1..r} in one-line notation. Composition is (a*b)(i) = a(b(i)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> one_line);

    static Perm identity(int r);
    static Perm longest(int r);
    static Perm simple(int r, int i);               // s_i, 1 <= i < r
    static Perm transposition(int r, int i, int j); // t_{i,j}
    static Perm from_word(int r, const std::vector<int>& word);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    int length() const;
    Perm inverse() const;
    Perm operator*(const Perm& o) const;
    // Word s_{i1}...s_{il} of minimal length.
    std::vector<int> reduced_word() const;
    std::string str() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

private:
    std::vector<int> img_;
};

// Element of S_{n_1} x ... x S_{n_k}.
struct WeylElt {
    std::vector<Perm> factors;

    int length() const;
    WeylElt inverse() const;
    WeylElt operator*(const WeylElt& o) const;
    std::string str() const; // "2 1 3|1 2"

    friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.factors == b.factors; }
    friend auto operator<=>(const WeylElt& a, const WeylElt& b) { return a.factors <=> b.factors; }
};

WeylElt parse_weyl(const std::string& s);

class WeylGroup {
public:
    WeylGroup() = default;
    explicit WeylGroup(std::vector<int> degrees);

    const std::vector<int>& degrees() const { return degrees_; }
    int dim() const { return dim_; }
    int offset(std::size_t factor) const { return offsets_[factor]; }
    std::size_t order() const;

    WeylElt identity() const;
    WeylElt longest() const;
    WeylElt simple(std::size_t factor, int i) const;
    WeylElt embed(std::size_t factor, const Perm& p) const;
    int longest_length() const;

    // All elements, lexicographic in one-line notation.
    std::vector<WeylElt> elements() const;
    bool contains(const WeylElt& w) const;

    // (w.v)_{w(i)} = v_i within each factor's coordinate block.
    RatVec act(const WeylElt& w, const RatVec& v) const;

private:
    std::vector<int> degrees_;
    std::vector<int> offsets_;
    int dim_ = 0;
};

// Stabilizer data of a dominant lambda: generators are the simple reflections fixing it.
struct ParabolicData {
    RatVec lambda;
    std::vector<std::pair<std::size_t, int>> generators;
    WeylElt w_lambda; // longest element of W_lambda
};

ParabolicData parabolic(const WeylGroup& W, const RatVec& lambda);
bool is_dominant(const WeylGroup& W, const RatVec& lambda);

// Longest representatives of the cosets w W_lambda, sorted lexicographically.
std::vector<WeylElt> max_coset_reps(const WeylGroup& W, const ParabolicData& pd);

struct SpecialElements {
    std::vector<Perm> hat;   // hat[k-1] = s_1 ... s_{k-1}
    std::vector<Perm> check; // check[k-1] = s_{r-1} ... s_k
};

SpecialElements special_elements(int r);
// w_0 w_Qhat = s_{r-1} ... s_1.
Perm w0_wQhat(int r);

} // namespace orbitope
