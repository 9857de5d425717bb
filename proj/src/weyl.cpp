#include "orbitope/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbitope {

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<int> s = img_;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i) + 1) throw std::invalid_argument("not a permutation");
}

Perm Perm::identity(int r) {
    std::vector<int> v(r);
    std::iota(v.begin(), v.end(), 1);
    return Perm(v);
}

Perm Perm::longest(int r) {
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) v[i] = r - i;
    return Perm(v);
}

Perm Perm::simple(int r, int i) { return transposition(r, i, i + 1); }

Perm Perm::transposition(int r, int i, int j) {
    if (i < 1 || j < 1 || i > r || j > r) throw std::invalid_argument("transposition index out of range");
    Perm p = identity(r);
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
}

Perm Perm::from_word(int r, const std::vector<int>& word) {
    Perm p = identity(r);
    for (int i : word) p = p * simple(r, i);
    return p;
}

int Perm::length() const {
    int l = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        for (std::size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++l;
    return l;
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i] - 1] = static_cast<int>(i) + 1;
    return Perm(v);
}

Perm Perm::operator*(const Perm& o) const {
    if (o.size() != size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[o.img_[i] - 1];
    Perm p;
    p.img_ = std::move(v);
    return p;
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    std::vector<int> cur = img_;
    for (;;) {
        int d = 0;
        for (int i = static_cast<int>(cur.size()) - 1; i >= 1; --i)
            if (cur[i - 1] > cur[i]) {
                d = i;
                break;
            }
        if (d == 0) break;
        std::swap(cur[d - 1], cur[d]);
        word.push_back(d);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::string Perm::str() const {
    std::string s;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(img_[i]);
    }
    return s;
}

int WeylElt::length() const {
    int l = 0;
    for (const auto& p : factors) l += p.length();
    return l;
}

WeylElt WeylElt::inverse() const {
    WeylElt r;
    for (const auto& p : factors) r.factors.push_back(p.inverse());
    return r;
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
    if (o.factors.size() != factors.size()) throw std::invalid_argument("factor count mismatch");
    WeylElt r;
    for (std::size_t f = 0; f < factors.size(); ++f) r.factors.push_back(factors[f] * o.factors[f]);
    return r;
}

std::string WeylElt::str() const {
    std::string s;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        if (f) s += '|';
        s += factors[f].str();
    }
    return s;
}

WeylElt parse_weyl(const std::string& s) {
    WeylElt w;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '|')) {
        std::stringstream ps(part);
        std::vector<int> v;
        int x;
        while (ps >> x) v.push_back(x);
        if (!ps.eof()) throw std::invalid_argument("malformed Weyl element: " + s);
        w.factors.emplace_back(v);
    }
    if (w.factors.empty()) throw std::invalid_argument("empty Weyl element");
    return w;
}

WeylGroup::WeylGroup(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw std::invalid_argument("Weyl group needs a factor");
    for (int d : degrees_) {
        if (d < 1) throw std::invalid_argument("factor degree must be positive");
        offsets_.push_back(dim_);
        dim_ += d;
    }
}

std::size_t WeylGroup::order() const {
    std::size_t n = 1;
    for (int d : degrees_)
        for (int k = 2; k <= d; ++k) n *= k;
    return n;
}

WeylElt WeylGroup::identity() const {
    WeylElt w;
    for (int d : degrees_) w.factors.push_back(Perm::identity(d));
    return w;
}

WeylElt WeylGroup::longest() const {
    WeylElt w;
    for (int d : degrees_) w.factors.push_back(Perm::longest(d));
    return w;
}

WeylElt WeylGroup::simple(std::size_t factor, int i) const {
    return embed(factor, Perm::simple(degrees_.at(factor), i));
}

WeylElt WeylGroup::embed(std::size_t factor, const Perm& p) const {
    if (p.size() != degrees_.at(factor)) throw std::invalid_argument("factor degree mismatch");
    WeylElt w = identity();
    w.factors[factor] = p;
    return w;
}

int WeylGroup::longest_length() const {
    int l = 0;
    for (int d : degrees_) l += d * (d - 1) / 2;
    return l;
}

std::vector<WeylElt> WeylGroup::elements() const {
    if (order() > 1000000) throw std::invalid_argument("Weyl group too large");
    std::vector<std::vector<Perm>> per;
    for (int d : degrees_) {
        std::vector<Perm> ps;
        std::vector<int> v(d);
        std::iota(v.begin(), v.end(), 1);
        do ps.emplace_back(v);
        while (std::next_permutation(v.begin(), v.end()));
        per.push_back(std::move(ps));
    }
    std::vector<WeylElt> out;
    std::vector<std::size_t> idx(per.size(), 0);
    for (;;) {
        WeylElt w;
        for (std::size_t f = 0; f < per.size(); ++f) w.factors.push_back(per[f][idx[f]]);
        out.push_back(std::move(w));
        std::size_t f = per.size();
        while (f > 0 && ++idx[f - 1] == per[f - 1].size()) idx[--f] = 0;
        if (f == 0) break;
    }
    return out;
}

bool WeylGroup::contains(const WeylElt& w) const {
    if (w.factors.size() != degrees_.size()) return false;
    for (std::size_t f = 0; f < degrees_.size(); ++f)
        if (w.factors[f].size() != degrees_[f]) return false;
    return true;
}

RatVec WeylGroup::act(const WeylElt& w, const RatVec& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector dimension mismatch");
    if (!contains(w)) throw std::invalid_argument("element not in this Weyl group");
    RatVec r(v.size());
    for (std::size_t f = 0; f < degrees_.size(); ++f)
        for (int i = 1; i <= degrees_[f]; ++i) r[offsets_[f] + w.factors[f](i) - 1] = v[offsets_[f] + i - 1];
    return r;
}

bool is_dominant(const WeylGroup& W, const RatVec& lambda) {
    if (static_cast<int>(lambda.size()) != W.dim()) return false;
    for (std::size_t f = 0; f < W.degrees().size(); ++f)
        for (int i = 1; i < W.degrees()[f]; ++i)
            if (lambda[W.offset(f) + i - 1] < lambda[W.offset(f) + i]) return false;
    return true;
}

ParabolicData parabolic(const WeylGroup& W, const RatVec& lambda) {
    if (!is_dominant(W, lambda)) throw std::invalid_argument("lambda is not dominant");
    ParabolicData pd{lambda, {}, W.identity()};
    for (std::size_t f = 0; f < W.degrees().size(); ++f) {
        const int off = W.offset(f), d = W.degrees()[f];
        std::vector<int> v(d);
        int start = 0;
        for (int i = 0; i <= d; ++i) {
            if (i == d || (i > start && lambda[off + i] != lambda[off + start])) {
                for (int k = start; k < i; ++k) v[k] = start + i - k;
                start = i;
            }
            if (i + 1 < d && lambda[off + i] == lambda[off + i + 1]) pd.generators.emplace_back(f, i + 1);
        }
        pd.w_lambda.factors[f] = Perm(v);
    }
    return pd;
}

std::vector<WeylElt> max_coset_reps(const WeylGroup& W, const ParabolicData& pd) {
    std::map<RatVec, std::vector<WeylElt>> classes;
    for (auto& w : W.elements()) classes[W.act(w, pd.lambda)].push_back(std::move(w));
    std::vector<WeylElt> reps;
    for (auto& [_, members] : classes) {
        int best = -1, count = 0;
        const WeylElt* arg = nullptr;
        for (const auto& w : members) {
            int l = w.length();
            if (l > best) {
                best = l;
                count = 1;
                arg = &w;
            } else if (l == best) {
                ++count;
            }
        }
        if (count != 1) throw std::logic_error("longest coset element is not unique");
        reps.push_back(*arg);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

SpecialElements special_elements(int r) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    SpecialElements s;
    for (int k = 1; k <= r; ++k) {
        std::vector<int> hat, check;
        for (int i = 1; i < k; ++i) hat.push_back(i);
        for (int i = r - 1; i >= k; --i) check.push_back(i);
        s.hat.push_back(Perm::from_word(r, hat));
        s.check.push_back(Perm::from_word(r, check));
    }
    return s;
}

Perm w0_wQhat(int r) {
    std::vector<int> word;
    for (int i = r - 1; i >= 1; --i) word.push_back(i);
    return Perm::from_word(r, word);
}

} // namespace orbitope
