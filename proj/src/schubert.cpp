#include "orbitope/schubert.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace orbitope {

namespace {

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, long long>;

void poly_add(Poly& p, const Monomial& m, long long c) {
    if (c == 0) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p.emplace(m, c);
    } else if ((it->second += c) == 0) {
        p.erase(it);
    }
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            poly_add(out, m, ca * cb);
        }
    return out;
}

// (f - s_i f) / (x_i - x_{i+1}), i is 1-based.
Poly divided_difference(const Poly& f, int i) {
    Poly out;
    const int x = i - 1, y = i;
    for (const auto& [m, c] : f) {
        const int a = m[x], b = m[y];
        if (a == b) continue;
        Monomial t = m;
        if (a > b) {
            for (int k = 0; k < a - b; ++k) {
                t[x] = a - 1 - k;
                t[y] = b + k;
                poly_add(out, t, c);
            }
        } else {
            for (int k = 0; k < b - a; ++k) {
                t[x] = a + k;
                t[y] = b - 1 - k;
                poly_add(out, t, -c);
            }
        }
    }
    return out;
}

struct GLData {
    int n;
    std::map<Perm, Poly> schubert;
    std::mutex mu;
    std::map<std::pair<Perm, Perm>, std::map<Perm, long long>> products;

    explicit GLData(int n_) : n(n_) {
        Poly top;
        Monomial m(n);
        for (int i = 0; i < n; ++i) m[i] = n - 1 - i;
        top[m] = 1;
        std::vector<Perm> frontier{Perm::longest(n)};
        schubert[frontier[0]] = top;
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const auto& w : frontier)
                for (int i = 1; i < n; ++i) {
                    if (w(i) < w(i + 1)) continue;
                    Perm ws = w * Perm::simple(n, i);
                    if (schubert.count(ws)) continue;
                    schubert[ws] = divided_difference(schubert[w], i);
                    next.push_back(ws);
                }
            frontier = std::move(next);
        }
    }

    std::map<Perm, long long> product(const Perm& u, const Perm& v) {
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = products.find({u, v});
            if (it != products.end()) return it->second;
        }
        std::map<Perm, long long> out;
        const int d = u.length() + v.length();
        if (d <= n * (n - 1) / 2) {
            // g_w = d_w f, built along left multiplication s_i w.
            std::map<Perm, Poly> level{{Perm::identity(n), poly_mul(schubert.at(u), schubert.at(v))}};
            for (int k = 0; k < d && !level.empty(); ++k) {
                std::map<Perm, Poly> next;
                for (const auto& [w, g] : level) {
                    Perm winv = w.inverse();
                    for (int i = 1; i < n; ++i) {
                        if (winv(i) > winv(i + 1)) continue;
                        Perm sw = Perm::simple(n, i) * w;
                        if (next.count(sw)) continue;
                        Poly h = divided_difference(g, i);
                        if (!h.empty()) next.emplace(sw, std::move(h));
                    }
                }
                level = std::move(next);
            }
            for (const auto& [w, g] : level) {
                if (g.size() != 1 || g.begin()->first != Monomial(n, 0))
                    throw std::logic_error("coefficient extraction did not reach a constant");
                out[w] = g.begin()->second;
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        products.emplace(std::make_pair(u, v), out);
        return out;
    }
};

GLData& gl_data(int n) {
    if (n < 1 || n > kSchubertMaxDegree) throw std::invalid_argument("flag variety degree outside 1..6");
    static std::mutex m;
    static std::map<int, std::unique_ptr<GLData>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GLData>(n);
    return *slot;
}

long long integral(const Rational& q) {
    if (q.get_den() != 1) throw std::invalid_argument("weight must be integral");
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("weight entry too large");
    return q.get_num().get_si();
}

} // namespace

int CohClass::degree() const { return terms.empty() ? -1 : 2 * terms.begin()->first.length(); }

long long CohClass::coeff(const WeylElt& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
}

void CohClass::add(const WeylElt& w, long long c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else if ((it->second += c) == 0) {
        terms.erase(it);
    }
}

std::string CohClass::str() const {
    if (terms.empty()) return "0";
    std::vector<std::pair<WeylElt, long long>> order(terms.begin(), terms.end());
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first.length() > b.first.length(); });
    std::string s;
    for (const auto& [w, c] : order) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c) + "*";
        for (std::size_t f = 0; f < w.factors.size(); ++f) {
            if (f) s += "|";
            auto word = w.factors[f].reduced_word();
            if (word.empty()) s += "id";
            for (std::size_t k = 0; k < word.size(); ++k) s += (k ? ".s" : "s") + std::to_string(word[k]);
        }
    }
    return s;
}

CohClass operator+(const CohClass& a, const CohClass& b) {
    CohClass r = a;
    for (const auto& [w, c] : b.terms) r.add(w, c);
    return r;
}

CohClass operator-(const CohClass& a, const CohClass& b) {
    CohClass r = a;
    for (const auto& [w, c] : b.terms) r.add(w, -c);
    return r;
}

CohClass operator*(long long k, const CohClass& a) {
    CohClass r;
    if (k == 0) return r;
    for (const auto& [w, c] : a.terms) r.terms.emplace(w, k * c);
    return r;
}

std::map<Perm, long long> gl_product(const Perm& u, const Perm& v) {
    if (u.size() != v.size()) throw std::invalid_argument("permutation size mismatch");
    return gl_data(u.size()).product(u, v);
}

SchubertRing::SchubertRing(WeylGroup W) : W_(std::move(W)) {
    for (int d : W_.degrees()) gl_data(d);
}

CohClass SchubertRing::basis(const WeylElt& w) const {
    if (!W_.contains(w)) throw std::invalid_argument("element not in this Weyl group");
    CohClass c;
    c.add(w, 1);
    return c;
}

CohClass SchubertRing::theta(const RatVec& mu) const {
    return chevalley_mult(one(), mu);
}

CohClass SchubertRing::chevalley_mult(const CohClass& c, const RatVec& mu) const {
    if (static_cast<int>(mu.size()) != W_.dim()) throw std::invalid_argument("weight dimension mismatch");
    std::vector<long long> m;
    for (const auto& x : mu) m.push_back(integral(x));
    CohClass out;
    for (const auto& [w, coef] : c.terms) {
        const int lw = w.length();
        for (std::size_t f = 0; f < W_.degrees().size(); ++f) {
            const int n = W_.degrees()[f], off = W_.offset(f);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    long long pair = m[off + i - 1] - m[off + j - 1];
                    if (pair == 0) continue;
                    WeylElt v = w;
                    v.factors[f] = w.factors[f] * Perm::transposition(n, i, j);
                    if (v.length() == lw + 1) out.add(v, coef * pair);
                }
        }
    }
    return out;
}

CohClass SchubertRing::cup(const CohClass& a, const CohClass& b) const {
    CohClass out;
    const std::size_t k = W_.degrees().size();
    for (const auto& [u, cu] : a.terms)
        for (const auto& [v, cv] : b.terms) {
            if (u.length() + v.length() > W_.longest_length()) continue;
            std::vector<std::map<Perm, long long>> per;
            bool zero = false;
            for (std::size_t f = 0; f < k && !zero; ++f) {
                per.push_back(gl_product(u.factors[f], v.factors[f]));
                zero = per.back().empty();
            }
            if (zero) continue;
            std::vector<std::map<Perm, long long>::const_iterator> it;
            for (const auto& p : per) it.push_back(p.begin());
            for (;;) {
                WeylElt w;
                long long c = cu * cv;
                for (std::size_t f = 0; f < k; ++f) {
                    w.factors.push_back(it[f]->first);
                    c *= it[f]->second;
                }
                out.add(w, c);
                std::size_t f = k;
                while (f > 0 && ++it[f - 1] == per[f - 1].end()) {
                    it[f - 1] = per[f - 1].begin();
                    --f;
                }
                if (f == 0) break;
            }
        }
    return out;
}

bool is_max_coset_rep(const WeylGroup& W, const ParabolicData& pd, const WeylElt& w) {
    if (!W.contains(w)) return false;
    for (const auto& [f, i] : pd.generators)
        if ((w * W.simple(f, i)).length() < w.length()) continue;
        else return false;
    return true;
}

bool duality_check(const SchubertRing& ring, const WeylElt& w, const WeylElt& wp, const ParabolicData& pd) {
    const WeylGroup& W = ring.weyl();
    if (!is_max_coset_rep(W, pd, w) || !is_max_coset_rep(W, pd, wp))
        throw std::invalid_argument("duality check needs longest coset representatives");
    if (w.length() + wp.length() < W.longest_length() + pd.w_lambda.length())
        throw std::invalid_argument("duality check needs complementary or larger total length");
    CohClass prod = ring.cup(ring.basis(w * pd.w_lambda), ring.basis(wp * pd.w_lambda));
    return prod == ring.basis(W.longest() * pd.w_lambda);
}

} // namespace orbitope
