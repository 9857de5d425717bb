#include "orbitope/wellcover.hpp"

#include <mutex>

#include "orbitope/parallel.hpp"

namespace orbitope {

namespace {

void require_type_a(const GroupData& g) {
    if (!g.type_a()) throw UnsupportedFamily("unsupported family for Schubert calculus: " + g.key());
}

long level_of(const RatVec& lam, const RatVec& beta) {
    Rational v = dot(lam, beta);
    if (v.get_den() != 1) throw std::invalid_argument("one-parameter subgroup must be integral");
    return v.get_num().get_si();
}

struct Context {
    ParabolicData pd;
    GradedModule grading;
    SchubertRing ring;
    WeylElt w0;
};

Context context(const GroupData& g, const OneParamSubgroup& lam) {
    require_type_a(g);
    const WeylGroup& W = g.weyl;
    return Context{parabolic(W, lam), grade(g, lam), SchubertRing(W), W.longest()};
}

void check_pair(const GroupData& g, const Context& c, const WCPair& p) {
    if (!is_max_coset_rep(g.weyl, c.pd, p.w) || !is_max_coset_rep(g.weyl, c.pd, p.w_prime))
        throw std::invalid_argument("w and w' must be longest coset representatives mod W_lambda");
}

// sigma_{w0 w'} times Theta(-beta) over the weights of M_{<m}.
CohClass theta_side(const Context& c, const WCPair& p) {
    CohClass acc = c.ring.basis(c.w0 * p.w_prime);
    for (const auto& beta : c.grading.weights_below(p.m)) {
        acc = c.ring.chevalley_mult(acc, -beta);
        if (acc.is_zero()) break;
    }
    return acc;
}

bool well_covering(const GroupData& g, const Context& c, const WCPair& p) {
    if (p.m != 0 && !c.grading.has_level(p.m)) return false;
    const int below = c.grading.dim_below(p.m);
    if (below == 0 && p.w_prime == c.w0 * p.w * c.pd.w_lambda) return true;
    if (p.w.length() + p.w_prime.length() != g.weyl.longest_length() + c.pd.w_lambda.length() + below)
        return false;
    Rational lhs = dot(g.weyl.act(p.w, p.lam) + g.weyl.act(p.w_prime, p.lam), g.rho);
    for (const auto& [k, ws] : c.grading.levels)
        if (k < p.m) lhs += static_cast<long>((p.m - k) * static_cast<long>(ws.size()));
    if (lhs != 0) return false;
    CohClass prod = c.ring.cup(c.ring.basis(c.w0 * p.w), theta_side(c, p));
    return prod == c.ring.basis(c.w0 * c.pd.w_lambda);
}

bool dominant(const Context& c, const WCPair& p) {
    if (p.m != 0 && !c.grading.has_level(p.m)) return false;
    return !c.ring.cup(c.ring.basis(c.w0 * p.w), theta_side(c, p)).is_zero();
}

template <class Pred>
std::vector<WCPair> scan_m0(const GroupData& g, const OneParamSubgroup& lam, Pred pred) {
    Context c = context(g, lam);
    auto reps = max_coset_reps(g.weyl, c.pd);
    std::vector<std::vector<WCPair>> per(reps.size());
    parallel_for(reps.size(), [&](std::size_t i) {
        for (const auto& wp : reps) {
            WCPair p{reps[i], wp, 0, lam};
            if (pred(c, p)) per[i].push_back(p);
        }
    });
    std::vector<WCPair> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

using Cache = std::map<std::pair<std::string, RatVec>, std::vector<WCPair>>;

template <class Pred>
std::vector<WCPair> cached(Cache& cache, std::mutex& mu, const GroupData& g, const OneParamSubgroup& lam, Pred pred) {
    auto key = std::make_pair(g.key(), lam);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto out = scan_m0(g, lam, pred);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
    return out;
}

} // namespace

int GradedModule::total() const {
    int t = 0;
    for (const auto& [k, ws] : levels) t += static_cast<int>(ws.size());
    return t;
}

int GradedModule::dim_below(long m) const { return static_cast<int>(weights_below(m).size()); }

std::vector<RatVec> GradedModule::weights_below(long m) const {
    std::vector<RatVec> out;
    for (const auto& [k, ws] : levels)
        if (k < m) out.insert(out.end(), ws.begin(), ws.end());
    return out;
}

GradedModule grade(const GroupData& g, const OneParamSubgroup& lam) {
    if (lam.size() != g.dim) throw std::invalid_argument("one-parameter subgroup has wrong dimension");
    if (!in_chamber(g, lam)) throw std::invalid_argument("one-parameter subgroup is not dominant");
    GradedModule gm;
    for (const auto& beta : g.weights_p_minus) gm.levels[level_of(lam, beta)].push_back(beta);
    gm.levels[0].push_back(RatVec(g.dim, 0));
    return gm;
}

bool is_well_covering(const GroupData& g, const WCPair& pair) {
    Context c = context(g, pair.lam);
    check_pair(g, c, pair);
    return well_covering(g, c, pair);
}

bool is_dominant_pair(const GroupData& g, const WCPair& pair) {
    Context c = context(g, pair.lam);
    check_pair(g, c, pair);
    return dominant(c, pair);
}

std::vector<WCPair> enumerate_m0(const GroupData& g, const OneParamSubgroup& lam) {
    static Cache cache;
    static std::mutex mu;
    return cached(cache, mu, g, lam, [&g](const Context& c, const WCPair& p) { return well_covering(g, c, p); });
}

std::vector<WCPair> enumerate_dominant_m0(const GroupData& g, const OneParamSubgroup& lam) {
    static Cache cache;
    static std::mutex mu;
    return cached(cache, mu, g, lam, [](const Context& c, const WCPair& p) { return dominant(c, p); });
}

nlohmann::json to_json(const WCPair& p) {
    nlohmann::json lam = nlohmann::json::array();
    for (const auto& x : p.lam) lam.push_back(x.get_num().get_si());
    return {{"w", p.w.str()}, {"w_prime", p.w_prime.str()}, {"m", p.m}, {"lambda", lam}};
}

} // namespace orbitope
