#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace orbitope {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);   // always "p/q"
std::string rational_pretty(const Rational& q); // "p" when integral
RatVec parse_ratvec(const std::string& csv);
std::string ratvec_str(const RatVec& v);

RatVec int_vec(std::initializer_list<long> xs);
Rational dot(const RatVec& a, const RatVec& b);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rational& c, const RatVec& a);
bool is_zero(const RatVec& a);

// Scales an integral vector so the entries have gcd 1. Zero stays zero.
RatVec primitive(const RatVec& v);

// <a, x> <= b, or <a, x> = b when eq is set.
struct AffineIneq {
    RatVec a;
    Rational b;
    bool eq = false;

    AffineIneq() = default;
    AffineIneq(RatVec a_, Rational b_, bool eq_ = false)
        : a(std::move(a_)), b(std::move(b_)), eq(eq_) {}

    std::size_t dim() const { return a.size(); }
    AffineIneq canonical() const;
    bool satisfied_by(const RatVec& x) const;
    bool trivial_true() const;
    bool trivial_false() const;

    friend bool operator==(const AffineIneq& x, const AffineIneq& y) {
        return x.eq == y.eq && x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const AffineIneq& x, const AffineIneq& y);
};

// Finite system of affine constraints. Constraints are stored canonically and
// deduplicated; a system that is trivially infeasible collapses to {0 <= -1}.
class HPolyhedron {
public:
    explicit HPolyhedron(std::size_t dim = 1);

    static HPolyhedron empty(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::vector<AffineIneq>& ineqs() const { return ineqs_; }
    std::size_t size() const { return ineqs_.size(); }
    bool is_empty_marker() const { return empty_; }

    // Returns false when the constraint was a duplicate or trivially true.
    bool add(const AffineIneq& c);
    void add_all(const HPolyhedron& other);
    bool contains(const RatVec& x) const;

    friend bool operator==(const HPolyhedron& p, const HPolyhedron& q) {
        return p.dim_ == q.dim_ && p.ineqs_ == q.ineqs_;
    }

private:
    std::size_t dim_;
    std::vector<AffineIneq> ineqs_;
    bool empty_ = false;
};

enum class LpStatus { Infeasible, Unbounded, Optimal };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RatVec point;
};

// Exact maximization of <c, x> over sys (two-phase simplex, Bland's rule).
LpResult lp_maximize(const HPolyhedron& sys, const RatVec& c);
bool lp_feasible(const HPolyhedron& sys);
std::optional<RatVec> lp_witness(const HPolyhedron& sys);

// True when every point of sys satisfies c. An empty sys implies everything.
bool implies(const HPolyhedron& sys, const AffineIneq& c);

// keep[i] is false exactly for constraints dropped as redundant, scanning in order.
std::vector<bool> irredundant_mask(const HPolyhedron& sys);
HPolyhedron remove_redundant(const HPolyhedron& sys);
bool poly_equal(const HPolyhedron& p, const HPolyhedron& q);
bool poly_subset(const HPolyhedron& p, const HPolyhedron& q);

// Fourier-Motzkin elimination.
HPolyhedron fm_eliminate(const HPolyhedron& sys, std::size_t var);
bool fm_feasible(const HPolyhedron& sys);
// Projects onto the first k coordinates.
HPolyhedron fm_project(const HPolyhedron& sys, std::size_t k);

nlohmann::json to_json(const AffineIneq& c);
nlohmann::json to_json(const HPolyhedron& p);
AffineIneq ineq_from_json(const nlohmann::json& j);
HPolyhedron poly_from_json(const nlohmann::json& j);

} // namespace orbitope
