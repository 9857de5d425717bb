#pragma once

#include <set>

#include "orbitope/rootdata.hpp"

namespace orbitope {

// Integral generator of a one-parameter subgroup of the torus, in e-coordinates.
using OneParamSubgroup = RatVec;
using AdmissibleSet = std::set<OneParamSubgroup>;

// Kernel search over (dim - 1)-subsets of the positive noncompact roots.
AdmissibleSet enumerate_admissible(const GroupData& g);
// Literal lists per family.
AdmissibleSet closed_form_admissible(const GroupData& g);

// Dimension of the span of {beta in R_n^+ : <lam, beta> = 0}; relative to the
// trace-zero hyperplane for SU(p,q) in full coordinates.
int zero_span_dim(const GroupData& g, const OneParamSubgroup& lam);
// Rank of the admissibility condition: dim of the torus of the semisimple part.
int admissible_rank(const GroupData& g);
bool is_admissible(const GroupData& g, const OneParamSubgroup& lam);

} // namespace orbitope
