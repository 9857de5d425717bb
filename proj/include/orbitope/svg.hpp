#pragma once

#include <string>

#include "orbitope/polytope.hpp"

namespace orbitope {

// Static SVG of a rank-2 polytope: shaded region, facet lines, chamber walls,
// and the cone Lambda + cone(R_n^+). The view box is Lambda +- extent.
std::string plot_svg(const OrbitPolytope& p, int extent = 6);

// Vertices of {x in box : sys} for a rank-2 system, counterclockwise; exact.
std::vector<RatVec> clip_to_box(const HPolyhedron& sys, const RatVec& lo, const RatVec& hi);

} // namespace orbitope
