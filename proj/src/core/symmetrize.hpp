#pragma once

#include "geometry.hpp"
#include "profile.hpp"
#include "tolerances.hpp"

namespace hhc {

// Schwarz symmetrization profile of a body along a unit direction:
// v(t) = (section_measure(body, u, t) / kappa_{n-1})^{1/(n-1)} on the support
// interval. Knots are a uniform grid of at least knot_count points merged
// with the section breakpoints (vertex levels), refined where the piecewise
// linear interpolant would deviate from the true section radius.
Profile schwarz_profile(const ConvexBody& body, const Point& u,
                        int knot_count = tol::default_knots);

}  // namespace hhc
