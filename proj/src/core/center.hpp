#pragma once

#include <optional>

#include "conesolver.hpp"
#include "functions.hpp"
#include "geometry.hpp"
#include "tolerances.hpp"

namespace hhc {

// Affine upper bound g >= f on the body touching f at the basepoint.
struct SupportingAffine {
    Affine g;
    Point basepoint;
    std::size_t piece_index = 0;
};

struct CenterResult {
    Point point;        // the center
    Point direction;    // unit supporting-affine direction
    double t_value;     // <point, direction>
    TruncatedCone cone; // equal-split cone of the Schwarz profile
    double f_at_center; // f evaluated at the center
    bool tie_broken;    // the slice argmax was a face, resolved to its centroid
    Point start_point;  // where the supporting affine was taken
};

// For affine f this is f itself; for a minimum of affines it is the active
// piece at x0 (lowest index on ties).
SupportingAffine supporting_affine(const ConvexBody& body, const ConcaveFunction& f,
                                   const Point& x0);

// The center: maximizer of f on the slice of the body through the
// volume-halving plane of the equal-split cone, taken along the
// supporting-affine direction at x0 (default: the centroid).
CenterResult find_center(const ConvexBody& body, const ConcaveFunction& f,
                         const std::optional<Point>& x0 = std::nullopt,
                         int knot_count = tol::default_knots);

}  // namespace hhc
