#pragma once

#include "profile.hpp"

namespace hhc {

// Truncated cone with bases orthogonal to the first axis: radius
// v(t) = r + m * (t - t0) on [t0, t1], rotationally symmetric, dimension n.
struct TruncatedCone {
    int dim = 2;
    double t0 = 0.0, t1 = 1.0;
    double r = 0.0;  // radius at t0
    double m = 0.0;  // slope per unit t
    double t_median = 0.5;  // volume-halving axis coordinate
    // Crossing points with the source profile (equal the endpoints when the
    // profile is itself a cone).
    double t0_star = 0.0, t1_star = 1.0;
    // Balance diagnostics from the equal-split construction.
    double lobe_low = 0.0, lobe_high = 0.0;  // excess volume left / right of the crossings
    bool multiple_sign_changes = false;      // balance function changed sign more than once

    double radius(double t) const { return r + m * (t - t0); }
};

// Largest admissible |slope| for a cone of volume c on an interval of the
// given length: (c*n / (kappa_{n-1} * length^n))^(1/(n-1)).
double max_slope(int n, double c, double length);

// Radius at the left endpoint making the cone volume equal c, for slope m on
// an interval of the given length (rescaled to [0,1] internally). Closed
// forms for n = 2 and n = 3, monotone bracketing otherwise.
double solve_r(int n, double c, double m, double length);

// Volume-halving coordinate of the cone v(s) = r + m*s on [0, 1].
double median_t(int n, double r, double m);

// The equal-volume truncated cone over the profile's support interval whose
// two excess lobes carry the same volume, found by bisection on the slope.
TruncatedCone equal_split_cone(const Profile& p);

double cone_volume(const TruncatedCone& cone);
// kappa-weighted volume of the cone between t0 and t.
double cone_volume_below(const TruncatedCone& cone, double t);

}  // namespace hhc
