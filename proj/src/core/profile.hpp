#pragma once

#include <utility>
#include <vector>

namespace hhc {

// Volume of the d-dimensional Euclidean unit ball, via the rational
// recursion k_0 = 1, k_1 = 2, k_d = k_{d-2} * 2*pi / d.
double unit_ball_volume(int d);

// Radius function of a rotationally symmetric convex body along its axis:
// piecewise linear in the knots, v >= 0 and concave, on [t0, t1].
struct Profile {
    int dim = 2;  // ambient dimension n of the body it represents
    std::vector<double> ts;
    std::vector<double> vs;

    double t0() const { return ts.front(); }
    double t1() const { return ts.back(); }
    std::size_t size() const { return ts.size(); }

    // Piecewise-linear evaluation, clamped to [t0, t1].
    double eval(double t) const;
    double max_v() const;
};

// Validates knot ordering, nonnegativity and concavity (midpoint test at
// every interior knot). Throws InvalidArgumentError / DegenerateError.
Profile make_profile(int dim, std::vector<std::pair<double, double>> knots);

// kappa_{n-1} * integral of v^{n-1}; exact for the piecewise-linear knots.
double profile_volume(const Profile& p);

// kappa_{n-1} * integral of t * v^{n-1} (axis moment, for centroids).
double profile_moment(const Profile& p);

}  // namespace hhc
