#pragma once

// Central registry of the numeric tolerances used across the library.
// Values here are the documented defaults; the CLI prints them on --help.

namespace hhc::tol {

// Construction / validation
inline constexpr double vertex_merge = 1e-12;        // duplicate vertices merged below this
inline constexpr double unit_direction = 1e-9;       // |norm(u) - 1| allowed for direction args
inline constexpr double profile_concavity = 1e-9;    // midpoint slack in profile concavity checks
inline constexpr double gauge_convexity = 1e-10;     // slope monotonicity slack for pwl gauges
inline constexpr double negative_function = 1e-12;   // how negative f may get at a quadrature node

// Cone solver
inline constexpr double cone_chord = 1e-10;          // profile-deviation threshold for "already a cone"
inline constexpr double slope_bisect = 1e-12;        // bisection tolerance on the balanced slope m
inline constexpr int max_bisect_iterations = 200;
inline constexpr double radius_solve = 1e-14;        // relative tolerance for the r_m root

// Optimizer (reduced bound)
inline constexpr int coarse_slopes = 257;            // coarse grid size over [-m0, m0]
inline constexpr double argmax_tol = 1e-10;          // golden-section tolerance in m

// Verification
inline constexpr double violation_rel = 1e-7;        // slack >= -violation_rel * max(1, bound)
inline constexpr double tie_break = 1e-12;           // active-piece / argmax-face ties

// Profiles
inline constexpr int default_knots = 1025;
inline constexpr int min_knots = 33;

}  // namespace hhc::tol
