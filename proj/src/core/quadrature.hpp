#pragma once

#include <array>
#include <functional>
#include <vector>

#include "vec.hpp"

namespace hhc {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre rule of the given order, computed once and cached.
const GaussRule& gauss_legendre(int order);

double integrate_gl(const std::function<double(double)>& f, double a, double b, int order);

// Composite rule over [a, b] split at the given interior breakpoints
// (unsorted, out-of-range entries are ignored).
double integrate_segments(const std::function<double(double)>& f, double a, double b,
                          std::vector<double> breaks, int order);

// Composite rule on [a, b] with panels geometrically graded toward a.
// Handles integrands with an algebraic singularity in a derivative at a
// (e.g. t^alpha for fractional alpha).
double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        int levels = 12, int order = 32);

// Adaptive bisection with embedded Gauss estimates; absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 60);

// Fixed-degree rules on the reference triangle / tetrahedron (Duffy maps,
// exact for total degree <= 20 resp. <= 11).
struct SimplexRule {
    std::vector<std::array<double, 3>> points;  // barycentric-free: reference coords + weight
};

double integrate_triangle(const std::function<double(const Vec2&)>& f, const Vec2& a,
                          const Vec2& b, const Vec2& c);
double integrate_triangle_adaptive(const std::function<double(const Vec2&)>& f, const Vec2& a,
                                   const Vec2& b, const Vec2& c, double abs_tol,
                                   int max_depth = 22);

double integrate_tet(const std::function<double(const Vec3&)>& f, const Vec3& a, const Vec3& b,
                     const Vec3& c, const Vec3& d);
double integrate_tet_adaptive(const std::function<double(const Vec3&)>& f, const Vec3& a,
                              const Vec3& b, const Vec3& c, const Vec3& d, double abs_tol,
                              int max_depth = 18);

}  // namespace hhc
