#pragma once

#include <utility>
#include <vector>

#include "vec.hpp"

namespace hhc {

struct Affine {
    Point gradient;
    double offset = 0.0;

    double eval(const Point& x) const { return dot(gradient, x) + offset; }
};

// Nonnegative concave function on a body: a single affine piece, or the
// pointwise minimum of finitely many.
struct ConcaveFunction {
    std::vector<Affine> pieces;  // nonempty

    bool is_affine() const { return pieces.size() == 1; }
    int dim() const { return static_cast<int>(pieces.front().gradient.size()); }
    double eval(const Point& x) const;
};

ConcaveFunction make_affine(Point gradient, double offset);
ConcaveFunction make_min_affine(std::vector<Affine> pieces);

// Convex gauge phi: [0,inf) -> [0,inf), phi(0) = 0 (hence nondecreasing).
struct ConvexGauge {
    enum class Kind { power, exp_minus_one, exp_square_minus_one, pwl };
    Kind kind = Kind::power;
    double alpha = 1.0;                                // power only
    std::vector<std::pair<double, double>> knots;      // pwl only

    double operator()(double s) const;
    // Abscissae where the gauge is not smooth (empty for the built-ins).
    std::vector<double> kinks() const;
};

ConvexGauge power_gauge(double alpha);
ConvexGauge exp_gauge();
ConvexGauge exp_square_gauge();
ConvexGauge pwl_gauge(std::vector<std::pair<double, double>> knots);

}  // namespace hhc
