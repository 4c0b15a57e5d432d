#pragma once

#include <string>
#include <utility>
#include <vector>

#include "functions.hpp"

namespace hhc {

struct BoundReport {
    double bound = 0.0;    // maximum of the slope family objective
    double argmax_m = 0.0; // maximizing slope in [-m0, m0]
    double t_m = 0.5;      // median coordinate of the maximizing cone
    double r_m = 0.0;      // base radius of the maximizing cone
    int n = 2;
    double c = 1.0;
    double f0 = 0.0;
    std::string method;    // generic | closed-form-2d | closed-form-3d | conjecture
};

// Imaginary error function (2/sqrt(pi)) * integral_0^x exp(t^2) dt, x in [0, 8].
double erfi(double x);

// Maximum over slopes m in [-m0, m0] of
//   F(m) = integral_0^1 phi(f0 * t / t_m) * kappa_{n-1} * (r_m + m t)^{n-1} dt,
// the comparison-cone upper bound for a body of volume c with f-value f0 at
// the center. Coarse scan plus golden-section refinement.
BoundReport reduced_bound(int n, double c, double f0, const ConvexGauge& phi);

// The (m, F(m)) samples of the coarse scan, for plotting.
std::vector<std::pair<double, double>> reduced_bound_trace(int n, double c, double f0,
                                                           const ConvexGauge& phi);

// Sharp planar bound for phi(t) = t^alpha per unit volume, times c * f0^alpha:
// c * f0^alpha * 2/((alpha+1)(alpha+2)) * (sqrt(2)/(sqrt(2)-1))^alpha.
double power_bound_2d(double alpha, double c, double f0);

// Conjectured sharp constant per unit volume:
//   n * integral_0^1 phi(f0 * 2^{1/n} t / (2^{1/n} - 1)) (1-t)^{n-1} dt.
double conjecture_bound(int n, double f0, const ConvexGauge& phi);

// Planar cone parameters (r_m, t_m) for volume c and slope m, closed form.
std::pair<double, double> params_2d(double c, double m);
// Spatial cone parameters (r_m, t_m), closed form.
std::pair<double, double> params_3d(double c, double m);

}  // namespace hhc
