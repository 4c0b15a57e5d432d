#pragma once

// Test-only independent numerics: everything here deliberately avoids the
// library's quadrature and optimizer code paths.

#include <cmath>
#include <functional>
#include <vector>

#include "core/functions.hpp"
#include "core/profile.hpp"

namespace hhtest {

inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    if (intervals % 2) ++intervals;
    double h = (b - a) / intervals;
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int depth = 40) {
    double whole = simpson(f, a, b, 16);
    double m = 0.5 * (a + b);
    double split = simpson(f, a, m, 16) + simpson(f, m, b, 16);
    double floor_tol = 1e-15 * std::abs(split);
    if (depth <= 0 || std::abs(split - whole) <= std::max(tol, floor_tol)) return split;
    return adaptive_simpson(f, a, m, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, 0.5 * tol, depth - 1);
}

inline double erfi_oracle(double x) {
    auto f = [](double t) { return std::exp(t * t); };
    double rough = simpson(f, 0.0, x, 4096);
    double val = adaptive_simpson(f, 0.0, x, 1e-14 * std::max(1.0, rough));
    return 2.0 / std::sqrt(std::acos(-1.0)) * val;
}

// Dense-grid evaluation of the slope-family objective, solving the radius
// with plain bisection and the median with plain bisection as well.
inline double brute_reduced_bound(int n, double c, double f0, const hhc::ConvexGauge& phi,
                                  int slopes = 1025, int panels = 4096) {
    const double kappa = hhc::unit_ball_volume(n - 1);
    const double m0 = std::pow(c * n / kappa, 1.0 / (n - 1));
    auto volume_of = [&](double r, double m) {
        auto h = [&](double t) { return kappa * std::pow(std::max(r + m * t, 0.0), n - 1); };
        return simpson(h, 0.0, 1.0, 2048);
    };
    auto solve_radius = [&](double m) {
        double lo = std::max(0.0, -m), hi = lo + std::pow(c / kappa, 1.0 / (n - 1)) + std::abs(m) + 1.0;
        while (volume_of(hi, m) < c) hi *= 2.0;
        for (int i = 0; i < 100; ++i) {
            double mid = 0.5 * (lo + hi);
            (volume_of(mid, m) < c ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    auto median_of = [&](double r, double m) {
        auto below = [&](double t) {
            auto h = [&](double s) { return kappa * std::pow(std::max(r + m * s, 0.0), n - 1); };
            return simpson(h, 0.0, t, 1024);
        };
        double target = 0.5 * volume_of(r, m);
        double lo = 0.0, hi = 1.0;
        for (int i = 0; i < 80; ++i) {
            double mid = 0.5 * (lo + hi);
            (below(mid) < target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    double best = 0.0;
    for (int k = 0; k < slopes; ++k) {
        double m = -m0 + 2.0 * m0 * k / (slopes - 1);
        double r = solve_radius(m);
        double tm = median_of(r, m);
        auto h = [&](double t) {
            return phi(f0 * t / tm) * kappa * std::pow(std::max(r + m * t, 0.0), n - 1);
        };
        best = std::max(best, simpson(h, 0.0, 1.0, panels));
    }
    return best;
}

}  // namespace hhtest
