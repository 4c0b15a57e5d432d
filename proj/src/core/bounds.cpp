#include "bounds.hpp"

#include <algorithm>
#include <cmath>

#include "conesolver.hpp"
#include "error.hpp"
#include "profile.hpp"
#include "quadrature.hpp"
#include "tolerances.hpp"

namespace hhc {

double erfi(double x) {
    if (!(x >= 0.0) || x > 8.0) throw InvalidArgumentError("erfi: x must lie in [0, 8]");
    if (x == 0.0) return 0.0;
    auto f = [](double t) { return std::exp(t * t); };
    // Rough scale first (panels graded toward x, where the mass sits), then
    // adaptive refinement to 1e-13 relative.
    auto reflected = [&](double s) { return f(x - s); };
    double rough = integrate_graded(reflected, 0.0, x, 16, 32);
    double value = integrate_adaptive(f, 0.0, x, 1e-13 * rough);
    return 2.0 / std::sqrt(std::acos(-1.0)) * value;
}

namespace {

bool needs_grading(const ConvexGauge& phi) {
    return phi.kind == ConvexGauge::Kind::power && phi.alpha != std::floor(phi.alpha);
}

// integral_0^1 phi(f0 t / t_m) * kappa * (r + m t)^{n-1} dt.
double objective(int n, double f0, const ConvexGauge& phi, double r, double m, double t_m,
                 bool accurate) {
    const double kappa = unit_ball_volume(n - 1);
    const double scale = f0 / t_m;
    auto h = [&](double t) {
        double w = r + m * t;
        double wp = n == 2 ? w : (n == 3 ? w * w : std::pow(std::max(w, 0.0), n - 1));
        return phi(scale * t) * kappa * std::max(wp, 0.0);
    };
    if (!accurate) return integrate_gl(h, 0.0, 1.0, 64);
    if (needs_grading(phi)) return integrate_graded(h, 0.0, 1.0, 13, 32);
    std::vector<double> breaks;
    for (double k : phi.kinks()) {
        double t = k / scale;
        if (t > 0.0 && t < 1.0) breaks.push_back(t);
    }
    return integrate_segments(h, 0.0, 1.0, std::move(breaks), 64);
}

struct ConeParams {
    double r, t;
};

ConeParams cone_params(int n, double c, double m) {
    if (n == 2) {
        auto [r, t] = params_2d(c, m);
        return {r, t};
    }
    if (n == 3) {
        auto [r, t] = params_3d(c, m);
        return {r, t};
    }
    double r = solve_r(n, c, m, 1.0);
    return {r, median_t(n, r, m)};
}

void validate_gauge(const ConvexGauge& phi) {
    if (phi.kind == ConvexGauge::Kind::power && !(phi.alpha >= 1.0))
        throw InvalidArgumentError("gauge: alpha must be >= 1");
    if (std::abs(phi(0.0)) > 1e-15) throw InvalidArgumentError("gauge: phi(0) must be 0");
}

}  // namespace

BoundReport reduced_bound(int n, double c, double f0, const ConvexGauge& phi) {
    if (n < 2) throw InvalidArgumentError("reduced_bound: n >= 2 required");
    if (!(c > 0.0)) throw InvalidArgumentError("reduced_bound: volume must be positive");
    if (!(f0 >= 0.0)) throw InvalidArgumentError("reduced_bound: f0 must be nonnegative");
    validate_gauge(phi);

    BoundReport rep;
    rep.n = n;
    rep.c = c;
    rep.f0 = f0;
    rep.method = n == 2 ? "closed-form-2d" : (n == 3 ? "closed-form-3d" : "generic");

    if (f0 == 0.0) {  // phi(0) = 0 kills the integrand for every slope
        ConeParams p = cone_params(n, c, 0.0);
        rep.r_m = p.r;
        rep.t_m = p.t;
        return rep;
    }

    const double m0 = max_slope(n, c, 1.0);
    auto F = [&](double m, bool accurate) {
        ConeParams p = cone_params(n, c, m);
        return objective(n, f0, phi, p.r, m, p.t, accurate);
    };

    // Coarse scan: the objective is only known to be unimodal gauge by
    // gauge, so scan densely before refining.
    const int grid = tol::coarse_slopes;
    int best = 0;
    double best_val = -1.0;
    for (int k = 0; k < grid; ++k) {
        double m = -m0 + 2.0 * m0 * k / (grid - 1);
        double v = F(m, false);
        if (v > best_val) {
            best_val = v;
            best = k;
        }
    }
    double lo = -m0 + 2.0 * m0 * std::max(0, best - 1) / (grid - 1);
    double hi = -m0 + 2.0 * m0 * std::min(grid - 1, best + 1) / (grid - 1);

    // Golden-section refinement on the bracket.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = F(x1, true), f2 = F(x2, true);
    while (b - a > tol::argmax_tol * std::max(1.0, m0)) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = F(x2, true);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = F(x1, true);
        }
    }

    double m_best = 0.5 * (a + b);
    double v_best = F(m_best, true);
    for (double m : {-m0, m0, -m0 + 2.0 * m0 * best / (grid - 1)}) {
        double v = F(m, true);
        if (v > v_best) {
            v_best = v;
            m_best = m;
        }
    }

    ConeParams p = cone_params(n, c, m_best);
    rep.bound = v_best;
    rep.argmax_m = m_best;
    rep.r_m = p.r;
    rep.t_m = p.t;
    return rep;
}

std::vector<std::pair<double, double>> reduced_bound_trace(int n, double c, double f0,
                                                           const ConvexGauge& phi) {
    if (n < 2) throw InvalidArgumentError("reduced_bound_trace: n >= 2 required");
    if (!(c > 0.0)) throw InvalidArgumentError("reduced_bound_trace: volume must be positive");
    if (!(f0 >= 0.0)) throw InvalidArgumentError("reduced_bound_trace: f0 must be nonnegative");
    validate_gauge(phi);
    const double m0 = max_slope(n, c, 1.0);
    std::vector<std::pair<double, double>> trace;
    trace.reserve(tol::coarse_slopes);
    for (int k = 0; k < tol::coarse_slopes; ++k) {
        double m = -m0 + 2.0 * m0 * k / (tol::coarse_slopes - 1);
        if (f0 == 0.0) {
            trace.emplace_back(m, 0.0);
            continue;
        }
        ConeParams p = cone_params(n, c, m);
        trace.emplace_back(m, objective(n, f0, phi, p.r, m, p.t, true));
    }
    return trace;
}

double power_bound_2d(double alpha, double c, double f0) {
    if (!(alpha >= 1.0)) throw InvalidArgumentError("power_bound_2d: alpha must be >= 1");
    if (!(c > 0.0)) throw InvalidArgumentError("power_bound_2d: volume must be positive");
    if (!(f0 >= 0.0)) throw InvalidArgumentError("power_bound_2d: f0 must be nonnegative");
    if (f0 == 0.0) return 0.0;
    const double s2 = std::sqrt(2.0);
    return c * std::pow(f0, alpha) * 2.0 / ((alpha + 1.0) * (alpha + 2.0)) *
           std::pow(s2 / (s2 - 1.0), alpha);
}

double conjecture_bound(int n, double f0, const ConvexGauge& phi) {
    if (n < 2) throw InvalidArgumentError("conjecture_bound: n >= 2 required");
    if (!(f0 >= 0.0)) throw InvalidArgumentError("conjecture_bound: f0 must be nonnegative");
    validate_gauge(phi);
    if (f0 == 0.0) return 0.0;
    const double root = std::pow(2.0, 1.0 / n);
    const double scale = f0 * root / (root - 1.0);
    auto h = [&](double t) { return phi(scale * t) * n * std::pow(1.0 - t, n - 1); };
    if (needs_grading(phi)) return integrate_graded(h, 0.0, 1.0, 13, 32);
    std::vector<double> breaks;
    for (double k : phi.kinks()) {
        double t = k / scale;
        if (t > 0.0 && t < 1.0) breaks.push_back(t);
    }
    return integrate_segments(h, 0.0, 1.0, std::move(breaks), 64);
}

std::pair<double, double> params_2d(double c, double m) {
    if (!(c > 0.0)) throw InvalidArgumentError("params_2d: volume must be positive");
    if (std::abs(m) > c * (1.0 + 1e-12))
        throw InvalidArgumentError("params_2d: |m| exceeds the admissible slope c");
    double r = std::max(0.0, (c - m) / 2.0);
    // t = (-(c-m) + sqrt(c^2+m^2)) / (2m), rearranged to avoid cancellation.
    double t = 0.5 + m / (2.0 * (std::hypot(c, m) + c));
    return {r, t};
}

std::pair<double, double> params_3d(double c, double m) {
    if (!(c > 0.0)) throw InvalidArgumentError("params_3d: volume must be positive");
    const double pi = std::acos(-1.0);
    const double m0 = std::sqrt(3.0 * c / pi);
    if (std::abs(m) > m0 * (1.0 + 1e-12))
        throw InvalidArgumentError("params_3d: |m| exceeds the admissible slope sqrt(3c/pi)");
    double disc = std::max(0.0, 4.0 * c / pi - m * m / 3.0);
    double r = std::max(0.0, 0.5 * (-m + std::sqrt(disc)));
    return {r, median_t(3, r, m)};
}

}  // namespace hhc
