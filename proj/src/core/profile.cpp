#include "profile.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "quadrature.hpp"
#include "tolerances.hpp"

namespace hhc {

double unit_ball_volume(int d) {
    if (d < 0) throw InvalidArgumentError("unit_ball_volume: negative dimension");
    double k0 = 1.0, k1 = 2.0;
    if (d == 0) return k0;
    if (d == 1) return k1;
    const double two_pi = 2.0 * std::acos(-1.0);
    double even = k0, odd = k1;
    for (int j = 2; j <= d; ++j) {
        if (j % 2 == 0)
            even = even * two_pi / j;
        else
            odd = odd * two_pi / j;
    }
    return d % 2 == 0 ? even : odd;
}

double Profile::eval(double t) const {
    if (t <= ts.front()) return vs.front();
    if (t >= ts.back()) return vs.back();
    auto it = std::upper_bound(ts.begin(), ts.end(), t);
    std::size_t i = static_cast<std::size_t>(it - ts.begin());
    double lam = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
    return vs[i - 1] + lam * (vs[i] - vs[i - 1]);
}

double Profile::max_v() const { return *std::max_element(vs.begin(), vs.end()); }

Profile make_profile(int dim, std::vector<std::pair<double, double>> knots) {
    if (dim < 2) throw InvalidArgumentError("profile: dimension must be at least 2");
    if (knots.size() < 2) throw InvalidArgumentError("profile: need at least two knots");
    Profile p;
    p.dim = dim;
    p.ts.reserve(knots.size());
    p.vs.reserve(knots.size());
    for (const auto& [t, v] : knots) {
        if (!std::isfinite(t) || !std::isfinite(v))
            throw InvalidArgumentError("profile: non-finite knot");
        p.ts.push_back(t);
        p.vs.push_back(v);
    }
    double vmax = p.max_v();
    double vtol = tol::profile_concavity * std::max(1.0, vmax);
    for (std::size_t i = 0; i + 1 < p.ts.size(); ++i) {
        if (!(p.ts[i + 1] > p.ts[i]))
            throw InvalidArgumentError("profile: knot abscissae must be strictly increasing");
    }
    for (std::size_t i = 0; i < p.vs.size(); ++i) {
        if (p.vs[i] < -vtol) throw InvalidArgumentError("profile: negative radius");
        if (p.vs[i] < 0.0) p.vs[i] = 0.0;
    }
    if (vmax <= 0.0) throw DegenerateError("profile: identically zero radius");
    for (std::size_t i = 1; i + 1 < p.ts.size(); ++i) {
        double lam = (p.ts[i] - p.ts[i - 1]) / (p.ts[i + 1] - p.ts[i - 1]);
        double line = p.vs[i - 1] + lam * (p.vs[i + 1] - p.vs[i - 1]);
        if (p.vs[i] < line - vtol) throw InvalidArgumentError("profile: radius is not concave");
    }
    return p;
}

namespace {

// integral of (a + b*s)^k over s in [0, 1], via Gauss of sufficient order
double segment_power_integral(double a, double b, int k, double extra_t_power, double t_a,
                              double t_b) {
    // integrand (t coordinate) for the moment variant; plain volume uses extra_t_power = 0
    int order = std::max(2, k / 2 + 2);
    const GaussRule& g = gauss_legendre(order);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) {
        double s = 0.5 * (g.nodes[i] + 1.0);
        double w = 0.5 * g.weights[i];
        double val = std::pow(a + b * s, k);
        if (extra_t_power != 0.0) val *= (t_a + s * (t_b - t_a));
        sum += w * val;
    }
    return sum;
}

double profile_integral(const Profile& p, bool with_t) {
    const int k = p.dim - 1;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < p.ts.size(); ++i) {
        double h = p.ts[i + 1] - p.ts[i];
        total += h * segment_power_integral(p.vs[i], p.vs[i + 1] - p.vs[i], k,
                                            with_t ? 1.0 : 0.0, p.ts[i], p.ts[i + 1]);
    }
    return unit_ball_volume(k) * total;
}

}  // namespace

double profile_volume(const Profile& p) { return profile_integral(p, false); }

double profile_moment(const Profile& p) { return profile_integral(p, true); }

}  // namespace hhc
