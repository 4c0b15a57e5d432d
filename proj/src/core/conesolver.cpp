#include "conesolver.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "error.hpp"
#include "quadrature.hpp"
#include "tolerances.hpp"

namespace hhc {

double max_slope(int n, double c, double length) {
    if (n < 2 || !(c > 0.0) || !(length > 0.0))
        throw InvalidArgumentError("max_slope: positive volume, length and n >= 2 required");
    double kappa = unit_ball_volume(n - 1);
    return std::pow(c * n / (kappa * std::pow(length, n)), 1.0 / (n - 1));
}

namespace {

double ipow(double x, int k) {
    double out = 1.0;
    while (k > 0) {
        if (k & 1) out *= x;
        x *= x;
        k >>= 1;
    }
    return out;
}

// integral_0^w (a + b s)^(n-1) ds = ((a+bw)^n - a^n) / (n b); the textbook
// difference cancels catastrophically when |b w| << a, so route small
// relative slopes through expm1/log1p.
double linear_power_integral(double a, double b, double w, int n) {
    if (w <= 0.0) return 0.0;
    if (b == 0.0 || a == 0.0) {
        if (b == 0.0) return ipow(a, n - 1) * w;
        return ipow(b * w, n) / (n * b);
    }
    const double x = b * w / a;
    if (x > -0.5 && x < 0.5) {
        // a^{n-1} w * ((1+x)^n - 1) / (n x)
        double g = std::expm1(n * std::log1p(x)) / (n * x);
        return ipow(a, n - 1) * w * g;
    }
    return (ipow(a + b * w, n) - ipow(a, n)) / (n * b);
}

}  // namespace

double solve_r(int n, double c, double m, double length) {
    if (n < 2 || !(c > 0.0) || !(length > 0.0))
        throw InvalidArgumentError("solve_r: positive volume, length and n >= 2 required");
    const double m0 = max_slope(n, c, length);
    if (std::abs(m) > m0 * (1.0 + 1e-12))
        throw InvalidArgumentError("solve_r: |m| exceeds the admissible slope");
    // Rescale the interval to [0,1]: slope mh = m*length, target ch = c/length.
    const double mh = std::clamp(m * length, -m0 * length, m0 * length);
    const double ch = c / length;
    const double kappa = unit_ball_volume(n - 1);

    if (std::abs(mh) < 1e-14 * m0 * length)
        return std::pow(ch / kappa, 1.0 / (n - 1));
    if (n == 2) return std::max(0.0, (ch - mh) / 2.0);
    if (n == 3) {
        double disc = 4.0 * ch / std::acos(-1.0) - mh * mh / 3.0;
        return std::max(0.0, 0.5 * (-mh + std::sqrt(std::max(0.0, disc))));
    }

    // General n: kappa*((r+mh)^n - r^n)/(n*mh) is increasing in r.
    auto vol = [&](double r) { return kappa * linear_power_integral(r, mh, 1.0, n); };
    double lo = std::max(0.0, -mh);
    double hi = lo + std::pow(ch / kappa, 1.0 / (n - 1)) + std::abs(mh) + 1.0;
    while (vol(hi) < ch) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (vol(mid) < ch ? lo : hi) = mid;
        if (hi - lo <= tol::radius_solve * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

double median_t(int n, double r, double m) {
    if (n < 2) throw InvalidArgumentError("median_t: n >= 2 required");
    if (r == 0.0 && m == 0.0) throw DegenerateError("median_t: degenerate cone");
    if (std::abs(m) <= 1e-6 * r) {
        if (m == 0.0) return 0.5;
        return 0.5 + (n - 1) * m / (8.0 * r);  // series; avoids cancellation
    }
    double mid = std::pow(0.5 * (std::pow(r, n) + std::pow(r + m, n)), 1.0 / n);
    return (mid - r) / m;
}

double cone_volume(const TruncatedCone& cone) { return cone_volume_below(cone, cone.t1); }

double cone_volume_below(const TruncatedCone& cone, double t) {
    const int n = cone.dim;
    const double kappa = unit_ball_volume(n - 1);
    const double s = std::clamp(t - cone.t0, 0.0, cone.t1 - cone.t0);
    return kappa * linear_power_integral(cone.r, cone.m, s, n);
}

namespace {

// Per-knot prefix integrals of v^(n-1); every balance evaluation is then a
// knot scan plus two closed-form lookups.
struct ProfilePrefix {
    std::vector<double> prefix;  // prefix[i] = integral_{t0}^{ts[i]} v^{n-1}

    static ProfilePrefix build(const Profile& p) {
        ProfilePrefix out;
        out.prefix.resize(p.ts.size(), 0.0);
        for (std::size_t i = 0; i + 1 < p.ts.size(); ++i) {
            double w = p.ts[i + 1] - p.ts[i];
            double b = (p.vs[i + 1] - p.vs[i]) / w;
            out.prefix[i + 1] =
                out.prefix[i] + linear_power_integral(p.vs[i], b, w, p.dim);
        }
        return out;
    }

    double upto(const Profile& p, std::size_t seg, double t) const {
        double w = p.ts[seg + 1] - p.ts[seg];
        double b = (p.vs[seg + 1] - p.vs[seg]) / w;
        return prefix[seg] + linear_power_integral(p.vs[seg], b, t - p.ts[seg], p.dim);
    }
};

struct Balance {
    double lobe_low = 0.0;
    double lobe_high = 0.0;
    double t_lo = 0.0, t_hi = 0.0;
};

// d(t) = vR(t) - vp(t) is convex piecewise linear (linear minus concave), so
// it has at most two sign changes; locate the outermost roots and integrate
// the excess over the outer intervals via the prefix table.
Balance balance_at(const Profile& p, const ProfilePrefix& pre, double r, double m) {
    const double t0 = p.t0(), t1 = p.t1();
    const int n = p.dim;
    bool have_root = false;
    double t_lo = t0, t_hi = t1;
    std::size_t seg_lo = 0, seg_hi = p.ts.size() - 2;
    double prev_d = r - p.vs[0];
    auto note_root = [&](double t, std::size_t seg) {
        if (!have_root) {
            t_lo = t;
            seg_lo = seg;
            have_root = true;
        }
        t_hi = t;
        seg_hi = seg;
    };
    if (prev_d == 0.0) note_root(t0, 0);
    for (std::size_t i = 1; i < p.ts.size(); ++i) {
        double d = r + m * (p.ts[i] - t0) - p.vs[i];
        if (d == 0.0) {
            note_root(p.ts[i], std::min(i, p.ts.size() - 2));
        } else if ((prev_d < 0.0 && d > 0.0) || (prev_d > 0.0 && d < 0.0)) {
            double lam = prev_d / (prev_d - d);
            note_root(p.ts[i - 1] + lam * (p.ts[i] - p.ts[i - 1]), i - 1);
        }
        prev_d = d;
    }

    Balance out;
    out.t_lo = have_root ? t_lo : t0;
    out.t_hi = have_root ? t_hi : t1;
    if (!have_root) return out;  // cone coincides with the profile

    const double kappa = unit_ball_volume(n - 1);
    if (seg_lo >= p.ts.size() - 1) seg_lo = p.ts.size() - 2;
    if (seg_hi >= p.ts.size() - 1) seg_hi = p.ts.size() - 2;
    double cone_low = linear_power_integral(r, m, out.t_lo - t0, n);
    double prof_low = pre.upto(p, seg_lo, out.t_lo);
    out.lobe_low = std::max(0.0, kappa * (cone_low - prof_low));

    double cone_total = linear_power_integral(r, m, t1 - t0, n);
    double cone_high = cone_total - linear_power_integral(r, m, out.t_hi - t0, n);
    double prof_high = pre.prefix.back() - pre.upto(p, seg_hi, out.t_hi);
    out.lobe_high = std::max(0.0, kappa * (cone_high - prof_high));
    return out;
}

}  // namespace

TruncatedCone equal_split_cone(const Profile& p) {
    const int n = p.dim;
    const double t0 = p.t0(), t1 = p.t1(), len = t1 - t0;
    ProfilePrefix pre = ProfilePrefix::build(p);
    const double c = unit_ball_volume(n - 1) * pre.prefix.back();
    if (!(c > 0.0)) throw DegenerateError("equal_split_cone: profile has zero volume");

    TruncatedCone cone;
    cone.dim = n;
    cone.t0 = t0;
    cone.t1 = t1;

    // A profile that is already a straight line is its own equal-split cone.
    const double chord_tol = tol::cone_chord * std::max(1.0, p.max_v());
    double dev = 0.0;
    for (std::size_t i = 0; i < p.ts.size(); ++i) {
        double chord = p.vs.front() + (p.vs.back() - p.vs.front()) * (p.ts[i] - t0) / len;
        dev = std::max(dev, std::abs(p.vs[i] - chord));
    }
    if (dev <= chord_tol) {
        cone.r = p.vs.front();
        cone.m = (p.vs.back() - p.vs.front()) / len;
        cone.t0_star = t0;
        cone.t1_star = t1;
        cone.t_median = t0 + len * median_t(n, cone.r, cone.m * len);
        return cone;
    }

    const double m0 = max_slope(n, c, len);
    auto beta = [&](double m, Balance* bal_out = nullptr) {
        double r = solve_r(n, c, m, len);
        Balance bal = balance_at(p, pre, r, m);
        if (bal_out) *bal_out = bal;
        return bal.lobe_low - bal.lobe_high;
    };

    // The balance function runs from +|R\C'| at -m0 down to -|R\C'| at +m0.
    double lo = -m0, hi = m0;
    double beta_lo = beta(lo), beta_hi = beta(hi);
    double m_star;
    if (beta_lo <= 0.0)
        m_star = lo;
    else if (beta_hi >= 0.0)
        m_star = hi;
    else {
        for (int it = 0; it < tol::max_bisect_iterations; ++it) {
            double mid = 0.5 * (lo + hi);
            if (beta(mid) >= 0.0)
                lo = mid;
            else
                hi = mid;
            if (hi - lo <= tol::slope_bisect * std::max(1.0, m0)) break;
        }
        m_star = 0.5 * (lo + hi);
    }

    Balance bal;
    beta(m_star, &bal);
    cone.m = m_star;
    cone.r = solve_r(n, c, m_star, len);
    cone.t0_star = bal.t_lo;
    cone.t1_star = bal.t_hi;
    cone.lobe_low = bal.lobe_low;
    cone.lobe_high = bal.lobe_high;
    cone.t_median = t0 + len * median_t(n, cone.r, cone.m * len);

    // Flag profiles whose balance function crosses zero more than once on a
    // coarse slope grid; bisection still selects a single root.
    int zero_crossings = 0;
    double prev = beta_lo;
    for (int k = 1; k <= 32; ++k) {
        double m = -m0 + 2.0 * m0 * k / 32.0;
        double b = k == 32 ? beta_hi : beta(m);
        if ((prev > 0.0 && b < 0.0) || (prev < 0.0 && b > 0.0)) ++zero_crossings;
        if (b != 0.0) prev = b;
    }
    cone.multiple_sign_changes = zero_crossings > 1;
    return cone;
}

}  // namespace hhc
