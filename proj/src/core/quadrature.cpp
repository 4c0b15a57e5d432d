#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace hhc {

namespace {

GaussRule compute_gauss(int order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const double pi = std::acos(-1.0);
    for (int k = 0; k < order; ++k) {
        // Chebyshev initial guess, then Newton on P_n(x) = 0.
        double x = std::cos(pi * (k + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[order - 1 - k] = x;
        rule.weights[order - 1 - k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

std::mutex g_rule_mutex;
std::map<int, GaussRule> g_rules;

}  // namespace

const GaussRule& gauss_legendre(int order) {
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto it = g_rules.find(order);
    if (it == g_rules.end()) it = g_rules.emplace(order, compute_gauss(order)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int order) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

double integrate_segments(const std::function<double(double)>& f, double a, double b,
                          std::vector<double> breaks, int order) {
    breaks.push_back(a);
    breaks.push_back(b);
    std::sort(breaks.begin(), breaks.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double lo = std::max(a, breaks[i]);
        double hi = std::min(b, breaks[i + 1]);
        if (hi - lo > 0.0) sum += integrate_gl(f, lo, hi, order);
    }
    return sum;
}

double integrate_graded(const std::function<double(double)>& f, double a, double b, int levels,
                        int order) {
    if (!(b > a)) return 0.0;
    double sum = 0.0;
    double hi = b;
    for (int k = 0; k < levels; ++k) {
        double lo = a + (b - a) * std::ldexp(1.0, -(k + 1));
        sum += integrate_gl(f, lo, hi, order);
        hi = lo;
    }
    sum += integrate_gl(f, a, hi, order);
    return sum;
}

namespace {

double adaptive_rec(const std::function<double(double)>& f, double a, double b, double whole,
                    double abs_tol, int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double left = integrate_gl(f, a, m, 15);
    const double right = integrate_gl(f, m, b, 15);
    // stop at roundoff: the halving tolerance must not chase noise
    const double floor_tol = 8.0 * 2.22e-16 * (std::abs(left) + std::abs(right));
    if (depth >= max_depth || std::abs(left + right - whole) <= std::max(abs_tol, floor_tol))
        return left + right;
    return adaptive_rec(f, a, m, left, 0.5 * abs_tol, depth + 1, max_depth) +
           adaptive_rec(f, m, b, right, 0.5 * abs_tol, depth + 1, max_depth);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
    if (!(b > a)) return 0.0;
    return adaptive_rec(f, a, b, integrate_gl(f, a, b, 15), abs_tol, 0, max_depth);
}

namespace {

// Duffy-collapsed tensor rules on the reference simplex. k = 11 is exact for
// total degree 20 on the triangle; k = 7 for degree 11 on the tetrahedron.
SimplexRule make_triangle_rule(int k) {
    const GaussRule& g = gauss_legendre(k);
    SimplexRule rule;
    rule.points.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        double u = 0.5 * (g.nodes[i] + 1.0), wu = 0.5 * g.weights[i];
        for (int j = 0; j < k; ++j) {
            double v = 0.5 * (g.nodes[j] + 1.0), wv = 0.5 * g.weights[j];
            rule.points.push_back({u * (1.0 - v), u * v, wu * wv * u});
        }
    }
    return rule;
}

struct TetRulePoint {
    double x, y, z, w;
};

std::vector<TetRulePoint> make_tet_rule(int k) {
    const GaussRule& g = gauss_legendre(k);
    std::vector<TetRulePoint> pts;
    pts.reserve(static_cast<std::size_t>(k) * k * k);
    for (int i = 0; i < k; ++i) {
        double u = 0.5 * (g.nodes[i] + 1.0), wu = 0.5 * g.weights[i];
        for (int j = 0; j < k; ++j) {
            double v = 0.5 * (g.nodes[j] + 1.0), wv = 0.5 * g.weights[j];
            for (int l = 0; l < k; ++l) {
                double w = 0.5 * (g.nodes[l] + 1.0), ww = 0.5 * g.weights[l];
                double x = u;
                double y = (1.0 - u) * v * (1.0 - w);
                double z = (1.0 - u) * v * w;
                double jac = (1.0 - u) * (1.0 - u) * v;
                pts.push_back({x, y, z, wu * wv * ww * jac});
            }
        }
    }
    return pts;
}

const SimplexRule& triangle_rule() {
    static const SimplexRule rule = make_triangle_rule(11);
    return rule;
}

const std::vector<TetRulePoint>& tet_rule() {
    static const std::vector<TetRulePoint> rule = make_tet_rule(7);
    return rule;
}

}  // namespace

double integrate_triangle(const std::function<double(const Vec2&)>& f, const Vec2& a,
                          const Vec2& b, const Vec2& c) {
    const double area2 = std::abs(cross(b - a, c - a));  // twice the area
    double sum = 0.0;
    for (const auto& p : triangle_rule().points) {
        Vec2 x = a + p[0] * (b - a) + p[1] * (c - a);
        sum += p[2] * f(x);
    }
    return sum * area2;  // the Duffy weights integrate over the unit reference triangle
}

namespace {

double tri_adaptive_rec(const std::function<double(const Vec2&)>& f, const Vec2& a, const Vec2& b,
                        const Vec2& c, double whole, double abs_tol, int depth, int max_depth) {
    const Vec2 ab = 0.5 * (a + b), bc = 0.5 * (b + c), ca = 0.5 * (c + a);
    const double i0 = integrate_triangle(f, a, ab, ca);
    const double i1 = integrate_triangle(f, ab, b, bc);
    const double i2 = integrate_triangle(f, ca, bc, c);
    const double i3 = integrate_triangle(f, ab, bc, ca);
    const double refined = i0 + i1 + i2 + i3;
    const double floor_tol =
        8.0 * 2.22e-16 * (std::abs(i0) + std::abs(i1) + std::abs(i2) + std::abs(i3));
    if (depth >= max_depth || std::abs(refined - whole) <= std::max(abs_tol, floor_tol))
        return refined;
    const double child_tol = 0.25 * abs_tol;
    return tri_adaptive_rec(f, a, ab, ca, i0, child_tol, depth + 1, max_depth) +
           tri_adaptive_rec(f, ab, b, bc, i1, child_tol, depth + 1, max_depth) +
           tri_adaptive_rec(f, ca, bc, c, i2, child_tol, depth + 1, max_depth) +
           tri_adaptive_rec(f, ab, bc, ca, i3, child_tol, depth + 1, max_depth);
}

double tet_volume6(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    return dot(b - a, cross(c - a, d - a));
}

double tet_adaptive_rec(const std::function<double(const Vec3&)>& f, const Vec3& a, const Vec3& b,
                        const Vec3& c, const Vec3& d, double whole, double abs_tol, int depth,
                        int max_depth) {
    const Vec3 e = 0.5 * (a + b), fm = 0.5 * (a + c), g = 0.5 * (a + d);
    const Vec3 p = 0.5 * (b + c), q = 0.5 * (b + d), r = 0.5 * (c + d);
    // Four corner tets plus the central octahedron split along the f-q diagonal.
    const std::array<std::array<Vec3, 4>, 8> kids = {{{a, e, fm, g},
                                                      {b, e, p, q},
                                                      {c, fm, p, r},
                                                      {d, g, q, r},
                                                      {fm, q, e, p},
                                                      {fm, q, p, r},
                                                      {fm, q, r, g},
                                                      {fm, q, g, e}}};
    std::array<double, 8> vals{};
    double refined = 0.0, mass = 0.0;
    for (int i = 0; i < 8; ++i) {
        vals[i] = integrate_tet(f, kids[i][0], kids[i][1], kids[i][2], kids[i][3]);
        refined += vals[i];
        mass += std::abs(vals[i]);
    }
    const double floor_tol = 8.0 * 2.22e-16 * mass;
    if (depth >= max_depth || std::abs(refined - whole) <= std::max(abs_tol, floor_tol))
        return refined;
    const double child_tol = abs_tol / 8.0;
    double sum = 0.0;
    for (int i = 0; i < 8; ++i)
        sum += tet_adaptive_rec(f, kids[i][0], kids[i][1], kids[i][2], kids[i][3], vals[i],
                                child_tol, depth + 1, max_depth);
    return sum;
}

}  // namespace

double integrate_triangle_adaptive(const std::function<double(const Vec2&)>& f, const Vec2& a,
                                   const Vec2& b, const Vec2& c, double abs_tol, int max_depth) {
    return tri_adaptive_rec(f, a, b, c, integrate_triangle(f, a, b, c), abs_tol, 0, max_depth);
}

double integrate_tet(const std::function<double(const Vec3&)>& f, const Vec3& a, const Vec3& b,
                     const Vec3& c, const Vec3& d) {
    const double vol6 = std::abs(tet_volume6(a, b, c, d));
    double sum = 0.0;
    for (const auto& p : tet_rule()) {
        Vec3 x = a + p.x * (b - a) + p.y * (c - a) + p.z * (d - a);
        sum += p.w * f(x);
    }
    return sum * vol6;
}

double integrate_tet_adaptive(const std::function<double(const Vec3&)>& f, const Vec3& a,
                              const Vec3& b, const Vec3& c, const Vec3& d, double abs_tol,
                              int max_depth) {
    return tet_adaptive_rec(f, a, b, c, d, integrate_tet(f, a, b, c, d), abs_tol, 0, max_depth);
}

}  // namespace hhc
