#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "core/functions.hpp"
#include "core/geometry.hpp"

namespace hhtest {

using namespace hhc;

inline ConvexBody unit_square() {
    return make_body(make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

// The sharp-case triangle: one vertical edge, apex at (1, 0).
inline ConvexBody pointed_triangle() {
    return make_body(make_polygon({{0, -0.5}, {1, 0}, {0, 0.5}}));
}

inline ConvexBody right_triangle() {
    return make_body(make_polygon({{0, 0}, {1, 0}, {0, 1}}));
}

inline ConvexBody unit_cube() {
    std::vector<Vec3> pts;
    for (int i = 0; i < 8; ++i)
        pts.push_back({static_cast<double>(i & 1), static_cast<double>((i >> 1) & 1),
                       static_cast<double>((i >> 2) & 1)});
    return make_body(make_polytope(pts));
}

inline ConvexBody standard_tetra() {
    return make_body(make_polytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

// conv{(0,+-1/2,0),(1,0,0),(1,0,1)}: fibers above the shadow triangle have
// length exactly x.
inline ConvexBody prism_cone() {
    return make_body(make_polytope({{0, 0.5, 0}, {0, -0.5, 0}, {1, 0, 0}, {1, 0, 1}}));
}

// Unit-disc profile with cosine-spaced knots (accurate chordal area).
inline Profile disc_profile(int intervals = 4096) {
    std::vector<std::pair<double, double>> knots;
    const double pi = std::acos(-1.0);
    for (int i = 0; i <= intervals; ++i) {
        double theta = pi - pi * i / intervals;
        knots.emplace_back(std::cos(theta), std::sin(theta));
    }
    knots.front().second = 0.0;
    knots.back().second = 0.0;
    return make_profile(2, std::move(knots));
}

struct TestRng {
    std::mt19937_64 gen;
    explicit TestRng(std::uint64_t seed) : gen(seed) {}
    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
};

inline Polygon2 random_polygon(TestRng& rng, int max_pts = 16) {
    for (;;) {
        std::vector<Vec2> pts;
        int n = 5 + rng.below(max_pts - 4);
        for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        try {
            return hull_2d(std::move(pts));
        } catch (...) {
        }
    }
}

inline Polytope3 random_polytope(TestRng& rng, int max_pts = 18) {
    for (;;) {
        std::vector<Vec3> pts;
        int n = 6 + rng.below(max_pts - 5);
        for (int i = 0; i < n; ++i)
            pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
        try {
            return make_polytope(pts);
        } catch (...) {
        }
    }
}

inline Point random_unit(TestRng& rng, int dim) {
    for (;;) {
        Point u;
        double nn = 0.0;
        for (int i = 0; i < dim; ++i) {
            u.push_back(rng.uniform(-1, 1));
            nn += u.back() * u.back();
        }
        if (nn > 1e-4 && nn < 1.0) {
            double inv = 1.0 / std::sqrt(nn);
            for (double& x : u) x *= inv;
            return u;
        }
    }
}

// Uniform-ish interior point by rejection sampling in the bounding box.
inline Point random_interior_point(TestRng& rng, const ConvexBody& body) {
    int dim = body.dim();
    std::vector<double> lo(dim, 1e300), hi(dim, -1e300);
    for (int d = 0; d < dim; ++d) {
        Point axis(dim, 0.0);
        axis[d] = 1.0;
        auto [a, b] = support_interval(body, axis);
        lo[d] = a;
        hi[d] = b;
    }
    for (;;) {
        Point x(dim);
        for (int d = 0; d < dim; ++d) x[d] = rng.uniform(lo[d], hi[d]);
        if (contains(body, x, -1e-12)) return x;
    }
}

}  // namespace hhtest
