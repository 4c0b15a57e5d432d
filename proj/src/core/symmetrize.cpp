#include "symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "error.hpp"

namespace hhc {

namespace {

std::vector<double> knot_grid(double t0, double t1, int knot_count,
                              std::vector<double> breakpoints) {
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(knot_count) + breakpoints.size());
    for (int i = 0; i < knot_count; ++i)
        ts.push_back(t0 + (t1 - t0) * static_cast<double>(i) / (knot_count - 1));
    for (double b : breakpoints)
        if (b > t0 && b < t1) ts.push_back(b);
    std::sort(ts.begin(), ts.end());
    const double merge = 1e-12 * (t1 - t0);
    std::vector<double> out;
    for (double t : ts)
        if (out.empty() || t - out.back() > merge) out.push_back(t);
    out.back() = t1;
    return out;
}

Profile sampled_profile(int dim, double t0, double t1, int knot_count,
                        const std::vector<double>& breakpoints,
                        const std::function<double(double)>& radius) {
    std::vector<double> base = knot_grid(t0, t1, knot_count, breakpoints);
    std::vector<std::pair<double, double>> knots;
    knots.reserve(base.size());
    for (double t : base) knots.emplace_back(t, radius(t));

    // Subdivide until the chord sits within tol_v of the true radius; the
    // midpoint gap is the worst-case gap for a concave radius function.
    double vmax = 0.0;
    for (const auto& [t, v] : knots) vmax = std::max(vmax, v);
    const double tol_v = 2e-9 * std::max(vmax, 1e-30);
    const double min_h = (t1 - t0) * 1e-7;
    const std::size_t max_knots = 200000;

    std::vector<std::pair<double, double>> out;
    out.reserve(knots.size());
    std::function<void(double, double, double, double)> refine =
        [&](double ta, double va, double tb, double vb) {
            if (tb - ta <= min_h || out.size() >= max_knots) return;
            double tm = 0.5 * (ta + tb);
            double vm = radius(tm);
            if (std::abs(vm - 0.5 * (va + vb)) <= tol_v) return;
            refine(ta, va, tm, vm);
            out.emplace_back(tm, vm);
            refine(tm, vm, tb, vb);
        };
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        out.push_back(knots[i]);
        refine(knots[i].first, knots[i].second, knots[i + 1].first, knots[i + 1].second);
    }
    out.push_back(knots.back());
    return make_profile(dim, std::move(out));
}

}  // namespace

Profile schwarz_profile(const ConvexBody& body, const Point& u, int knot_count) {
    if (knot_count < tol::min_knots)
        throw InvalidArgumentError("schwarz_profile: knot_count must be at least 33");
    require_unit_direction(u, body.dim());

    if (const auto* poly = std::get_if<Polygon2>(&body.shape)) {
        Frame2 frame = frame_from_direction(Vec2{u[0], u[1]});
        Polygon2 rot = rotate_to_frame(*poly, frame);
        double t0 = rot.vertices[0][0], t1 = t0;
        std::vector<double> breaks;
        for (const auto& v : rot.vertices) {
            t0 = std::min(t0, v[0]);
            t1 = std::max(t1, v[0]);
            breaks.push_back(v[0]);
        }
        if (!(t1 > t0)) throw DegenerateError("schwarz_profile: flat body");
        auto radius = [&](double t) {
            auto ch = polygon_chord(rot, t);
            return ch ? 0.5 * (ch->second - ch->first) : 0.0;
        };
        return sampled_profile(2, t0, t1, knot_count, breaks, radius);
    }

    if (const auto* pt = std::get_if<Polytope3>(&body.shape)) {
        Frame3 frame = frame_from_direction(Vec3{u[0], u[1], u[2]});
        Polytope3 rot = rotate_to_frame(*pt, frame);
        double t0 = rot.vertices[0][0], t1 = t0;
        std::vector<double> breaks;
        for (const auto& v : rot.vertices) {
            t0 = std::min(t0, v[0]);
            t1 = std::max(t1, v[0]);
            breaks.push_back(v[0]);
        }
        if (!(t1 > t0)) throw DegenerateError("schwarz_profile: flat body");

        // Between consecutive vertex levels the section polygon keeps its
        // combinatorics, so its area is an exact quadratic in t. Fit each
        // slab from three interior samples; all later radius evaluations are
        // then O(1) instead of a full polytope slicing.
        std::vector<double> levels = breaks;
        std::sort(levels.begin(), levels.end());
        const double merge = 1e-12 * (t1 - t0);
        std::vector<double> slabs;
        for (double v : levels)
            if (slabs.empty() || v - slabs.back() > merge) slabs.push_back(v);
        slabs.front() = t0;
        slabs.back() = t1;
        auto area_at = [&](double t) {
            auto sec = polytope_section(rot, t);
            return sec.empty() ? 0.0 : shoelace_area(sec);
        };
        struct SlabFit {
            double x0, x1, x2;  // sample abscissae
            double y0, y1, y2;  // sampled areas
        };
        // Interpolate through the exact boundary sections: caps where the
        // area vanishes stay exactly zero, which matters once the square
        // root turns area noise into radius noise.
        std::vector<SlabFit> fits;
        for (std::size_t i = 0; i + 1 < slabs.size(); ++i) {
            SlabFit fit;
            double lo = slabs[i], hi = slabs[i + 1];
            fit.x0 = lo;
            fit.x1 = 0.5 * (lo + hi);
            fit.x2 = hi;
            fit.y0 = area_at(fit.x0);
            fit.y1 = area_at(fit.x1);
            fit.y2 = area_at(fit.x2);
            fits.push_back(fit);
        }
        const double inv_kappa = 1.0 / unit_ball_volume(2);
        auto radius = [&, slabs, fits](double t) {
            std::size_t i =
                static_cast<std::size_t>(std::upper_bound(slabs.begin(), slabs.end(), t) -
                                         slabs.begin());
            if (i == 0) i = 1;
            if (i >= slabs.size()) i = slabs.size() - 1;
            const SlabFit& f = fits[i - 1];
            // Lagrange interpolation of the quadratic area
            double l0 = (t - f.x1) * (t - f.x2) / ((f.x0 - f.x1) * (f.x0 - f.x2));
            double l1 = (t - f.x0) * (t - f.x2) / ((f.x1 - f.x0) * (f.x1 - f.x2));
            double l2 = (t - f.x0) * (t - f.x1) / ((f.x2 - f.x0) * (f.x2 - f.x1));
            double area = f.y0 * l0 + f.y1 * l1 + f.y2 * l2;
            return std::sqrt(std::max(0.0, area * inv_kappa));
        };
        return sampled_profile(3, t0, t1, knot_count, breaks, radius);
    }

    // Profile bodies are their own symmetrization; resample on the requested
    // grid so the knot contract holds (flip when the direction is -e1).
    const Profile& pr = std::get<ProfileBody>(body.shape).profile;
    bool flip;
    {
        double axis = u[0];
        for (std::size_t i = 1; i < u.size(); ++i)
            if (std::abs(u[i]) > 1e-14)
                throw UnsupportedError(
                    "schwarz_profile: profile bodies support only the symmetry axis");
        if (std::abs(std::abs(axis) - 1.0) > 1e-12)
            throw UnsupportedError(
                "schwarz_profile: profile bodies support only the symmetry axis");
        flip = axis < 0.0;
    }
    Profile src = pr;
    if (flip) {
        Profile f;
        f.dim = pr.dim;
        for (std::size_t i = pr.ts.size(); i-- > 0;) {
            f.ts.push_back(-pr.ts[i]);
            f.vs.push_back(pr.vs[i]);
        }
        src = std::move(f);
    }
    std::vector<double> breaks(src.ts.begin(), src.ts.end());
    auto radius = [&](double t) { return src.eval(t); };
    return sampled_profile(src.dim, src.t0(), src.t1(), knot_count, breaks, radius);
}

}  // namespace hhc
