#include "center.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "symmetrize.hpp"

namespace hhc {

namespace {

void require_nonnegative_on_body(const ConvexBody& body, const ConcaveFunction& f) {
    std::vector<Point> probes;
    if (const auto* poly = std::get_if<Polygon2>(&body.shape)) {
        for (const auto& v : poly->vertices) probes.push_back({v[0], v[1]});
    } else if (const auto* pt = std::get_if<Polytope3>(&body.shape)) {
        for (const auto& v : pt->vertices) probes.push_back({v[0], v[1], v[2]});
    } else {
        // Axis-dependent functions attain their minimum over the body at the
        // axis endpoints; anything else is out of scope for profile bodies.
        const Profile& pr = std::get<ProfileBody>(body.shape).profile;
        Point lo(static_cast<std::size_t>(pr.dim), 0.0), hi = lo;
        lo[0] = pr.t0();
        hi[0] = pr.t1();
        probes.push_back(lo);
        probes.push_back(hi);
    }
    double fmin = 0.0, fabsmax = 0.0;
    bool first = true;
    for (const auto& x : probes) {
        double v = f.eval(x);
        fmin = first ? v : std::min(fmin, v);
        fabsmax = std::max(fabsmax, std::abs(v));
        first = false;
    }
    if (fmin < -1e-9 * std::max(1.0, fabsmax))
        throw InvalidArgumentError("f is negative on the body");
}

bool axis_only(const ConcaveFunction& f) {
    for (const auto& p : f.pieces)
        for (std::size_t i = 1; i < p.gradient.size(); ++i)
            if (std::abs(p.gradient[i]) > 1e-14) return false;
    return true;
}

struct SegmentMax {
    double s_mid = 0.5;
    double extent = 0.0;  // parameter length of the maximizing face
    double fmax = 0.0;
};

// Maximize min_i (a_i + b_i * s) over s in [0, 1].
SegmentMax maximize_on_segment(const std::vector<std::pair<double, double>>& lines) {
    auto value = [&](double s) {
        double v = lines[0].first + lines[0].second * s;
        for (std::size_t i = 1; i < lines.size(); ++i)
            v = std::min(v, lines[i].first + lines[i].second * s);
        return v;
    };
    std::vector<double> cand{0.0, 1.0};
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            double db = lines[i].second - lines[j].second;
            if (db == 0.0) continue;
            double s = (lines[j].first - lines[i].first) / db;
            if (s > 0.0 && s < 1.0) cand.push_back(s);
        }
    double fmax = value(cand[0]);
    for (double s : cand) fmax = std::max(fmax, value(s));
    const double tie = tol::tie_break * std::max(1.0, std::abs(fmax));
    double s_lo = 1.0, s_hi = 0.0;
    for (double s : cand)
        if (value(s) >= fmax - tie) {
            s_lo = std::min(s_lo, s);
            s_hi = std::max(s_hi, s);
        }
    return SegmentMax{0.5 * (s_lo + s_hi), s_hi - s_lo, fmax};
}

struct PolygonMax {
    Vec2 point{0.0, 0.0};
    double diameter = 0.0;  // of the maximizing face
    double fmax = 0.0;
};

// Maximize min_i (dot(g_i, x) + c_i) over a convex polygon; exact via the
// finite candidate set of an LP in (x, z), then the argmax face centroid.
PolygonMax maximize_on_polygon(const std::vector<Vec2>& poly,
                               const std::vector<std::pair<Vec2, double>>& pieces) {
    auto value = [&](const Vec2& x) {
        double v = dot(pieces[0].first, x) + pieces[0].second;
        for (std::size_t i = 1; i < pieces.size(); ++i)
            v = std::min(v, dot(pieces[i].first, x) + pieces[i].second);
        return v;
    };
    double sc = 1.0;
    for (const auto& v : poly) sc = std::max({sc, std::abs(v[0]), std::abs(v[1])});

    auto inside = [&](const Vec2& x) {
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            Vec2 e = poly[(i + 1) % n] - poly[i];
            if (cross(e, x - poly[i]) < -1e-9 * sc * norm(e)) return false;
        }
        return true;
    };

    std::vector<Vec2> cand = poly;
    // Equality lines between pieces: n_ij . x = d_ij.
    std::vector<std::pair<Vec2, double>> lines;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            Vec2 nrm = pieces[i].first - pieces[j].first;
            if (norm(nrm) == 0.0) continue;
            lines.emplace_back(nrm, pieces[j].second - pieces[i].second);
        }
    const std::size_t n = poly.size();
    for (const auto& [nrm, d] : lines)
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = poly[i];
            const Vec2& b = poly[(i + 1) % n];
            double sa = dot(nrm, a) - d, sb = dot(nrm, b) - d;
            if ((sa < 0.0 && sb > 0.0) || (sa > 0.0 && sb < 0.0))
                cand.push_back(a + (sa / (sa - sb)) * (b - a));
        }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            double det = cross(lines[i].first, lines[j].first);
            if (std::abs(det) < 1e-14) continue;
            Vec2 x{(lines[i].second * lines[j].first[1] - lines[j].second * lines[i].first[1]) / det,
                   (lines[i].first[0] * lines[j].second - lines[j].first[0] * lines[i].second) / det};
            if (inside(x)) cand.push_back(x);
        }

    double fmax = value(cand[0]);
    Vec2 best = cand[0];
    for (const auto& x : cand) {
        double v = value(x);
        if (v > fmax) {
            fmax = v;
            best = x;
        }
    }

    // Argmax face: clip the polygon by every halfplane {piece >= fmax - tie}.
    const double tie = tol::tie_break * std::max(1.0, std::abs(fmax));
    std::vector<Vec2> face = poly;
    for (const auto& [g, c] : pieces) {
        if (face.empty()) break;
        face = clip_polygon(face, Vec2{-g[0], -g[1]}, c - (fmax - tie));
    }
    PolygonMax out;
    out.fmax = fmax;
    if (face.empty()) {
        out.point = best;
        return out;
    }
    for (const auto& a : face)
        for (const auto& b : face) out.diameter = std::max(out.diameter, norm(a - b));
    double area = shoelace_area(face);
    if (std::abs(area) > 1e-16 * sc * sc) {
        Vec2 cen{0.0, 0.0};
        for (std::size_t i = 0; i < face.size(); ++i) {
            const Vec2& u = face[i];
            const Vec2& v = face[(i + 1) % face.size()];
            double w = cross(u, v);
            cen = cen + w * (u + v);
        }
        out.point = (1.0 / (6.0 * area)) * cen;
    } else {
        // Flat face: centroid of its distinct extreme points.
        Vec2 lo = face[0], hi = face[0];
        for (const auto& v : face) {
            if (v < lo) lo = v;
            if (hi < v) hi = v;
        }
        out.point = 0.5 * (lo + hi);
    }
    return out;
}

}  // namespace

SupportingAffine supporting_affine(const ConvexBody& body, const ConcaveFunction& f,
                                   const Point& x0) {
    if (f.dim() != body.dim())
        throw InvalidArgumentError("supporting_affine: dimension mismatch");
    if (!contains(body, x0, 1e-9)) throw InvalidArgumentError("supporting_affine: x0 outside body");
    double fv = f.eval(x0);
    const double tie = tol::tie_break * std::max(1.0, std::abs(fv));
    for (std::size_t i = 0; i < f.pieces.size(); ++i) {
        if (f.pieces[i].eval(x0) <= fv + tie) return SupportingAffine{f.pieces[i], x0, i};
    }
    return SupportingAffine{f.pieces.front(), x0, 0};  // unreachable: min is attained
}

CenterResult find_center(const ConvexBody& body, const ConcaveFunction& f,
                         const std::optional<Point>& x0_opt, int knot_count) {
    const int n = body.dim();
    if (f.dim() != n) throw InvalidArgumentError("find_center: dimension mismatch");
    if (std::holds_alternative<ProfileBody>(body.shape) && !axis_only(f))
        throw UnsupportedError("find_center: profile bodies require axis-dependent functions");
    require_nonnegative_on_body(body, f);

    const Point x0 = x0_opt ? *x0_opt : centroid(body);
    SupportingAffine sup = supporting_affine(body, f, x0);

    Point dir = sup.g.gradient;
    double gn = norm(dir);
    if (gn <= 1e-12 * std::max(1.0, std::abs(sup.g.offset))) {
        dir.assign(static_cast<std::size_t>(n), 0.0);
        dir[0] = 1.0;  // g is constant; any direction supports it
    } else {
        for (double& d : dir) d /= gn;
    }

    CenterResult res;
    res.direction = dir;
    res.start_point = x0;
    res.cone = TruncatedCone{};

    Profile profile = schwarz_profile(body, dir, knot_count);
    res.cone = equal_split_cone(profile);
    const double t_r = res.cone.t_median;

    if (const auto* poly = std::get_if<Polygon2>(&body.shape)) {
        Frame2 frame = frame_from_direction(Vec2{dir[0], dir[1]});
        Polygon2 rot = rotate_to_frame(*poly, frame);
        auto chord = polygon_chord(rot, t_r);
        if (!chord) throw DegenerateError("find_center: empty slice");
        const double y0 = chord->first, y1 = chord->second;
        std::vector<std::pair<double, double>> lines;
        for (const auto& piece : f.pieces) {
            Vec2 g = frame.to_frame(Vec2{piece.gradient[0], piece.gradient[1]});
            lines.emplace_back(g[0] * t_r + g[1] * y0 + piece.offset, g[1] * (y1 - y0));
        }
        SegmentMax sm = maximize_on_segment(lines);
        Vec2 p = frame.from_frame(Vec2{t_r, y0 + sm.s_mid * (y1 - y0)});
        res.point = {p[0], p[1]};
        res.tie_broken = sm.extent * std::abs(y1 - y0) > 1e-9;
    } else if (const auto* pt = std::get_if<Polytope3>(&body.shape)) {
        Frame3 frame = frame_from_direction(Vec3{dir[0], dir[1], dir[2]});
        Polytope3 rot = rotate_to_frame(*pt, frame);
        std::vector<Vec2> sec = polytope_section(rot, t_r);
        if (sec.empty()) throw DegenerateError("find_center: empty slice");
        std::vector<std::pair<Vec2, double>> pieces;
        for (const auto& piece : f.pieces) {
            Vec3 g = frame.to_frame(Vec3{piece.gradient[0], piece.gradient[1], piece.gradient[2]});
            pieces.emplace_back(Vec2{g[1], g[2]}, g[0] * t_r + piece.offset);
        }
        PolygonMax pm = maximize_on_polygon(sec, pieces);
        Vec3 p = frame.from_frame(Vec3{t_r, pm.point[0], pm.point[1]});
        res.point = {p[0], p[1], p[2]};
        res.tie_broken = pm.diameter > 1e-9;
    } else {
        // Rotationally symmetric body, axis-dependent f: the slice is a ball
        // on which f is constant; its centroid sits on the axis.
        res.point.assign(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) res.point[static_cast<std::size_t>(i)] = t_r * dir[i];
        const Profile& pr = std::get<ProfileBody>(body.shape).profile;
        res.tie_broken = pr.eval(dir[0] > 0.0 ? t_r : -t_r) > 1e-9;
    }

    res.t_value = dot(res.point, dir);
    res.f_at_center = f.eval(res.point);
    return res;
}

}  // namespace hhc
