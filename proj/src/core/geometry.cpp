#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "error.hpp"
#include "tolerances.hpp"

namespace hhc {

namespace {

double coord_scale(const std::vector<Vec2>& pts) {
    double s = 1.0;
    for (const auto& p : pts) s = std::max({s, std::abs(p[0]), std::abs(p[1])});
    return s;
}

double coord_scale(const std::vector<Vec3>& pts) {
    double s = 1.0;
    for (const auto& p : pts) s = std::max({s, std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
    return s;
}

Vec2 to_vec2(const Point& p) { return {p[0], p[1]}; }
Vec3 to_vec3(const Point& p) { return {p[0], p[1], p[2]}; }

}  // namespace

int ConvexBody::dim() const {
    if (std::holds_alternative<Polygon2>(shape)) return 2;
    if (std::holds_alternative<Polytope3>(shape)) return 3;
    return std::get<ProfileBody>(shape).profile.dim;
}

// -------------------------------------------------------------------------
// Polygons
// -------------------------------------------------------------------------

Polygon2 make_polygon(std::vector<Vec2> vertices) {
    const double sc = coord_scale(vertices);
    const double merge = tol::vertex_merge * sc;
    std::vector<Vec2> vs;
    for (const auto& v : vertices) {
        if (!std::isfinite(v[0]) || !std::isfinite(v[1]))
            throw InvalidArgumentError("polygon: non-finite vertex");
        if (!vs.empty() && norm(v - vs.back()) <= merge) continue;
        vs.push_back(v);
    }
    if (vs.size() > 1 && norm(vs.front() - vs.back()) <= merge) vs.pop_back();
    if (vs.size() < 3) throw DegenerateError("polygon: fewer than three distinct vertices");

    const double area_eps = 1e-12 * sc * sc;
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vs[i];
        const Vec2& b = vs[(i + 1) % n];
        const Vec2& c = vs[(i + 2) % n];
        double turn = cross(b - a, c - b);
        if (turn < -area_eps)
            throw InvalidArgumentError("polygon: vertices not in counterclockwise convex order");
        if (turn <= area_eps)
            throw DegenerateError("polygon: consecutive collinear vertices");
    }
    return Polygon2{std::move(vs)};
}

Polygon2 hull_2d(std::vector<Vec2> pts) {
    const double sc = coord_scale(pts);
    const double area_eps = 1e-12 * sc * sc;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [&](const Vec2& a, const Vec2& b) {
                              return norm(a - b) <= tol::vertex_merge * sc;
                          }),
              pts.end());
    if (pts.size() < 3) throw DegenerateError("hull: all points coincide or collinear");

    auto build = [&](bool upper) {
        std::vector<Vec2> chain;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const Vec2& p = pts[upper ? pts.size() - 1 - k : k];
            while (chain.size() >= 2 &&
                   cross(chain.back() - chain[chain.size() - 2], p - chain.back()) <= area_eps)
                chain.pop_back();
            chain.push_back(p);
        }
        return chain;
    };
    std::vector<Vec2> lower = build(false), upper = build(true);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) throw DegenerateError("hull: degenerate (collinear) point set");
    return Polygon2{std::move(lower)};
}

double polygon_area(const Polygon2& p) {
    double a = 0.0;
    const std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) a += cross(p.vertices[i], p.vertices[(i + 1) % n]);
    return 0.5 * a;
}

Vec2 polygon_centroid(const Polygon2& p) {
    double a = 0.0;
    Vec2 c{0.0, 0.0};
    const std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& u = p.vertices[i];
        const Vec2& v = p.vertices[(i + 1) % n];
        double w = cross(u, v);
        a += w;
        c = c + w * (u + v);
    }
    if (a <= 0.0) throw DegenerateError("polygon: zero area");
    return (1.0 / (3.0 * a)) * c;
}

std::optional<std::pair<double, double>> polygon_chord(const Polygon2& p, double t) {
    double ymin = 0.0, ymax = 0.0;
    bool found = false;
    const std::size_t n = p.vertices.size();
    // Vertices a roundoff away from the cutting line count as on it, so that
    // sections at support endpoints keep their exact (closed-set) value.
    double sc = std::abs(t);
    for (const auto& v : p.vertices) sc = std::max(sc, std::abs(v[0]));
    const double eps = 1e-12 * std::max(sc, 1e-30);
    auto add = [&](double y) {
        if (!found) {
            ymin = ymax = y;
            found = true;
        } else {
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = p.vertices[i];
        const Vec2& b = p.vertices[(i + 1) % n];
        double sa = a[0] - t, sb = b[0] - t;
        if (std::abs(sa) <= eps) sa = 0.0;
        if (std::abs(sb) <= eps) sb = 0.0;
        if (sa == 0.0) add(a[1]);
        if ((sa < 0.0 && sb > 0.0) || (sa > 0.0 && sb < 0.0)) {
            double lam = sa / (sa - sb);
            add(a[1] + lam * (b[1] - a[1]));
        }
    }
    if (!found) return std::nullopt;
    return std::make_pair(ymin, ymax);
}

std::vector<Vec2> clip_polygon(const std::vector<Vec2>& poly, const Vec2& a, double b) {
    std::vector<Vec2> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % n];
        double sp = dot(a, p) - b, sq = dot(a, q) - b;
        if (sp <= 0.0) out.push_back(p);
        if ((sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0)) {
            double lam = sp / (sp - sq);
            out.push_back(p + lam * (q - p));
        }
    }
    return out;
}

// -------------------------------------------------------------------------
// 3D convex hull (incremental, farthest-first insertion)
// -------------------------------------------------------------------------

namespace {

struct HullFacet {
    int a, b, c;
    Vec3 n;  // outward unit normal
    double off;
    bool alive = true;
};

HullFacet facet_through(const std::vector<Vec3>& pts, int a, int b, int c, const Vec3& interior) {
    Vec3 n = cross(pts[b] - pts[a], pts[c] - pts[a]);
    double len = norm(n);
    if (len > 0.0) n = (1.0 / len) * n;
    double off = dot(n, pts[a]);
    if (dot(n, interior) > off) {  // orient away from the interior point
        std::swap(b, c);
        n = -1.0 * n;
        off = -off;
    }
    return HullFacet{a, b, c, n, off, true};
}

}  // namespace

Polytope3 make_polytope(const std::vector<Vec3>& points) {
    const double sc = coord_scale(points);
    const double merge = tol::vertex_merge * sc;
    const double eps = 1e-9 * sc;

    std::vector<Vec3> pts;
    for (const auto& p : points) {
        if (!std::isfinite(p[0]) || !std::isfinite(p[1]) || !std::isfinite(p[2]))
            throw InvalidArgumentError("polytope: non-finite vertex");
        bool dup = false;
        for (const auto& q : pts)
            if (norm(p - q) <= merge) {
                dup = true;
                break;
            }
        if (!dup) pts.push_back(p);
    }
    if (pts.size() < 4) throw DegenerateError("polytope: fewer than four distinct vertices");

    // Initial simplex from extreme points.
    int i0 = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i] < pts[i0]) i0 = static_cast<int>(i);
    int i1 = -1;
    double best = eps;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double d = norm(pts[i] - pts[i0]);
        if (d > best) {
            best = d;
            i1 = static_cast<int>(i);
        }
    }
    if (i1 < 0) throw DegenerateError("polytope: all vertices coincide");
    Vec3 axis = pts[i1] - pts[i0];
    int i2 = -1;
    best = eps * norm(axis);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double d = norm(cross(axis, pts[i] - pts[i0]));
        if (d > best) {
            best = d;
            i2 = static_cast<int>(i);
        }
    }
    if (i2 < 0) throw DegenerateError("polytope: vertices are collinear");
    Vec3 nrm = cross(axis, pts[i2] - pts[i0]);
    nrm = (1.0 / norm(nrm)) * nrm;
    int i3 = -1;
    best = eps;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double d = std::abs(dot(nrm, pts[i] - pts[i0]));
        if (d > best) {
            best = d;
            i3 = static_cast<int>(i);
        }
    }
    if (i3 < 0) throw DegenerateError("polytope: vertices are coplanar");

    Vec3 interior = 0.25 * (pts[i0] + pts[i1] + pts[i2] + pts[i3]);
    std::vector<HullFacet> facets;
    facets.push_back(facet_through(pts, i0, i1, i2, interior));
    facets.push_back(facet_through(pts, i0, i1, i3, interior));
    facets.push_back(facet_through(pts, i0, i2, i3, interior));
    facets.push_back(facet_through(pts, i1, i2, i3, interior));

    // Insert the farthest outside point until every point is on or inside.
    for (;;) {
        int best_pt = -1;
        double best_d = eps;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (const auto& f : facets) {
                if (!f.alive) continue;
                double d = dot(f.n, pts[i]) - f.off;
                if (d > best_d) {
                    best_d = d;
                    best_pt = static_cast<int>(i);
                }
            }
        }
        if (best_pt < 0) break;
        const Vec3& p = pts[static_cast<std::size_t>(best_pt)];

        std::set<std::pair<int, int>> visible_edges;
        for (auto& f : facets) {
            if (!f.alive) continue;
            if (dot(f.n, p) - f.off > eps) {
                f.alive = false;
                visible_edges.insert({f.a, f.b});
                visible_edges.insert({f.b, f.c});
                visible_edges.insert({f.c, f.a});
            }
        }
        for (const auto& [u, v] : visible_edges) {
            if (visible_edges.count({v, u})) continue;  // interior edge of the visible region
            facets.push_back(facet_through(pts, u, v, best_pt, interior));
        }
    }

    // Compact to referenced vertices.
    std::map<int, int> remap;
    Polytope3 out;
    std::set<std::pair<int, int>> edge_set;
    for (const auto& f : facets) {
        if (!f.alive) continue;
        for (int idx : {f.a, f.b, f.c}) {
            if (!remap.count(idx)) {
                remap[idx] = static_cast<int>(out.vertices.size());
                out.vertices.push_back(pts[static_cast<std::size_t>(idx)]);
            }
        }
        Facet3 g{remap[f.a], remap[f.b], remap[f.c], f.n, 0.0};
        g.offset = dot(g.normal, out.vertices[static_cast<std::size_t>(g.a)]);
        out.facets.push_back(g);
        for (auto [u, v] : {std::pair{g.a, g.b}, std::pair{g.b, g.c}, std::pair{g.c, g.a}})
            edge_set.insert({std::min(u, v), std::max(u, v)});
    }
    for (const auto& [u, v] : edge_set) out.edges.push_back({u, v});

    // Full-dimensionality check.
    Vec3 ref{0.0, 0.0, 0.0};
    for (const auto& v : out.vertices) ref = ref + (1.0 / out.vertices.size()) * v;
    double vol = 0.0;
    for (const auto& f : out.facets) {
        const Vec3 &a = out.vertices[f.a], &b = out.vertices[f.b], &c = out.vertices[f.c];
        vol += dot(a - ref, cross(b - ref, c - ref)) / 6.0;
    }
    if (!(vol > 1e-10 * sc * sc * sc)) throw DegenerateError("polytope: zero volume");
    return out;
}

namespace {

double polytope_volume(const Polytope3& p) {
    Vec3 ref{0.0, 0.0, 0.0};
    for (const auto& v : p.vertices) ref = ref + (1.0 / p.vertices.size()) * v;
    double vol = 0.0;
    for (const auto& f : p.facets) {
        const Vec3 &a = p.vertices[f.a], &b = p.vertices[f.b], &c = p.vertices[f.c];
        vol += dot(a - ref, cross(b - ref, c - ref)) / 6.0;
    }
    return vol;
}

Vec3 polytope_centroid(const Polytope3& p) {
    Vec3 ref{0.0, 0.0, 0.0};
    for (const auto& v : p.vertices) ref = ref + (1.0 / p.vertices.size()) * v;
    double vol = 0.0;
    Vec3 c{0.0, 0.0, 0.0};
    for (const auto& f : p.facets) {
        const Vec3 &a = p.vertices[f.a], &b = p.vertices[f.b], &c3 = p.vertices[f.c];
        double tv = dot(a - ref, cross(b - ref, c3 - ref)) / 6.0;
        vol += tv;
        c = c + tv * (0.25 * (ref + a + b + c3));
    }
    if (vol <= 0.0) throw DegenerateError("polytope: zero volume");
    return (1.0 / vol) * c;
}

}  // namespace

std::vector<Vec2> polytope_section(const Polytope3& p, double t) {
    std::vector<Vec2> raw;
    double sc = std::abs(t);
    for (const auto& v : p.vertices) sc = std::max(sc, std::abs(v[0]));
    const double eps = 1e-12 * std::max(sc, 1e-30);
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (std::abs(p.vertices[i][0] - t) <= eps)
            raw.push_back({p.vertices[i][1], p.vertices[i][2]});
    for (const auto& [ia, ib] : p.edges) {
        const Vec3& a = p.vertices[static_cast<std::size_t>(ia)];
        const Vec3& b = p.vertices[static_cast<std::size_t>(ib)];
        double sa = a[0] - t, sb = b[0] - t;
        if (std::abs(sa) <= eps) sa = 0.0;
        if (std::abs(sb) <= eps) sb = 0.0;
        if ((sa < 0.0 && sb > 0.0) || (sa > 0.0 && sb < 0.0)) {
            double lam = sa / (sa - sb);
            raw.push_back({a[1] + lam * (b[1] - a[1]), a[2] + lam * (b[2] - a[2])});
        }
    }
    if (raw.size() < 3) return {};
    try {
        return hull_2d(raw).vertices;
    } catch (const DegenerateError&) {
        return {};
    }
}

double shoelace_area(const std::vector<Vec2>& ccw) {
    double a = 0.0;
    const std::size_t n = ccw.size();
    for (std::size_t i = 0; i < n; ++i) a += cross(ccw[i], ccw[(i + 1) % n]);
    return 0.5 * a;
}

// -------------------------------------------------------------------------
// Frames
// -------------------------------------------------------------------------

Frame2 frame_from_direction(const Vec2& u) { return Frame2{u, perp(u)}; }

Frame3 frame_from_direction(const Vec3& u) {
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(u[i]) < std::abs(u[k])) k = i;
    Vec3 e{0.0, 0.0, 0.0};
    e[k] = 1.0;
    Vec3 w1 = e - u[k] * u;
    w1 = (1.0 / norm(w1)) * w1;
    Vec3 w2 = cross(u, w1);
    return Frame3{u, w1, w2};
}

Polygon2 rotate_to_frame(const Polygon2& p, const Frame2& f) {
    Polygon2 out;
    out.vertices.reserve(p.vertices.size());
    for (const auto& v : p.vertices) out.vertices.push_back(f.to_frame(v));
    return out;
}

Polytope3 rotate_to_frame(const Polytope3& p, const Frame3& f) {
    Polytope3 out = p;
    for (auto& v : out.vertices) v = f.to_frame(v);
    for (auto& fc : out.facets) {
        fc.normal = f.to_frame(fc.normal);
        fc.offset = dot(fc.normal, out.vertices[static_cast<std::size_t>(fc.a)]);
    }
    return out;
}

// -------------------------------------------------------------------------
// Body-level operations
// -------------------------------------------------------------------------

ConvexBody make_body(Polygon2 p) { return ConvexBody{std::move(p)}; }
ConvexBody make_body(Polytope3 p) { return ConvexBody{std::move(p)}; }
ConvexBody make_body(Profile p) { return ConvexBody{ProfileBody{std::move(p)}}; }

double volume(const ConvexBody& body) {
    if (const auto* poly = std::get_if<Polygon2>(&body.shape)) {
        double a = polygon_area(*poly);
        if (!(a > 0.0)) throw DegenerateError("body: zero area");
        return a;
    }
    if (const auto* pt = std::get_if<Polytope3>(&body.shape)) {
        double v = polytope_volume(*pt);
        if (!(v > 0.0)) throw DegenerateError("body: zero volume");
        return v;
    }
    double v = profile_volume(std::get<ProfileBody>(body.shape).profile);
    if (!(v > 0.0)) throw DegenerateError("body: zero volume");
    return v;
}

Point centroid(const ConvexBody& body) {
    if (const auto* poly = std::get_if<Polygon2>(&body.shape)) {
        Vec2 c = polygon_centroid(*poly);
        return {c[0], c[1]};
    }
    if (const auto* pt = std::get_if<Polytope3>(&body.shape)) {
        Vec3 c = polytope_centroid(*pt);
        return {c[0], c[1], c[2]};
    }
    const Profile& pr = std::get<ProfileBody>(body.shape).profile;
    double vol = profile_volume(pr);
    if (!(vol > 0.0)) throw DegenerateError("body: zero volume");
    Point c(static_cast<std::size_t>(pr.dim), 0.0);
    c[0] = profile_moment(pr) / vol;
    return c;
}

void require_unit_direction(const Point& u, int dim) {
    if (static_cast<int>(u.size()) != dim)
        throw InvalidArgumentError("direction: wrong dimension");
    if (std::abs(norm(u) - 1.0) > tol::unit_direction)
        throw InvalidArgumentError("direction: not a unit vector");
}

namespace {

bool is_first_axis(const Point& u, double& sign) {
    for (std::size_t i = 1; i < u.size(); ++i)
        if (std::abs(u[i]) > 1e-14) return false;
    sign = u[0] > 0.0 ? 1.0 : -1.0;
    return std::abs(std::abs(u[0]) - 1.0) <= 1e-12;
}

}  // namespace

double section_measure(const ConvexBody& body, const Point& u, double t) {
    require_unit_direction(u, body.dim());
    if (const auto* poly = std::get_if<Polygon2>(&body.shape)) {
        Polygon2 rot = rotate_to_frame(*poly, frame_from_direction(to_vec2(u)));
        auto ch = polygon_chord(rot, t);
        return ch ? ch->second - ch->first : 0.0;
    }
    if (const auto* pt = std::get_if<Polytope3>(&body.shape)) {
        Polytope3 rot = rotate_to_frame(*pt, frame_from_direction(to_vec3(u)));
        auto sec = polytope_section(rot, t);
        return sec.empty() ? 0.0 : shoelace_area(sec);
    }
    const Profile& pr = std::get<ProfileBody>(body.shape).profile;
    double sign = 0.0;
    if (!is_first_axis(u, sign))
        throw UnsupportedError("profile body: sections only along the symmetry axis");
    double tt = sign > 0.0 ? t : -t;
    if (tt < pr.t0() || tt > pr.t1()) return 0.0;
    return unit_ball_volume(pr.dim - 1) * std::pow(pr.eval(tt), pr.dim - 1);
}

std::pair<double, double> support_interval(const ConvexBody& body, const Point& u) {
    require_unit_direction(u, body.dim());
    if (const auto* poly = std::get_if<Polygon2>(&body.shape)) {
        double lo = dot(to_vec2(u), poly->vertices[0]), hi = lo;
        for (const auto& v : poly->vertices) {
            double d = dot(to_vec2(u), v);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        return {lo, hi};
    }
    if (const auto* pt = std::get_if<Polytope3>(&body.shape)) {
        double lo = dot(to_vec3(u), pt->vertices[0]), hi = lo;
        for (const auto& v : pt->vertices) {
            double d = dot(to_vec3(u), v);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        return {lo, hi};
    }
    const Profile& pr = std::get<ProfileBody>(body.shape).profile;
    double wperp = 0.0;
    for (std::size_t i = 1; i < u.size(); ++i) wperp += u[i] * u[i];
    wperp = std::sqrt(wperp);
    double lo = u[0] * pr.ts[0] - wperp * pr.vs[0];
    double hi = u[0] * pr.ts[0] + wperp * pr.vs[0];
    for (std::size_t i = 0; i < pr.ts.size(); ++i) {
        lo = std::min(lo, u[0] * pr.ts[i] - wperp * pr.vs[i]);
        hi = std::max(hi, u[0] * pr.ts[i] + wperp * pr.vs[i]);
    }
    return {lo, hi};
}

Polygon2 project_shadow(const Polytope3& body, int plane) {
    if (plane < 0 || plane > 2) throw InvalidArgumentError("shadow: plane must be xy, xz or yz");
    int c0 = plane == 2 ? 1 : 0;
    int c1 = plane == 0 ? 1 : 2;
    std::vector<Vec2> pts;
    pts.reserve(body.vertices.size());
    for (const auto& v : body.vertices) pts.push_back({v[c0], v[c1]});
    try {
        return hull_2d(std::move(pts));
    } catch (const DegenerateError&) {
        throw DegenerateError("shadow: projection is lower-dimensional");
    }
}

bool contains(const ConvexBody& body, const Point& x, double slack) {
    if (const auto* poly = std::get_if<Polygon2>(&body.shape)) {
        if (x.size() != 2) return false;
        Vec2 p = to_vec2(x);
        const std::size_t n = poly->vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = poly->vertices[i];
            const Vec2& b = poly->vertices[(i + 1) % n];
            Vec2 e = b - a;
            if (cross(e, p - a) < -slack * norm(e)) return false;
        }
        return true;
    }
    if (const auto* pt = std::get_if<Polytope3>(&body.shape)) {
        if (x.size() != 3) return false;
        Vec3 p = to_vec3(x);
        for (const auto& f : pt->facets)
            if (dot(f.normal, p) > f.offset + slack) return false;
        return true;
    }
    const Profile& pr = std::get<ProfileBody>(body.shape).profile;
    if (static_cast<int>(x.size()) != pr.dim) return false;
    if (x[0] < pr.t0() - slack || x[0] > pr.t1() + slack) return false;
    double r = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) r += x[i] * x[i];
    return std::sqrt(r) <= pr.eval(std::clamp(x[0], pr.t0(), pr.t1())) + slack;
}

std::optional<Polytope3> clip_polytope(const Polytope3& p, const Vec3& a, double b) {
    const double sc = coord_scale(p.vertices);
    const double eps = 1e-12 * sc * std::max(1.0, norm(a));
    bool any_out = false, any_in = false;
    std::vector<double> s(p.vertices.size());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        s[i] = dot(a, p.vertices[i]) - b;
        any_out |= s[i] > eps;
        any_in |= s[i] < -eps;
    }
    if (!any_out) return p;
    if (!any_in) return std::nullopt;
    std::vector<Vec3> pts;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (s[i] <= eps) pts.push_back(p.vertices[i]);
    for (const auto& [ia, ib] : p.edges) {
        double sa = s[static_cast<std::size_t>(ia)], sb = s[static_cast<std::size_t>(ib)];
        if ((sa < -eps && sb > eps) || (sa > eps && sb < -eps)) {
            double lam = sa / (sa - sb);
            const Vec3& va = p.vertices[static_cast<std::size_t>(ia)];
            const Vec3& vb = p.vertices[static_cast<std::size_t>(ib)];
            pts.push_back(va + lam * (vb - va));
        }
    }
    try {
        return make_polytope(pts);
    } catch (const DegenerateError&) {
        return std::nullopt;
    }
}

}  // namespace hhc
