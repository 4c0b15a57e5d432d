#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "profile.hpp"
#include "vec.hpp"

namespace hhc {

// -------------------------------------------------------------------------
// Body representations
// -------------------------------------------------------------------------

// Strictly convex polygon, vertices in counterclockwise order.
struct Polygon2 {
    std::vector<Vec2> vertices;
};

struct Facet3 {
    int a, b, c;      // vertex indices, counterclockwise seen from outside
    Vec3 normal;      // outward unit normal
    double offset;    // dot(normal, x) <= offset inside
};

// Full-dimensional convex polytope; vertices are hull vertices only.
struct Polytope3 {
    std::vector<Vec3> vertices;
    std::vector<Facet3> facets;
    std::vector<std::array<int, 2>> edges;  // unique undirected hull edges
};

// Rotationally symmetric body about the first axis, any dimension n >= 2.
struct ProfileBody {
    Profile profile;
};

struct ConvexBody {
    std::variant<Polygon2, Polytope3, ProfileBody> shape;

    int dim() const;
};

// -------------------------------------------------------------------------
// Construction (normalizing: duplicates merged, hull recomputed for 3D)
// -------------------------------------------------------------------------

Polygon2 make_polygon(std::vector<Vec2> vertices);
Polytope3 make_polytope(const std::vector<Vec3>& points);
ConvexBody make_body(Polygon2 p);
ConvexBody make_body(Polytope3 p);
ConvexBody make_body(Profile p);

// Convex hull helpers. hull_2d drops collinear points and returns a strictly
// convex counterclockwise polygon; throws DegenerateError when flat.
Polygon2 hull_2d(std::vector<Vec2> pts);

// -------------------------------------------------------------------------
// Elementary measurements
// -------------------------------------------------------------------------

double volume(const ConvexBody& body);
Point centroid(const ConvexBody& body);

// (n-1)-volume of body cut by the hyperplane {<x,u> = t}; u must be unit.
double section_measure(const ConvexBody& body, const Point& u, double t);

// (t0, t1) with t0 = -h(body,-u), t1 = h(body,u).
std::pair<double, double> support_interval(const ConvexBody& body, const Point& u);

// Orthogonal shadow of a 3-polytope on a coordinate 2-plane.
// plane: 0 = xy, 1 = xz, 2 = yz. Keeps the two in-plane coordinates in order.
Polygon2 project_shadow(const Polytope3& body, int plane);

bool contains(const ConvexBody& body, const Point& x, double slack = 1e-9);

double polygon_area(const Polygon2& p);
Vec2 polygon_centroid(const Polygon2& p);

// -------------------------------------------------------------------------
// Frames and rotation: all slicing happens along the first axis of a frame
// whose first row is the requested direction.
// -------------------------------------------------------------------------

struct Frame2 {
    Vec2 u, w;  // rows of a rotation matrix (det +1)
    Vec2 to_frame(const Vec2& x) const { return {dot(u, x), dot(w, x)}; }
    Vec2 from_frame(const Vec2& x) const {
        return {u[0] * x[0] + w[0] * x[1], u[1] * x[0] + w[1] * x[1]};
    }
};

struct Frame3 {
    Vec3 u, w1, w2;  // rows of a rotation matrix (det +1)
    Vec3 to_frame(const Vec3& x) const { return {dot(u, x), dot(w1, x), dot(w2, x)}; }
    Vec3 from_frame(const Vec3& x) const {
        return {u[0] * x[0] + w1[0] * x[1] + w2[0] * x[2],
                u[1] * x[0] + w1[1] * x[1] + w2[1] * x[2],
                u[2] * x[0] + w1[2] * x[1] + w2[2] * x[2]};
    }
};

Frame2 frame_from_direction(const Vec2& u);
Frame3 frame_from_direction(const Vec3& u);

Polygon2 rotate_to_frame(const Polygon2& p, const Frame2& f);
Polytope3 rotate_to_frame(const Polytope3& p, const Frame3& f);

// -------------------------------------------------------------------------
// Axis-aligned slicing of rotated bodies
// -------------------------------------------------------------------------

// Chord {y : (t, y) in P}; nullopt when the line misses the polygon.
std::optional<std::pair<double, double>> polygon_chord(const Polygon2& p, double t);

// Cross-section polygon of a polytope at first-axis level t, expressed in
// the (x2, x3) coordinates. Empty when the section has zero area.
std::vector<Vec2> polytope_section(const Polytope3& p, double t);

double shoelace_area(const std::vector<Vec2>& ccw);

// Clip a convex polygon against the halfplane {x : dot(a, x) <= b}.
std::vector<Vec2> clip_polygon(const std::vector<Vec2>& poly, const Vec2& a, double b);

// Clip a polytope against the halfspace {x : dot(a, x) <= b}; returns
// nullopt when the intersection is empty or flat.
std::optional<Polytope3> clip_polytope(const Polytope3& p, const Vec3& a, double b);

// Checks that u has unit length (within tolerance) and the expected size.
void require_unit_direction(const Point& u, int dim);

}  // namespace hhc
