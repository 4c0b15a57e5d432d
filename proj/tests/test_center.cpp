#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/center.hpp"
#include "core/error.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace hhc;
using namespace hhtest;

TEST_CASE("supporting affine of an affine function is the function") {
    ConcaveFunction f = make_affine({1, 0}, 0.0);
    SupportingAffine g = supporting_affine(unit_square(), f, {0.3, 0.1});
    CHECK(g.g.gradient[0] == doctest::Approx(1.0));
    CHECK(g.g.gradient[1] == doctest::Approx(0.0));
    CHECK(g.g.offset == doctest::Approx(0.0));
}

TEST_CASE("supporting affine picks the active piece") {
    ConvexBody box = make_body(make_polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}));
    ConcaveFunction f = make_min_affine({Affine{{-1, 0}, 1.0}, Affine{{1, 0}, 1.0}});
    SupportingAffine g = supporting_affine(box, f, {0.5, 0.0});
    CHECK(g.piece_index == 0);  // 1 - x is the minimum at x = 0.5
    CHECK(g.g.gradient[0] == doctest::Approx(-1.0));
    // tie at the origin: lowest index wins
    SupportingAffine h = supporting_affine(box, f, {0.0, 0.0});
    CHECK(h.piece_index == 0);
    CHECK_THROWS_AS(supporting_affine(box, f, {5.0, 0.0}), InvalidArgumentError);
}

TEST_CASE("center of the pointed triangle with f = x") {
    CenterResult res = find_center(pointed_triangle(), make_affine({1, 0}, 0.0));
    const double expected = 1.0 - 1.0 / std::sqrt(2.0);
    CHECK(res.point[0] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(res.point[1] == doctest::Approx(0.0));
    CHECK(res.f_at_center == doctest::Approx(expected).epsilon(1e-12));
    CHECK(res.t_value == doctest::Approx(res.cone.t_median).epsilon(1e-12));
    CHECK(res.tie_broken);  // f constant on the slice
}

TEST_CASE("center of the unit square with f = x") {
    CenterResult res = find_center(unit_square(), make_affine({1, 0}, 0.0));
    CHECK(res.point[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(res.point[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(res.f_at_center == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("center of the unit disc with f = 1 + x") {
    CenterResult res = find_center(make_body(disc_profile()), make_affine({1, 0}, 1.0));
    CHECK(std::abs(res.point[0]) < 1e-7);
    CHECK(std::abs(res.point[1]) < 1e-12);
    CHECK(res.f_at_center == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("center rejects negative functions and mismatched dimensions") {
    CHECK_THROWS_AS(find_center(unit_square(), make_affine({1, 0}, -5.0)),
                    InvalidArgumentError);
    CHECK_THROWS_AS(find_center(unit_square(), make_affine({1, 0, 0}, 0.0)),
                    InvalidArgumentError);
}

TEST_CASE("zero gradient falls back to the first axis") {
    CenterResult res = find_center(unit_square(), make_affine({0, 0}, 2.0));
    CHECK(res.direction[0] == doctest::Approx(1.0));
    CHECK(res.f_at_center == doctest::Approx(2.0));
    CHECK(res.point[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("median property of the returned cone") {
    TestRng rng(404);
    for (int rep = 0; rep < 6; ++rep) {
        ConvexBody body =
            rep % 2 ? make_body(random_polygon(rng)) : make_body(random_polytope(rng));
        Point g = random_unit(rng, body.dim());
        CenterResult res = find_center(body, make_affine(g, 3.0));
        CHECK(contains(body, res.point, 1e-9));
        CHECK(std::abs(res.t_value - res.cone.t_median) <= 1e-9);
        CHECK(cone_volume_below(res.cone, res.t_value) ==
              doctest::Approx(0.5 * cone_volume(res.cone)).epsilon(1e-9));
    }
}

TEST_CASE("supporting affine dominates f at random points") {
    TestRng rng(505);
    ConvexBody body = make_body(random_polygon(rng));
    std::vector<Affine> pieces;
    for (int i = 0; i < 4; ++i)
        pieces.push_back(Affine{{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(0.5, 2)});
    ConcaveFunction f = make_min_affine(pieces);
    Point x0 = random_interior_point(rng, body);
    SupportingAffine g = supporting_affine(body, f, x0);
    CHECK(g.g.eval(x0) == doctest::Approx(f.eval(x0)).epsilon(1e-12));
    for (int k = 0; k < 10000; ++k) {
        Point x = random_interior_point(rng, body);
        CHECK(g.g.eval(x) >= f.eval(x) - 1e-9);
    }
}

TEST_CASE("affine f: the center is independent of the start point") {
    TestRng rng(606);
    ConvexBody body = make_body(random_polygon(rng));
    ConcaveFunction f = make_affine({0.6, -0.8}, 2.0);
    CenterResult base = find_center(body, f);
    for (int k = 0; k < 5; ++k) {
        Point x0 = random_interior_point(rng, body);
        CenterResult res = find_center(body, f, x0);
        CHECK(res.t_value == doctest::Approx(base.t_value).epsilon(1e-9));
    }
}

TEST_CASE("rotation equivariance for affine f") {
    TestRng rng(707);
    for (int rep = 0; rep < 4; ++rep) {
        Polygon2 poly = random_polygon(rng);
        ConcaveFunction f = make_affine({0.8, 0.6}, 3.0);
        CenterResult base = find_center(make_body(poly), f);

        double ang = rng.uniform(0.0, 6.28);
        double cs = std::cos(ang), sn = std::sin(ang);
        std::vector<Vec2> rotated;
        for (const auto& v : poly.vertices)
            rotated.push_back({cs * v[0] - sn * v[1], sn * v[0] + cs * v[1]});
        // f composed with the inverse rotation has gradient R * grad
        ConcaveFunction frot = make_affine({cs * 0.8 - sn * 0.6, sn * 0.8 + cs * 0.6}, 3.0);
        CenterResult res = find_center(make_body(make_polygon(rotated)), frot);
        CHECK(res.point[0] ==
              doctest::Approx(cs * base.point[0] - sn * base.point[1]).epsilon(1e-8));
        CHECK(res.point[1] ==
              doctest::Approx(sn * base.point[0] + cs * base.point[1]).epsilon(1e-8));
    }
}

TEST_CASE("min-affine slice maximization on a 3-polytope") {
    // roof function on the cube: max over the median slice is on the ridge
    ConcaveFunction f = make_min_affine(
        {Affine{{0, 1, 0}, 0.5}, Affine{{0, -1, 0}, 1.5}});  // min(y+1/2, 3/2-y), peak at y=1/2
    CenterResult res = find_center(unit_cube(), f, Point{0.5, 0.25, 0.5});
    CHECK(res.f_at_center == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(res.point[1] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(contains(unit_cube(), res.point, 1e-9));
}

TEST_CASE("axis-dependent min-affine on a profile body") {
    ConvexBody disc = make_body(disc_profile());
    ConcaveFunction f =
        make_min_affine({Affine{{1, 0}, 1.0}, Affine{{-1, 0}, 1.0}});  // roof min(1+x, 1-x)
    CenterResult res = find_center(disc, f);
    CHECK(std::abs(res.point[0]) < 1e-7);
    CHECK(res.f_at_center == doctest::Approx(1.0).epsilon(1e-7));
    // off-axis gradients are out of scope for profile bodies
    CHECK_THROWS_AS(find_center(disc, make_affine({0, 1}, 2.0)), UnsupportedError);
}

TEST_CASE("profile bodies in higher dimension run end to end") {
    Profile cone_profile = make_profile(4, {{0.0, 1.0}, {1.0, 0.0}});
    ConvexBody body = make_body(cone_profile);
    CenterResult res = find_center(body, make_affine({1, 0, 0, 0}, 1.0));
    CHECK(res.point.size() == 4);
    CHECK(contains(body, res.point, 1e-9));
    CHECK(res.t_value == doctest::Approx(res.cone.t_median).epsilon(1e-12));
}
