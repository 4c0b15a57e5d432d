#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/error.hpp"
#include "core/symmetrize.hpp"
#include "helpers.hpp"

using namespace hhc;
using namespace hhtest;

TEST_CASE("square profile is the constant slab") {
    Profile p = schwarz_profile(unit_square(), {1, 0});
    CHECK(p.dim == 2);
    CHECK(p.t0() == doctest::Approx(0.0));
    CHECK(p.t1() == doctest::Approx(1.0));
    for (std::size_t i = 0; i < p.ts.size(); i += p.ts.size() / 7)
        CHECK(p.vs[i] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pointed triangle profile is half the chord") {
    Profile p = schwarz_profile(pointed_triangle(), {1, 0});
    for (double t : {0.0, 0.25, 0.5, 0.9})
        CHECK(p.eval(t) == doctest::Approx((1.0 - t) / 2.0).epsilon(1e-12));
    CHECK(p.eval(1.0) == doctest::Approx(0.0));
}

TEST_CASE("cube profile is the constant 1/sqrt(pi)") {
    Profile p = schwarz_profile(unit_cube(), {1, 0, 0});
    const double expected = 1.0 / std::sqrt(std::acos(-1.0));
    for (double t : {0.0, 0.3, 0.77, 1.0})
        CHECK(p.eval(t) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("profile volumes of the named examples") {
    CHECK(profile_volume(schwarz_profile(unit_square(), {1, 0})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(profile_volume(schwarz_profile(pointed_triangle(), {1, 0})) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(profile_volume(disc_profile()) == doctest::Approx(std::acos(-1.0)).epsilon(1e-6));
}

TEST_CASE("knot count is validated") {
    CHECK_THROWS_AS(schwarz_profile(unit_square(), {1, 0}, 32), InvalidArgumentError);
    CHECK_NOTHROW(schwarz_profile(unit_square(), {1, 0}, 33));
}

TEST_CASE("volume preservation for random bodies and directions") {
    TestRng rng(101);
    for (int rep = 0; rep < 8; ++rep) {
        ConvexBody body =
            rep % 2 ? make_body(random_polygon(rng)) : make_body(random_polytope(rng));
        Point u = random_unit(rng, body.dim());
        Profile p = schwarz_profile(body, u);
        CHECK(profile_volume(p) == doctest::Approx(volume(body)).epsilon(1e-6));
    }
}

TEST_CASE("profiles of convex bodies are concave across knots") {
    TestRng rng(202);
    for (int rep = 0; rep < 4; ++rep) {
        ConvexBody body =
            rep % 2 ? make_body(random_polygon(rng)) : make_body(random_polytope(rng));
        Point u = random_unit(rng, body.dim());
        Profile p = schwarz_profile(body, u);
        double vmax = p.max_v();
        for (std::size_t i = 1; i + 1 < p.ts.size(); ++i) {
            double lam = (p.ts[i] - p.ts[i - 1]) / (p.ts[i + 1] - p.ts[i - 1]);
            double line = p.vs[i - 1] + lam * (p.vs[i + 1] - p.vs[i - 1]);
            CHECK(p.vs[i] >= line - 1e-8 * std::max(1.0, vmax));
        }
    }
}

TEST_CASE("refinement stability: doubling the knot count is inert") {
    TestRng rng(303);
    for (int rep = 0; rep < 3; ++rep) {
        Polytope3 body = random_polytope(rng);
        Point u = random_unit(rng, 3);
        double v1 = profile_volume(schwarz_profile(make_body(body), u, 1025));
        double v2 = profile_volume(schwarz_profile(make_body(body), u, 2049));
        CHECK(std::abs(v2 - v1) <= 1e-8 * std::abs(v1));
    }
}

TEST_CASE("profile bodies symmetrize to themselves") {
    Profile disc = disc_profile(512);
    ConvexBody body = make_body(disc);
    Profile again = schwarz_profile(body, {1, 0});
    for (double t : {-0.9, -0.4, 0.0, 0.3, 0.8})
        CHECK(again.eval(t) == doctest::Approx(disc.eval(t)).epsilon(1e-12));
    Profile flipped = schwarz_profile(body, {-1, 0});
    for (double t : {-0.9, 0.0, 0.55})
        CHECK(flipped.eval(t) == doctest::Approx(disc.eval(-t)).epsilon(1e-12));
}

TEST_CASE("profile endpoints keep exact section values") {
    // vertical edge at x = 0: positive chord at the left endpoint
    Profile p = schwarz_profile(pointed_triangle(), {-1, 0});
    CHECK(p.eval(p.t0()) == doctest::Approx(0.0));
    CHECK(p.eval(p.t1()) == doctest::Approx(0.5).epsilon(1e-12));
}
