#include <doctest.h>

#include "normax/errors.hpp"
#include "normax/io.hpp"
#include "normax/radii.hpp"
#include "support.hpp"

using namespace normax;
using namespace testsupport;

TEST_CASE("circumradius and half-diameter on fixed bodies") {
    auto sq = unit_square();
    CHECK(radius_h(sq, 2, RadiusKind::circumradius) == 2);  // radius sqrt(2)
    CHECK(radius_h(sq, 1, RadiusKind::circumradius) == 2);
    CHECK(radius_h(sq, 2, RadiusKind::half_diameter) == 2);  // coincide when symmetric
    CHECK(radius_h(cross_polytope_2d(), 2, RadiusKind::circumradius) == 1);
}

TEST_CASE("H-side queries require symmetry") {
    auto P = parse_hpolytope("H 2 3\n-1 0 0\n0 -1 0\n1 1 1");
    CHECK_THROWS_AS(radius_h(P, 2, RadiusKind::circumradius), NotSymmetric);
    CHECK_THROWS_AS(radius_h(unit_square(), 2, RadiusKind::inradius), Error);
}

TEST_CASE("inradius through the polar") {
    VPolytope cube;
    cube.dim = 2;
    for (int a : {1, -1})
        for (int b : {1, -1}) cube.points.push_back({Rational(a), Rational(b)});
    auto r = radius_v(cube, 2, RadiusKind::inradius);
    CHECK(r.polar_max == 1);      // inscribed disk of the square has radius 1
    CHECK(r.decide(Rational(1)));  // r^2 <= 1 holds
    CHECK_FALSE(r.decide(Rational(99, 100)));

    VPolytope cross3;
    cross3.dim = 3;
    for (std::size_t i = 0; i < 3; ++i)
        for (int s : {1, -1}) cross3.points.push_back(unit_vec(3, i, Rational(s)));
    auto r3 = radius_v(cross3, 2, RadiusKind::width);
    CHECK(r3.polar_max == 3);          // max squared norm over the cube
    CHECK(r3.decide(Rational(1, 3)));  // r^2 = 1/3
    CHECK_FALSE(r3.decide(Rational(1, 4)));
}

TEST_CASE("V-side degenerate inputs are rejected") {
    VPolytope segment;
    segment.dim = 2;
    segment.points = {{Rational(1), Rational(0)}, {Rational(-1), Rational(0)}};
    CHECK_THROWS_AS(radius_v(segment, 2, RadiusKind::inradius), OriginNotInterior);

    VPolytope shifted;
    shifted.dim = 2;
    shifted.points = {{Rational(1), Rational(0)}, {Rational(2), Rational(0)}};
    CHECK_THROWS_AS(radius_v(shifted, 2, RadiusKind::inradius), NotSymmetric);
}

TEST_CASE("radius power scales with dilation") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 30; ++t) {
        auto P = random_symmetric_hpolytope(rng, 2 + t % 2, 1 + t % 3);
        int p = 1 + t % 3;
        Rational lambda(2 + t % 3);
        CHECK(radius_h(dilate(P, lambda), p, RadiusKind::circumradius) ==
              pow_int(lambda, static_cast<unsigned>(p)) *
                  radius_h(P, p, RadiusKind::circumradius));
    }
}

TEST_CASE("H-side equals the vertex maximum") {
    std::mt19937_64 rng(62);
    for (int t = 0; t < 40; ++t) {
        auto P = random_symmetric_hpolytope(rng, 2 + t % 2, 1 + t % 2);
        int p = 1 + t % 3;
        CHECK(radius_h(P, p, RadiusKind::circumradius) == vertex_oracle_max(P, p));
    }
}

TEST_CASE("polar route agrees with the direct inscribed-ball computation") {
    // p = 1 pairs with the box ball, whose dual norm is the l1 norm of the
    // rows -- fully rational, so the product identity can be checked exactly.
    std::mt19937_64 rng(63);
    for (int t = 0; t < 30; ++t) {
        auto H = random_symmetric_hpolytope(rng, 2 + t % 2, 1 + t % 2);
        VPolytope V;
        V.dim = H.dim;
        V.points = enumerate_vertices(H);
        auto via_polar = radius_v(V, 1, RadiusKind::inradius);  // max l1 norm over the polar
        Rational inball = inscribed_ball_radius(H, /*ball_is_box=*/true);
        CHECK(inball * via_polar.polar_max == 1);
    }
}
