#include <doctest.h>

#include "normax/ball_approx.hpp"
#include "normax/errors.hpp"
#include "normax/io.hpp"
#include "support.hpp"

using namespace normax;
using namespace testsupport;

namespace {

ApproxBall box_claimed_as(int p, int beta) {
    // Hand-assembled B_inf in the plane, claimed to approximate B_p.
    ApproxBall B;
    B.p = p;
    B.beta = beta;
    B.polytope = unit_square();
    B.facet_count = 4;
    for (std::size_t i = 0; i < 2; ++i)
        for (int s : {1, -1}) {
            IntVec z(2, Integer(0));
            z[i] = s;
            B.pre_rows.push_back({z, Rational(1)});
        }
    return B;
}

}  // namespace

TEST_CASE("one-dimensional balls collapse to the exact interval") {
    for (int beta : {2, 5}) {
        auto B = build_ball_approx(2, beta, 1);
        REQUIRE(B.facet_count == 2);
        for (const auto& r : B.polytope.rows) CHECK(abs_val(r.normal[0]) == 1);
        CHECK(verify_inner_containment(B));
        CHECK(verify_outer_containment(B).passed);
    }
}

TEST_CASE("axis grid directions give exact tangent facets") {
    auto B = build_ball_approx(3, 2, 2);
    bool found = false;
    for (const auto& r : B.polytope.rows)
        if (r.normal == RatVec{Rational(1), Rational(0)}) found = true;
    CHECK(found);  // e_1^T x <= 1 survives normalization exactly
}

TEST_CASE("planar ball at the smallest accuracy") {
    auto B = build_ball_approx(2, 2, 2);
    CHECK(B.grid_radius == 2);
    CHECK(B.facet_count <= 24);
    CHECK(verify_inner_containment(B));
    auto outer = verify_outer_containment(B);
    CHECK(outer.passed);
    CHECK(outer.exact);
}

TEST_CASE("inner containment is a per-row certificate") {
    ApproxBall bad;
    bad.p = 2;
    bad.beta = 2;
    bad.pre_rows.push_back({{Integer(1), Integer(1)}, Rational(1)});
    CHECK_FALSE(verify_inner_containment(bad));  // (1^2+1^2)^1 = 2 > 1

    ApproxBall good;
    good.p = 2;
    good.beta = 2;
    good.pre_rows.push_back({{Integer(1), Integer(0)}, Rational(1)});
    CHECK(verify_inner_containment(good));
}

TEST_CASE("outer containment flags too-optimistic accuracy claims") {
    CHECK(verify_outer_containment(box_claimed_as(2, 2)).passed);   // ||(1,1)||^2 = 2 <= 4
    CHECK_FALSE(verify_outer_containment(box_claimed_as(2, 8)).passed);  // 2 > (8/7)^2
}

TEST_CASE("sampled outer mode reports non-exact verification") {
    auto B = build_ball_approx(2, 2, 4, {});
    auto outer = verify_outer_containment(B);
    CHECK(outer.passed);
    CHECK_FALSE(outer.exact);
}

TEST_CASE("facet budget guard") {
    BallBuildOptions opts;
    opts.max_facets = 100;
    CHECK_THROWS_AS(build_ball_approx(2, 16, 3, opts), ApproxBudgetExceeded);
}

TEST_CASE("sandwich: every ball facet is dominated by the p-norm") {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<int> coef(-7, 7), den(1, 3);
    for (int p : {2, 3})
        for (int beta : {2, 4}) {
            auto B = build_ball_approx(p, beta, 2);
            for (int t = 0; t < 40; ++t) {
                RatVec x = {Rational(coef(rng), den(rng)), Rational(coef(rng), den(rng))};
                Rational npow = pnorm_pow(x, p);
                for (const auto& r : B.polytope.rows) {
                    Rational ax = dot(r.normal, x);
                    if (ax <= 0) continue;
                    CHECK(pow_int(ax, static_cast<unsigned>(p)) <= npow);
                }
            }
        }
}

TEST_CASE("containment contract across accuracies and dimensions") {
    for (std::size_t d : {2, 3})
        for (int p : {2, 3})
            for (int beta : {2, 4, 8}) {
                auto B = build_ball_approx(p, beta, d);
                CHECK(verify_inner_containment(B));
                auto outer = verify_outer_containment(B);
                CHECK(outer.passed);
                CHECK(outer.exact);
            }
}

TEST_CASE("approximation on fixed bodies") {
    auto sq = unit_square();
    auto r = beta_approx_normmax(sq, 2, 4);
    CHECK(pnorm_pow(r.witness, 2) >= Rational(9, 8));  // (3/4)^2 * 2
    CHECK(sq.contains(r.witness));
    CHECK(r.guarantee <= 2);
    CHECK(r.upper >= 2);

    auto cr = beta_approx_normmax(cross_polytope_2d(), 2, 2);
    CHECK(pnorm_pow(cr.witness, 2) >= Rational(1, 4));
    CHECK(cr.guarantee <= 1);
    CHECK(cr.upper >= 1);
}

TEST_CASE("a scaled copy of the ball maximizes itself on the boundary") {
    auto B = build_ball_approx(2, 2, 2);
    Rational lambda(3);
    auto P = dilate(B.polytope, lambda);
    auto r = beta_approx_normmax(P, 2, 2);
    // max gauge of B over lambda*B is exactly lambda
    CHECK(r.gauge_value == lambda);
}

TEST_CASE("guarantee improves monotonically with accuracy") {
    std::mt19937_64 rng(56);
    for (int t = 0; t < 12; ++t) {
        auto P = random_symmetric_hpolytope(rng, 2 + t % 2, 1 + t % 2);
        int p = 2 + t % 2;
        Rational prev(-1);
        for (int beta : {2, 3, 4, 8}) {
            auto r = beta_approx_normmax(P, p, beta);
            CHECK(r.guarantee >= prev);
            prev = r.guarantee;
        }
    }
}

TEST_CASE("approximation needs a symmetric input") {
    auto P = parse_hpolytope("H 2 3\n-1 0 0\n0 -1 0\n1 1 1");
    CHECK_THROWS_AS(beta_approx_normmax(P, 2, 2), NotSymmetric);
}
