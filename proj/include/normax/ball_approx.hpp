#pragma once

#include "normax/normmax.hpp"
#include "normax/polytope.hpp"

namespace normax {

/// One grid facet before normalization: q(z)^T x <= beta_z with
/// q(z)_i = sgn(z_i) |z_i|^{p-1}. The inner-containment certificate is the
/// integer comparison (sum |z_i|^p)^{p-1} <= beta_z^p.
struct BallPreRow {
    IntVec z;
    Rational beta_z;
};

/// Rational polytope B with B_p^d inside B inside beta/(beta-1) B_p^d.
struct ApproxBall {
    HPolytope polytope;  // rows scaled to rhs 1
    int p = 2;
    int beta = 2;
    std::size_t facet_count = 0;
    int grid_radius = 0;
    std::vector<BallPreRow> pre_rows;
};

struct BallBuildOptions {
    std::size_t max_facets = 4'000'000;  // grid size guard, ApproxBudgetExceeded beyond
    int max_doublings = 4;
};

/// Tangent-like facets at every nonzero integer grid direction
/// z in {-m..m}^d, parallel rows deduplicated keeping the tightest.
/// The grid radius m starts at beta and doubles until the outer
/// containment check passes (exact for d <= 3, sampled above).
ApproxBall build_ball_approx(int p, int beta, std::size_t d,
                             const BallBuildOptions& opts = {});

/// Every pre-normalization row satisfies the exact support-function
/// criterion, hence B_p^d is inside B.
bool verify_inner_containment(const ApproxBall& B);

struct OuterCheck {
    bool passed = false;
    bool exact = false;  // false = sampled mode (d > 3), not a proof
};

/// Exact mode (d <= 3): every vertex v of B has ||v||_p^p <= (beta/(beta-1))^p.
/// Sampled mode: the same check on LP maximizers over a fixed direction set.
OuterCheck verify_outer_containment(const ApproxBall& B);

struct BetaApproxResult {
    RatVec witness;       // x-bar, feasible in P
    Rational guarantee;   // = gauge(x-bar)^p; at least ((beta-1)/beta)^p * OPT
    Rational upper;       // certified upper bound on OPT
    Rational gauge_value; // max ||x||_B over P
    std::size_t ball_facets = 0;
};

/// The fixed-accuracy approximation: maximize the gauge of the grid ball
/// over P, one LP per facet. The certified bracket is
/// gauge^p <= max ||x||_p^p <= (beta/(beta-1))^p gauge^p.
BetaApproxResult beta_approx_normmax(const HPolytope& P, int p, int beta,
                                     const BallBuildOptions& opts = {});

/// Same, against a prebuilt ball (must match p and the dimension of P).
BetaApproxResult beta_approx_normmax(const HPolytope& P, const ApproxBall& ball);

}  // namespace normax
