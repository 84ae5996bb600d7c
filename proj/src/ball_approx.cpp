#include "normax/ball_approx.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "enum_core.hpp"
#include "normax/errors.hpp"
#include "normax/lp.hpp"

namespace normax {
namespace {

unsigned ceil_log2(const Integer& v) {
    if (v <= 1) return 0;
    unsigned b = msb(v);  // floor(log2 v)
    return (Integer(1) << b) == v ? b : b + 1;
}

// Smallest multiple of 2^-prec whose p-th power reaches S^{p-1}.
Rational round_up_support(const Integer& S, int p, unsigned prec) {
    Integer target = pow_int(S, static_cast<unsigned>(p - 1)) <<
                     static_cast<unsigned>(p) * prec;
    Integer r = floor_root(target, static_cast<unsigned>(p));
    if (pow_int(r, static_cast<unsigned>(p)) < target) r += 1;
    return Rational(r, Integer(1) << prec);
}

struct CandidateRow {
    IntVec z;
    Rational beta_z;
    IntVec dir;      // primitive direction of q(z)
    Rational ratio;  // rhs per unit of dir
};

ApproxBall build_at_radius(int p, int beta, std::size_t d, int m, std::size_t max_facets) {
    Integer grid_size = pow_int(Integer(2 * m + 1), static_cast<unsigned>(d)) - 1;
    if (grid_size > Integer(max_facets))
        throw ApproxBudgetExceeded("ball grid (2*" + std::to_string(m) + "+1)^" +
                                   std::to_string(d) + " exceeds the facet budget of " +
                                   std::to_string(max_facets));

    const unsigned prec =
        ceil_log2(Integer(beta) * pow_int(Integer(m), static_cast<unsigned>(p))) + 4;

    std::map<IntVec, CandidateRow> kept;
    std::vector<long> z(d, -m);
    for (;;) {
        bool zero = true;
        for (auto v : z)
            if (v != 0) { zero = false; break; }
        if (!zero) {
            IntVec zi(d);
            IntVec q(d);
            Integer S(0), g(0);
            for (std::size_t i = 0; i < d; ++i) {
                zi[i] = z[i];
                Integer a = pow_int(Integer(z[i] < 0 ? -z[i] : z[i]),
                                    static_cast<unsigned>(p));
                S += a;
                Integer qi = pow_int(Integer(z[i] < 0 ? -z[i] : z[i]),
                                     static_cast<unsigned>(p - 1));
                q[i] = z[i] < 0 ? Integer(-qi) : qi;
                g = gcd(g, qi);
            }
            Rational beta_z = round_up_support(S, p, prec);
            IntVec dir(d);
            for (std::size_t i = 0; i < d; ++i) dir[i] = q[i] / g;
            Rational ratio = beta_z / Rational(g);
            auto it = kept.find(dir);
            if (it == kept.end() || ratio < it->second.ratio)
                kept[dir] = CandidateRow{std::move(zi), std::move(beta_z), dir, std::move(ratio)};
        }
        std::size_t i = 0;
        while (i < d && z[i] == m) z[i++] = -m;
        if (i == d) break;
        ++z[i];
    }

    ApproxBall B;
    B.p = p;
    B.beta = beta;
    B.grid_radius = m;
    B.polytope.dim = d;
    for (auto& [dir, cand] : kept) {
        HRow row;
        row.normal.resize(d);
        for (std::size_t i = 0; i < d; ++i) row.normal[i] = Rational(dir[i]) / cand.ratio;
        row.rhs = 1;
        B.polytope.rows.push_back(std::move(row));
        B.pre_rows.push_back({std::move(cand.z), std::move(cand.beta_z)});
    }
    B.facet_count = B.polytope.rows.size();
    return B;
}

bool signed_perm_invariant(const HPolytope& P) {
    std::set<HRow> rows;
    for (const auto& r : P.rows) rows.insert(canonical_row(r));
    const std::size_t d = P.dim;
    auto image_present = [&](auto&& transform) {
        for (const auto& r : rows) {
            HRow img = r;
            transform(img.normal);
            if (!rows.count(img)) return false;
        }
        return true;
    };
    if (!image_present([](RatVec& v) { v[0] = -v[0]; })) return false;
    for (std::size_t i = 0; i + 1 < d; ++i)
        if (!image_present([i](RatVec& v) { std::swap(v[i], v[i + 1]); })) return false;
    return true;
}

// Vertex orbit representatives under coordinate permutations and sign
// flips: one BFS step per orbit instead of per vertex.
std::vector<RatVec> vertex_orbit_reps(const HPolytope& P) {
    auto rows = detail::scale_rows(P);
    auto start = feasible_point(P);
    if (!start) return {};
    auto v0 = detail::crawl_to_vertex(rows, P.dim, *start, RatVec(P.dim, Rational(0)));
    auto canon = [](detail::VertexRep& v) {
        for (auto& x : v.nu)
            if (x < 0) x = -x;
        std::sort(v.nu.begin(), v.nu.end(),
                  [](const Integer& a, const Integer& b) { return b < a; });
    };
    auto res = detail::traverse_vertices(rows, P.dim, v0, canon);
    std::vector<RatVec> out;
    out.reserve(res.reps.size());
    for (const auto& r : res.reps) out.push_back(r.to_rational());
    return out;
}

}  // namespace

bool verify_inner_containment(const ApproxBall& B) {
    for (const auto& row : B.pre_rows) {
        Integer S(0);
        for (const auto& zi : row.z)
            S += pow_int(zi < 0 ? Integer(-zi) : zi, static_cast<unsigned>(B.p));
        if (Rational(pow_int(S, static_cast<unsigned>(B.p - 1))) >
            pow_int(row.beta_z, static_cast<unsigned>(B.p)))
            return false;
    }
    return true;
}

OuterCheck verify_outer_containment(const ApproxBall& B) {
    const Rational bound =
        pow_int(Rational(B.beta) / Rational(B.beta - 1), static_cast<unsigned>(B.p));
    OuterCheck res;
    if (B.polytope.dim <= 3) {
        res.exact = true;
        auto vertices = signed_perm_invariant(B.polytope)
                            ? vertex_orbit_reps(B.polytope)
                            : enumerate_vertices(B.polytope);
        for (const auto& v : vertices)
            if (pnorm_pow(v, B.p) > bound) return res;  // passed = false
        res.passed = true;
        return res;
    }
    // Sampled mode: LP maximizers along a fixed direction set.
    res.exact = false;
    const std::size_t d = B.polytope.dim;
    std::vector<RatVec> dirs;
    for (std::size_t i = 0; i < d; ++i) dirs.push_back(unit_vec(d, i));
    for (std::size_t mask = 0; mask < (std::size_t(1) << std::min<std::size_t>(d, 10)); ++mask) {
        RatVec v(d, Rational(1));
        for (std::size_t j = 0; j < d; ++j)
            if ((mask >> j) & 1) v[j] = -1;
        dirs.push_back(std::move(v));
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < 32; ++t) {
        RatVec v(d);
        bool nz = false;
        for (auto& x : v) {
            int c = coef(rng);
            x = c;
            nz = nz || c != 0;
        }
        if (nz) dirs.push_back(std::move(v));
    }
    for (const auto& dir : dirs) {
        LPResult lp = solve_lp_max(dir, B.polytope);
        if (lp.status != LPStatus::optimal) return res;
        if (pnorm_pow(lp.point, B.p) > bound) return res;
    }
    res.passed = true;
    return res;
}

ApproxBall build_ball_approx(int p, int beta, std::size_t d, const BallBuildOptions& opts) {
    if (p < 2) throw std::domain_error("build_ball_approx: p must be >= 2");
    if (beta < 2) throw std::domain_error("build_ball_approx: beta must be >= 2");
    if (d < 1) throw std::domain_error("build_ball_approx: d must be >= 1");

    int m = beta;
    for (int round = 0;; ++round) {
        ApproxBall B = build_at_radius(p, beta, d, m, opts.max_facets);
        if (!verify_inner_containment(B))
            throw Error("ball construction violated its inner certificate");  // unreachable
        if (verify_outer_containment(B).passed) return B;
        if (round >= opts.max_doublings)
            throw Error("ball outer containment did not stabilize while doubling the grid");
        m *= 2;
    }
}

BetaApproxResult beta_approx_normmax(const HPolytope& P, const ApproxBall& ball) {
    if (!is_symmetric(P)) throw NotSymmetric("beta_approx_normmax: P must be 0-symmetric");
    if (ball.polytope.dim != P.dim) throw Error("beta_approx_normmax: dimension mismatch");
    NormmaxResult phi = max_phi(P, ball.polytope);

    BetaApproxResult out;
    out.witness = phi.witness;
    out.gauge_value = phi.value;
    out.guarantee = pow_int(phi.value, static_cast<unsigned>(ball.p));
    out.upper = out.guarantee * pow_int(Rational(ball.beta) / Rational(ball.beta - 1),
                                        static_cast<unsigned>(ball.p));
    out.ball_facets = ball.facet_count;
    return out;
}

BetaApproxResult beta_approx_normmax(const HPolytope& P, int p, int beta,
                                     const BallBuildOptions& opts) {
    if (p < 2) throw std::domain_error("beta_approx_normmax: p must be >= 2");
    return beta_approx_normmax(P, build_ball_approx(p, beta, P.dim, opts));
}

}  // namespace normax
