#pragma once

// Shared generators and independent oracles for the test suites. The
// oracles deliberately avoid the library code paths they are used to
// check: plain subset enumeration, direct hypercube scans, direct
// row-ratio inball computation.

#include <random>

#include "normax/gadget.hpp"
#include "normax/normmax.hpp"
#include "normax/polytope.hpp"
#include "normax/vertex_enum.hpp"

namespace testsupport {

using namespace normax;

/// Symmetric, bounded by construction: a random box plus mirrored pairs of
/// random halfspaces, all coefficients in [-5,5] over small denominators.
inline HPolytope random_symmetric_hpolytope(std::mt19937_64& rng, std::size_t d,
                                            std::size_t extra_pairs) {
    HPolytope P;
    P.dim = d;
    std::uniform_int_distribution<int> box(1, 5), coef(-5, 5), den(1, 2);
    for (std::size_t i = 0; i < d; ++i) {
        Rational c(box(rng));
        for (int s : {1, -1}) P.rows.push_back({unit_vec(d, i, Rational(s)), c});
    }
    for (std::size_t e = 0; e < extra_pairs; ++e) {
        RatVec a(d);
        bool nonzero = false;
        for (auto& x : a) {
            int n = coef(rng);
            x = Rational(n, den(rng));
            nonzero = nonzero || n != 0;
        }
        if (!nonzero) continue;
        Rational b(box(rng));
        P.rows.push_back({a, b});
        P.rows.push_back({neg(a), b});
    }
    return P;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double edge_prob) {
    Graph G;
    G.n = n;
    std::bernoulli_distribution flip(edge_prob);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (flip(rng)) G.add_edge(u, v);
    return G;
}

/// Brute-force norm maximum over the subset-enumerated vertex set.
inline Rational vertex_oracle_max(const HPolytope& P, int p) {
    Rational best(0);
    bool have = false;
    for (const auto& v : enumerate_vertices(P, EnumStrategy::subsets)) {
        Rational val = pnorm_pow(v, p);
        if (!have || val > best) {
            best = val;
            have = true;
        }
    }
    return best;
}

/// Independent hypercube scan for the parallelotope maximum.
inline Rational parmax_oracle(const std::vector<RatVec>& gens, bool sym, int p) {
    const std::size_t d = gens.size();
    const std::size_t amb = gens[0].size();
    Rational best(0);
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        RatVec x(amb, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            int lam = (mask >> i) & 1 ? 1 : (sym ? -1 : 0);
            for (std::size_t j = 0; j < amb; ++j) x[j] += Rational(lam) * gens[i][j];
        }
        Rational val = pnorm_pow(x, p);
        if (val > best) best = val;
    }
    return best;
}

/// Largest t with t * B ball inside the H-polytope, for the two norms whose
/// dual norm is rational: ball = B_inf uses the l1 norm of the rows, ball =
/// B_1 the max norm.
inline Rational inscribed_ball_radius(const HPolytope& P, bool ball_is_box) {
    Rational best;
    bool have = false;
    for (const auto& r : P.rows) {
        Rational dual(0);
        if (ball_is_box) {
            for (const auto& a : r.normal) dual += abs_val(a);
        } else {
            for (const auto& a : r.normal)
                if (abs_val(a) > dual) dual = abs_val(a);
        }
        if (dual == 0) continue;
        Rational t = r.rhs / dual;
        if (!have || t < best) {
            best = t;
            have = true;
        }
    }
    return best;
}

inline HPolytope unit_square() {
    HPolytope P;
    P.dim = 2;
    for (std::size_t i = 0; i < 2; ++i)
        for (int s : {1, -1}) P.rows.push_back({unit_vec(2, i, Rational(s)), Rational(1)});
    return P;
}

inline HPolytope cross_polytope_2d() {
    HPolytope P;
    P.dim = 2;
    for (int a : {1, -1})
        for (int b : {1, -1})
            P.rows.push_back({RatVec{Rational(a), Rational(b)}, Rational(1)});
    return P;
}

}  // namespace testsupport
