#pragma once

#include <set>
#include <string>
#include <utility>

#include "normax/normmax.hpp"
#include "normax/polytope.hpp"

namespace normax {

/// Simple graph on vertices 0..n-1, no self-loops.
struct Graph {
    std::size_t n = 0;
    std::set<std::pair<std::size_t, std::size_t>> edges;  // u < v

    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;
};

/// DIMACS-like input: "p edge n m", then m lines "e u v" (1-indexed);
/// 'c' or '#' lines are comments.
Graph parse_dimacs(const std::string& text);
Graph read_graph_file(const std::string& path);

/// The reduction output: a polytope in dimension 2k whose maximal p-norm
/// power separates graphs with and without a k-clique.
struct GadgetInstance {
    HPolytope polytope;  // dimension 2k
    int p = 2;
    std::size_t n_padded = 0;  // even, >= 4
    std::size_t k = 0;
    Rational U;        // grid constant 1/(n^{2p} k^2)
    Rational eps_bar;  // separation slack used in the pair constraints
    std::vector<RatVec> vertices_bar;  // 2n rounded polygon vertices
    std::vector<RatVec> normals_bar;   // 2n dual normals
    Rational yes_threshold;  // k (1-U)^p
    Rational no_threshold;   // (k-1)(1+U)^p + 1 - 2^{p-3}/(p n^p)
};

/// 2n points on the p-sphere: n ray/sphere intersections found by exact
/// bisection to tolerance U/8, snapped to the grid (U/2)Z^2, then their
/// antipodes. Guarantees ||p_v - rounded||_{p'} <= U for every p' >= 1.
std::vector<RatVec> sphere_points(std::size_t n, int p, const Rational& U);

/// H-presentation of a convex polygon from its vertices in angular order:
/// one facet through each consecutive pair, exact 2x2 solves. Throws
/// NotInConvexPosition when a turn is not strictly convex.
HPolytope polygon_hrep(const std::vector<RatVec>& points_bar);

/// Builds the full reduction. Pads the graph with isolated vertices until
/// all exact per-instance certificates hold (threshold gap, separation
/// bound, pair-cut strength, far-arc bound). Throws KTooLarge when
/// k > n after padding.
GadgetInstance build_gadget(const Graph& G, std::size_t k, int p);

/// Runs exact_normmax on the gadget polytope and compares with the YES
/// threshold. A maximum strictly inside (no, yes) is a construction bug
/// and throws GapViolation.
bool decide_clique_via_normmax(const GadgetInstance& inst, int dim_cap = kDefaultDimCap);

/// Lowest index v maximizing normals_bar[v]^T x_block (0-based).
std::size_t nearest_vertex_index(const RatVec& x_block,
                                 const std::vector<RatVec>& normals_bar);

/// Exhaustive ground truth: does G contain a k-clique? n <= 16.
bool clique_oracle(const Graph& G, std::size_t k);

struct BoundsCheck {
    std::string name;
    bool passed = false;
    std::string details;
};

struct BoundsReport {
    std::size_t n = 0;
    int p = 2;
    std::size_t k = 2;
    Rational U;
    Rational eps_bar;
    std::vector<BoundsCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Certified checks on the rounded construction for given n, p: neighbor
/// distances, separation lower bound, dual identity, rounded norms, and an
/// interval certificate for the normal rounding. k enters only through the
/// grid constant U (default 2).
BoundsReport verify_gadget_bounds(std::size_t n, int p, std::size_t k = 2);

/// JSON sidecar with the instance parameters as rational strings.
std::string gadget_sidecar_json(const GadgetInstance& inst);

}  // namespace normax
