#pragma once

#include <string>

#include "normax/polytope.hpp"
#include "normax/vertex_enum.hpp"

namespace normax {

inline constexpr int kDefaultDimCap = 8;

enum class NormmaxMethod { bruteforce, max_phi, parmax };

struct NormmaxResult {
    Rational value;  // max of the objective (a p-norm power, or a gauge value)
    RatVec witness;
    NormmaxMethod method = NormmaxMethod::bruteforce;
};

/// Coordinate permutations known to fix the row set, e.g. the block swaps
/// of a reduction instance. Each generator is verified exactly against the
/// rows before use; the traversal then walks one vertex per orbit, which
/// is sound because the objective is permutation and sign invariant.
struct SymmetryHints {
    std::vector<std::vector<std::size_t>> coordinate_perms;
};

/// max { ||x||_p^p : x in P } by enumerating the vertices of P. Witness is
/// the lexicographically smallest maximizing vertex.
NormmaxResult exact_normmax(const HPolytope& P, int p, int dim_cap = kDefaultDimCap,
                            EnumStrategy strategy = EnumStrategy::automatic,
                            const SymmetryHints& hints = {});

/// max of the gauge of `ball` over P via one LP per ball facet. Ball rows
/// must be normalized to rhs 1; throws BallNotNormalized otherwise.
NormmaxResult max_phi(const HPolytope& P, const HPolytope& ball);

/// max { ||x||_1 : x in P } as max_phi with the cross-polytope ball
/// (all 2^d sign vectors as facet normals).
NormmaxResult normmax1(const HPolytope& P, int dim_cap = kDefaultDimCap);

enum class ParmaxMode { zero_one, sym };

/// max ||sum lambda_i v_i||_p^p over lambda in {0,1}^d (or {-1,1}^d for
/// sym; extreme lambdas suffice since the objective is convex). Generators
/// must be linearly independent.
NormmaxResult parmax(const std::vector<RatVec>& generators, ParmaxMode mode, int p,
                     int dim_cap = kDefaultDimCap);

/// Decision form of Problem-style queries: computed value >= gamma, exact.
bool decide_normmax(const HPolytope& P, int p, const Rational& gamma,
                    const std::string& solver = "exact", int dim_cap = kDefaultDimCap);

}  // namespace normax
