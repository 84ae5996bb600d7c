#pragma once

#include "normax/polytope.hpp"

namespace normax {

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rational value;  // meaningful when optimal
    RatVec point;    // meaningful when optimal; a basic solution
};

/// Exact maximum of c^T x over P. Infeasible/unbounded are reported in the
/// status, never thrown. Deterministic: Bland's rule, fixed column order.
LPResult solve_lp_max(const RatVec& c, const HPolytope& P);

/// True iff max e_i^T x and max -e_i^T x are bounded for every axis i.
/// A nonempty polyhedron is bounded iff all 2d axis LPs are bounded.
bool is_bounded(const HPolytope& P);

/// Any exact feasible point (not necessarily a vertex); nullopt when empty.
std::optional<RatVec> feasible_point(const HPolytope& P);

}  // namespace normax
