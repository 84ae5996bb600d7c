#pragma once

#include "normax/polytope.hpp"

namespace normax {

enum class EnumStrategy {
    automatic,  // subsets when C(n,d) is small, traversal otherwise
    subsets,    // solve every d-subset of rows, O(n^d)
    traversal,  // breadth-first walk over the vertex-edge graph
};

/// Exact vertex set of a bounded H-polytope, deduplicated, sorted
/// lexicographically. Returns an empty list for an empty polytope.
/// Throws UnboundedPolytope when P is unbounded (the subset strategy
/// checks the 2d axis LPs up front, the traversal detects an
/// unbounded edge while walking).
std::vector<RatVec> enumerate_vertices(const HPolytope& P,
                                       EnumStrategy strategy = EnumStrategy::automatic);

}  // namespace normax
