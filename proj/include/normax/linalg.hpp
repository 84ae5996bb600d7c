#pragma once

#include <optional>
#include <vector>

#include "normax/vec.hpp"

namespace normax {

/// Dense rational matrix, row major.
using RatMat = std::vector<RatVec>;

/// Solves the square system M x = b exactly; empty optional when singular.
std::optional<RatVec> solve_square(RatMat M, RatVec b);

/// Rank of an arbitrary matrix over Q.
std::size_t rank(RatMat M);

/// One nonzero vector y with M y = 0 for a matrix with rank(M) = cols-1;
/// empty optional if the nullspace is not one-dimensional.
std::optional<RatVec> nullspace_dir(RatMat M, std::size_t cols);

}  // namespace normax
