#pragma once

#include <string>
#include <variant>

#include "normax/polytope.hpp"

namespace normax {

using AnyPolytope = std::variant<HPolytope, VPolytope>;

// Text format, one polytope per file:
//   line 1: "H d n"  or  "V d n"
//   then n rows of d+1 (H: normal then rhs) or d (V: point) rationals,
//   each an optionally signed integer or "num/den". '#' starts a comment.
AnyPolytope parse_polytope(const std::string& text);

std::string serialize_polytope(const HPolytope& P);
std::string serialize_polytope(const VPolytope& P);

HPolytope parse_hpolytope(const std::string& text);
VPolytope parse_vpolytope(const std::string& text);

AnyPolytope read_polytope_file(const std::string& path);

}  // namespace normax
