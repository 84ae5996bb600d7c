#pragma once

#include "normax/normmax.hpp"
#include "normax/polytope.hpp"

namespace normax {

enum class RadiusKind { circumradius, half_diameter, inradius, width };

/// Circumradius / half-diameter of a 0-symmetric H-polytope with respect
/// to the p-norm, returned as the p-th power: both functionals coincide
/// with max ||x||_p^p on symmetric bodies.
Rational radius_h(const HPolytope& P, int p, RadiusKind which, int dim_cap = kDefaultDimCap);

/// Inradius / width of a 0-symmetric V-polytope with respect to the dual
/// norm, reported through the polar: the returned value v equals
/// R(polar(P), B_p)^p, and r(P, B_q)^p <= gamma holds iff v * gamma >= 1.
/// Roots are never taken; everything stays rational.
struct RadiusVResult {
    Rational polar_max;  // v above
    bool decide(const Rational& gamma) const { return polar_max * gamma >= 1; }
};

RadiusVResult radius_v(const VPolytope& P, int p, RadiusKind which, int dim_cap = kDefaultDimCap);

}  // namespace normax
