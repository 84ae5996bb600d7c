#include "normax/radii.hpp"

#include "normax/errors.hpp"

namespace normax {

Rational radius_h(const HPolytope& P, int p, RadiusKind which, int dim_cap) {
    if (which != RadiusKind::circumradius && which != RadiusKind::half_diameter)
        throw Error("radius_h: H-presented queries are circumradius or half_diameter");
    if (!is_symmetric(P)) throw NotSymmetric();
    return exact_normmax(P, p, dim_cap).value;
}

RadiusVResult radius_v(const VPolytope& P, int p, RadiusKind which, int dim_cap) {
    if (which != RadiusKind::inradius && which != RadiusKind::width)
        throw Error("radius_v: V-presented queries are inradius or width");
    if (!is_symmetric(P)) throw NotSymmetric();
    HPolytope polar = polar_of_vpoly(P);  // throws OriginNotInterior when degenerate
    return {exact_normmax(polar, p, dim_cap).value};
}

}  // namespace normax
