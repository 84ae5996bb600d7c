#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "normax/vec.hpp"

namespace normax {

/// One halfspace normal^T x <= rhs.
struct HRow {
    RatVec normal;
    Rational rhs;

    bool operator==(const HRow& o) const { return normal == o.normal && rhs == o.rhs; }
    bool operator<(const HRow& o) const {
        if (normal != o.normal) return normal < o.normal;
        return rhs < o.rhs;
    }
};

/// Halfspace presentation { x : normal_i^T x <= rhs_i }.
struct HPolytope {
    std::size_t dim = 0;
    std::vector<HRow> rows;

    HPolytope() = default;
    HPolytope(std::size_t d, std::vector<HRow> r) : dim(d), rows(std::move(r)) {}

    bool contains(const RatVec& x) const {
        for (const auto& r : rows)
            if (dot(r.normal, x) > r.rhs) return false;
        return true;
    }
};

/// Convex hull of finitely many rational points.
struct VPolytope {
    std::size_t dim = 0;
    std::vector<RatVec> points;
};

/// Scales a row so the normal is integer with content 1 (rhs scaled along).
HRow canonical_row(const HRow& r);

/// Row set closed under (a, b) -> (-a, b), after canonicalization.
bool is_symmetric(const HPolytope& P);

/// Point set closed under negation.
bool is_symmetric(const VPolytope& P);

/// Dilation lambda * P for lambda > 0 (scales every rhs).
HPolytope dilate(const HPolytope& P, const Rational& lambda);

/// Polar { x : v^T x <= 1 for every point v }. Throws OriginNotInterior
/// if 0 is not interior to conv(P) (detected: the polar is unbounded).
HPolytope polar_of_vpoly(const VPolytope& P);

}  // namespace normax
