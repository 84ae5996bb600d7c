#include "normax/polytope.hpp"

#include <algorithm>
#include <set>

#include "normax/errors.hpp"
#include "normax/lp.hpp"

namespace normax {

HRow canonical_row(const HRow& r) {
    if (is_zero(r.normal)) return r;
    IntVec p = primitive(r.normal);
    // p = normal * t for some t > 0; find t from the first nonzero entry.
    Rational t;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (r.normal[i] != 0) { t = Rational(p[i]) / r.normal[i]; break; }
    HRow out;
    out.normal.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out.normal[i] = Rational(p[i]);
    out.rhs = r.rhs * t;
    return out;
}

bool is_symmetric(const HPolytope& P) {
    std::set<HRow> rows;
    for (const auto& r : P.rows) rows.insert(canonical_row(r));
    for (const auto& r : rows) {
        HRow m{neg(r.normal), r.rhs};
        if (!rows.count(m)) return false;
    }
    return true;
}

bool is_symmetric(const VPolytope& P) {
    std::set<RatVec> pts(P.points.begin(), P.points.end());
    for (const auto& p : pts)
        if (!pts.count(neg(p))) return false;
    return true;
}

HPolytope dilate(const HPolytope& P, const Rational& lambda) {
    HPolytope Q = P;
    for (auto& r : Q.rows) r.rhs *= lambda;
    return Q;
}

HPolytope polar_of_vpoly(const VPolytope& P) {
    HPolytope Q;
    Q.dim = P.dim;
    Q.rows.reserve(P.points.size());
    for (const auto& v : P.points) Q.rows.push_back({v, Rational(1)});
    // 0 interior to conv(P) iff the polar is bounded.
    if (!is_bounded(Q)) throw OriginNotInterior();
    return Q;
}

}  // namespace normax
