#pragma once

// Internal machinery for exact vertex enumeration by walking the 1-skeleton.
// Vertices are kept as (nu, delta) with integer coordinates nu and a common
// denominator delta > 0, gcd(content(nu), delta) = 1. Rows are pre-scaled to
// primitive integer form so every slack is a plain integer.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "normax/errors.hpp"
#include "normax/linalg.hpp"
#include "normax/polytope.hpp"

namespace normax::detail {

struct IntRow {
    IntVec a;
    Integer b;
    std::vector<std::uint32_t> support;  // indices of nonzero coefficients
};

struct VertexRep {
    IntVec nu;
    Integer delta;

    RatVec to_rational() const {
        RatVec x(nu.size());
        for (std::size_t i = 0; i < nu.size(); ++i) x[i] = Rational(nu[i], delta);
        return x;
    }
};

inline bool operator<(const VertexRep& l, const VertexRep& r) {
    if (l.delta != r.delta) return l.delta < r.delta;
    return l.nu < r.nu;
}

inline std::vector<IntRow> scale_rows(const HPolytope& P) {
    std::vector<IntRow> rows;
    rows.reserve(P.rows.size());
    for (const auto& r : P.rows) {
        Integer l(1);
        for (const auto& x : r.normal) l = lcm(l, den(x));
        l = lcm(l, den(r.rhs));
        IntRow out;
        out.a.resize(P.dim);
        Integer g(0);
        for (std::size_t j = 0; j < P.dim; ++j) {
            out.a[j] = num(r.normal[j]) * (l / den(r.normal[j]));
            g = gcd(g, out.a[j]);
        }
        out.b = num(r.rhs) * (l / den(r.rhs));
        g = gcd(g, out.b);
        if (g > 1) {
            for (auto& x : out.a) x /= g;
            out.b /= g;
        }
        for (std::size_t j = 0; j < P.dim; ++j)
            if (out.a[j] != 0) out.support.push_back(static_cast<std::uint32_t>(j));
        rows.push_back(std::move(out));
    }
    return rows;
}

// In-place GMP primitives: the enumeration hot loops run millions of
// multiply-accumulates, and temporaries would dominate the runtime.
inline void mul_into(Integer& out, const Integer& a, const Integer& b) {
    mpz_mul(out.backend().data(), a.backend().data(), b.backend().data());
}
inline void addmul_into(Integer& acc, const Integer& a, const Integer& b) {
    mpz_addmul(acc.backend().data(), a.backend().data(), b.backend().data());
}
inline void submul_into(Integer& acc, const Integer& a, const Integer& b) {
    mpz_submul(acc.backend().data(), a.backend().data(), b.backend().data());
}

inline void row_dot_into(Integer& acc, const IntRow& r, const IntVec& x) {
    acc = 0;
    for (auto j : r.support) addmul_into(acc, r.a[j], x[j]);
}

inline Integer row_dot(const IntRow& r, const IntVec& x) {
    Integer s(0);
    for (auto j : r.support) addmul_into(s, r.a[j], x[j]);
    return s;
}

inline void normalize(VertexRep& v) {
    Integer g = v.delta;
    for (const auto& x : v.nu) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    if (g > 1) {
        for (auto& x : v.nu) x /= g;
        v.delta /= g;
    }
}

inline VertexRep from_rational(const RatVec& x) {
    VertexRep v;
    v.delta = 1;
    for (const auto& q : x) v.delta = lcm(v.delta, den(q));
    v.nu.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v.nu[i] = num(x[i]) * (v.delta / den(x[i]));
    return v;
}

// slack_i = b_i * delta - a_i . nu  (>= 0 on feasible points)
inline void compute_slacks(const std::vector<IntRow>& rows, const VertexRep& v,
                           std::vector<Integer>& out) {
    out.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        mul_into(out[i], rows[i].b, v.delta);
        for (auto j : rows[i].support) submul_into(out[i], rows[i].a[j], v.nu[j]);
    }
}

inline IntVec to_primitive_int(const RatVec& y) {
    return primitive(y);
}

/// Moves a feasible point uphill (objective c, may be zero) until the tight
/// rows have full rank, i.e. the point is a vertex. Bounded inputs only;
/// throws UnboundedPolytope when an improving/kernel ray never blocks.
VertexRep crawl_to_vertex(const std::vector<IntRow>& rows, std::size_t dim,
                          const RatVec& start, const RatVec& c);

struct TraversalResult {
    std::vector<VertexRep> reps;
};

/// BFS over vertex orbits. `canonicalize` must map a vertex to a vertex in
/// the same orbit of a symmetry group of the row set (identity by default).
TraversalResult traverse_vertices(const std::vector<IntRow>& rows, std::size_t dim,
                                  const VertexRep& start,
                                  const std::function<void(VertexRep&)>& canonicalize);

/// Symmetry group given by coordinate-permutation generators
/// (x -> (x[perm[0]], x[perm[1]], ...)) and optionally x -> -x.
struct SymmetrySpec {
    std::vector<std::vector<std::size_t>> perms;
    bool negation = false;

    bool trivial() const { return perms.empty() && !negation; }
};

/// Orbit of a point under the group (closure over generators).
std::vector<IntVec> orbit_images(const IntVec& nu, const SymmetrySpec& spec);

/// Canonicalizer picking the lexicographically largest orbit image.
std::function<void(VertexRep&)> make_canonicalizer(const SymmetrySpec& spec);

}  // namespace normax::detail
