#include "normax/vertex_enum.hpp"

#include <algorithm>
#include <set>

#include "enum_core.hpp"
#include "normax/errors.hpp"
#include "normax/linalg.hpp"
#include "normax/lp.hpp"

namespace normax {
namespace {

Integer binomial_capped(std::size_t n, std::size_t k, const Integer& cap) {
    if (k > n) return 0;
    Integer r(1);
    for (std::size_t i = 0; i < k; ++i) {
        r = r * Integer(n - i) / Integer(i + 1);
        if (r > cap) return cap + 1;
    }
    return r;
}

std::vector<RatVec> enumerate_by_subsets(const HPolytope& P) {
    if (!is_bounded(P)) throw UnboundedPolytope();
    const std::size_t d = P.dim, n = P.rows.size();
    std::set<RatVec> found;
    if (n < d) return {};
    std::vector<std::size_t> comb(d);
    for (std::size_t i = 0; i < d; ++i) comb[i] = i;
    for (;;) {
        RatMat M(d, RatVec(d));
        RatVec b(d);
        for (std::size_t i = 0; i < d; ++i) {
            M[i] = P.rows[comb[i]].normal;
            b[i] = P.rows[comb[i]].rhs;
        }
        if (auto x = solve_square(std::move(M), std::move(b)); x && P.contains(*x))
            found.insert(std::move(*x));
        // next d-combination of [n]
        std::size_t i = d;
        bool done = true;
        while (i > 0) {
            --i;
            if (comb[i] + (d - i) < n) {
                ++comb[i];
                for (std::size_t j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return {found.begin(), found.end()};
}

std::vector<RatVec> enumerate_by_traversal(const HPolytope& P) {
    auto start = feasible_point(P);
    if (!start) return {};
    auto rows = detail::scale_rows(P);
    detail::VertexRep v0 =
        detail::crawl_to_vertex(rows, P.dim, *start, RatVec(P.dim, Rational(0)));

    // A 0-symmetric row set lets us walk one vertex per +-orbit.
    std::function<void(detail::VertexRep&)> canon;
    const bool sym = is_symmetric(P);
    if (sym)
        canon = [](detail::VertexRep& v) {
            IntVec m = v.nu;
            for (auto& x : m) x = -x;
            if (m > v.nu) v.nu = std::move(m);
        };

    auto res = detail::traverse_vertices(rows, P.dim, v0, canon);
    std::set<RatVec> out;
    for (const auto& rep : res.reps) {
        RatVec x = rep.to_rational();
        if (sym) out.insert(neg(x));
        out.insert(std::move(x));
    }
    return {out.begin(), out.end()};
}

}  // namespace

std::vector<RatVec> enumerate_vertices(const HPolytope& P, EnumStrategy strategy) {
    if (strategy == EnumStrategy::automatic) {
        const Integer budget(20000);
        strategy = binomial_capped(P.rows.size(), P.dim, budget) <= budget
                       ? EnumStrategy::subsets
                       : EnumStrategy::traversal;
    }
    return strategy == EnumStrategy::subsets ? enumerate_by_subsets(P)
                                             : enumerate_by_traversal(P);
}

}  // namespace normax
