#include "normax/normmax.hpp"

#include <set>

#include "enum_core.hpp"
#include "normax/errors.hpp"
#include "normax/linalg.hpp"
#include "normax/lp.hpp"

namespace normax {
namespace {

// Row set invariance under x -> (x[perm[0]], ...): every row (a, b) must
// reappear as (a', b) with a'[perm[i]] = a[i].
void verify_perm_hints(const HPolytope& P, const std::vector<std::vector<std::size_t>>& perms) {
    if (perms.empty()) return;
    std::set<HRow> rows;
    for (const auto& r : P.rows) rows.insert(canonical_row(r));
    for (const auto& p : perms) {
        if (p.size() != P.dim) throw Error("symmetry hint has wrong length");
        for (const auto& r : rows) {
            HRow img;
            img.normal.resize(P.dim);
            for (std::size_t i = 0; i < P.dim; ++i) img.normal[p[i]] = r.normal[i];
            img.rhs = r.rhs;
            if (!rows.count(img)) throw Error("symmetry hint does not fix the row set");
        }
    }
}

NormmaxResult normmax_by_traversal(const HPolytope& P, int p, const SymmetryHints& hints) {
    auto start = feasible_point(P);
    if (!start) throw InfeasiblePolytope("exact_normmax: empty polytope");
    verify_perm_hints(P, hints.coordinate_perms);

    detail::SymmetrySpec spec;
    spec.perms = hints.coordinate_perms;
    spec.negation = is_symmetric(P);

    auto rows = detail::scale_rows(P);
    auto v0 = detail::crawl_to_vertex(rows, P.dim, *start, RatVec(P.dim, Rational(0)));
    auto res = detail::traverse_vertices(rows, P.dim, v0, detail::make_canonicalizer(spec));

    NormmaxResult best;
    best.method = NormmaxMethod::bruteforce;
    bool have = false;
    std::vector<const detail::VertexRep*> argmax;
    for (const auto& rep : res.reps) {
        Rational val = pnorm_pow(rep.to_rational(), p);
        if (!have || val > best.value) {
            best.value = val;
            argmax.clear();
            argmax.push_back(&rep);
            have = true;
        } else if (val == best.value) {
            argmax.push_back(&rep);
        }
    }
    // The witness is the lex-least vertex over the full orbits of the
    // maximizing representatives (the objective is group invariant).
    bool first = true;
    for (const auto* rep : argmax)
        for (const auto& nu : detail::orbit_images(rep->nu, spec)) {
            detail::VertexRep img{nu, rep->delta};
            RatVec x = img.to_rational();
            if (first || x < best.witness) {
                best.witness = std::move(x);
                first = false;
            }
        }
    return best;
}

}  // namespace

NormmaxResult exact_normmax(const HPolytope& P, int p, int dim_cap, EnumStrategy strategy,
                            const SymmetryHints& hints) {
    if (p < 1) throw std::domain_error("exact_normmax: p must be >= 1");
    if (static_cast<int>(P.dim) > dim_cap)
        throw DimensionCapExceeded("exact_normmax: dim " + std::to_string(P.dim) +
                                   " exceeds cap " + std::to_string(dim_cap));
    if (strategy == EnumStrategy::automatic || strategy == EnumStrategy::traversal) {
        // Same selection rule as enumerate_vertices, but folding the
        // maximum over one vertex per symmetry orbit.
        bool small = P.rows.size() < P.dim;
        if (!small) {
            Integer budget(20000), c(1);
            small = true;
            for (std::size_t i = 0; i < P.dim && small; ++i) {
                c = c * Integer(P.rows.size() - i) / Integer(i + 1);
                small = c <= budget;
            }
        }
        if (strategy == EnumStrategy::traversal || !small)
            return normmax_by_traversal(P, p, hints);
    }

    auto vertices = enumerate_vertices(P, EnumStrategy::subsets);
    if (vertices.empty()) throw InfeasiblePolytope("exact_normmax: empty polytope");

    NormmaxResult best;
    best.method = NormmaxMethod::bruteforce;
    bool have = false;
    for (const auto& v : vertices) {  // vertices are sorted, so ties keep the lex-least
        Rational val = pnorm_pow(v, p);
        if (!have || val > best.value) {
            best.value = val;
            best.witness = v;
            have = true;
        }
    }
    return best;
}

NormmaxResult max_phi(const HPolytope& P, const HPolytope& ball) {
    if (ball.dim != P.dim) throw Error("max_phi: dimension mismatch");
    for (const auto& r : ball.rows)
        if (r.rhs != 1) throw BallNotNormalized();

    NormmaxResult best;
    best.method = NormmaxMethod::max_phi;
    bool have = false;
    for (const auto& r : ball.rows) {
        LPResult lp = solve_lp_max(r.normal, P);
        if (lp.status == LPStatus::unbounded) throw UnboundedPolytope("max_phi: P unbounded");
        if (lp.status == LPStatus::infeasible) throw InfeasiblePolytope("max_phi: P empty");
        if (!have || lp.value > best.value) {
            best.value = lp.value;
            best.witness = lp.point;
            have = true;
        }
    }
    if (!have) throw Error("max_phi: ball has no facets");
    return best;
}

namespace {

HPolytope cross_polytope_ball(std::size_t d) {
    HPolytope B;
    B.dim = d;
    B.rows.reserve(std::size_t(1) << d);
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        HRow r;
        r.normal.resize(d);
        for (std::size_t j = 0; j < d; ++j) r.normal[j] = (mask >> j) & 1 ? -1 : 1;
        r.rhs = 1;
        B.rows.push_back(std::move(r));
    }
    return B;
}

}  // namespace

NormmaxResult normmax1(const HPolytope& P, int dim_cap) {
    if (static_cast<int>(P.dim) > dim_cap)
        throw DimensionCapExceeded("normmax1: dim " + std::to_string(P.dim) + " exceeds cap " +
                                   std::to_string(dim_cap));
    NormmaxResult r = max_phi(P, cross_polytope_ball(P.dim));
    r.method = NormmaxMethod::max_phi;
    return r;
}

NormmaxResult parmax(const std::vector<RatVec>& generators, ParmaxMode mode, int p, int dim_cap) {
    const std::size_t d = generators.size();
    if (d == 0) throw DependentGenerators("parmax: no generators");
    if (static_cast<int>(d) > dim_cap)
        throw DimensionCapExceeded("parmax: " + std::to_string(d) + " generators exceed cap " +
                                   std::to_string(dim_cap));
    const std::size_t amb = generators[0].size();
    RatMat M;
    for (const auto& g : generators) {
        if (g.size() != amb) throw Error("parmax: inconsistent generator length");
        M.push_back(g);
    }
    if (rank(std::move(M)) != d) throw DependentGenerators();

    NormmaxResult best;
    best.method = NormmaxMethod::parmax;
    bool have = false;
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        RatVec x(amb, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            const int lam = (mask >> i) & 1 ? 1 : (mode == ParmaxMode::sym ? -1 : 0);
            if (lam == 1)
                x = add(x, generators[i]);
            else if (lam == -1)
                x = sub(x, generators[i]);
        }
        Rational val = pnorm_pow(x, p);
        if (!have || val > best.value || (val == best.value && x < best.witness)) {
            best.value = val;
            best.witness = std::move(x);
            have = true;
        }
    }
    return best;
}

bool decide_normmax(const HPolytope& P, int p, const Rational& gamma, const std::string& solver,
                    int dim_cap) {
    Rational value;
    if (solver == "exact") {
        value = exact_normmax(P, p, dim_cap).value;
    } else if (solver == "l1") {
        if (p != 1) throw Error("decide_normmax: the l1 solver requires p = 1");
        value = normmax1(P, dim_cap).value;
    } else {
        throw Error("decide_normmax: unknown solver '" + solver + "'");
    }
    return value >= gamma;
}

}  // namespace normax
