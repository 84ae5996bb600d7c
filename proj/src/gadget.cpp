#include "normax/gadget.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "normax/errors.hpp"

namespace normax {

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw Error("graph: self-loop");
    if (u > v) std::swap(u, v);
    if (v >= n) throw Error("graph: vertex out of range");
    edges.insert({u, v});
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    return edges.count({u, v}) != 0;
}

Graph parse_dimacs(const std::string& text) {
    Graph G;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0, m_declared = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c" || head[0] == '#') continue;
        if (head == "p") {
            std::string fmt;
            long n = -1, m = -1;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                throw ParseError("expected 'p edge <n> <m>'", line_no);
            G.n = static_cast<std::size_t>(n);
            m_declared = static_cast<std::size_t>(m);
            have_header = true;
        } else if (head == "e") {
            if (!have_header) throw ParseError("edge before problem line", line_no);
            long u = 0, v = 0;
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > static_cast<long>(G.n) ||
                v > static_cast<long>(G.n) || u == v)
                throw ParseError("bad edge line", line_no);
            G.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
        } else {
            throw ParseError("unknown line type '" + head + "'", line_no);
        }
    }
    if (!have_header) throw ParseError("missing 'p edge' line", line_no ? line_no : 1);
    (void)m_declared;  // duplicate edges collapse, so the count is advisory
    return G;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_dimacs(ss.str());
}

namespace {

struct Ray {
    RatVec origin;
    RatVec dir;
};

// 0-based v in [0, n). First family sweeps quadrant I from (1,0), the
// second starts at (0,1) and sweeps into quadrant II.
Ray ray_for(std::size_t v, std::size_t n) {
    if (v < n / 2) {
        Rational s = Rational(2 * v, n);
        return {{Rational(1) - s, s}, {Rational(1), Rational(1)}};
    }
    Rational s = Rational(Integer(2 * v) - Integer(n), Integer(n));
    return {{-s, Rational(1) - s}, {Rational(-1), Rational(1)}};
}

Rational norm_on_ray(const Ray& r, const Rational& t, int p) {
    return pnorm_pow(add(r.origin, scale(t, r.dir)), p);
}

// Bracket [lo, hi] with width <= tol around the sphere crossing of the ray;
// collapses to a point on an exact hit.
std::pair<Rational, Rational> bisect_sphere(const Ray& r, int p, const Rational& tol) {
    Rational lo(0), hi(1);
    if (norm_on_ray(r, lo, p) == 1) return {lo, lo};
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        Rational g = norm_on_ray(r, mid, p);
        if (g == 1) return {mid, mid};
        (g < 1 ? lo : hi) = mid;
    }
    return {lo, hi};
}

void check_sphere_args(std::size_t n, int p, const Rational& U) {
    if (n % 2 != 0) throw OddN();
    if (n < 4) throw Error("sphere_points: n must be at least 4");
    if (p < 2) throw Error("sphere_points: p must be >= 2");
    if (U <= 0) throw Error("sphere_points: U must be positive");
}

}  // namespace

std::vector<RatVec> sphere_points(std::size_t n, int p, const Rational& U) {
    check_sphere_args(n, p, U);
    const Rational step = U / 2;
    std::vector<RatVec> pts(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
        Ray r = ray_for(v, n);
        auto [lo, hi] = bisect_sphere(r, p, U / 8);
        Rational t = (lo + hi) / 2;
        RatVec pt = add(r.origin, scale(t, r.dir));
        for (auto& c : pt) c = round_to_grid(c, step);
        pts[v] = std::move(pt);
    }
    for (std::size_t v = 0; v < n; ++v) pts[n + v] = neg(pts[v]);
    return pts;
}

HPolytope polygon_hrep(const std::vector<RatVec>& points) {
    const std::size_t m = points.size();
    if (m < 3) throw NotInConvexPosition("polygon needs at least 3 vertices");
    auto cross = [](const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; };

    int orient = 0;
    for (std::size_t v = 0; v < m; ++v) {
        const RatVec& a = points[v];
        const RatVec& b = points[(v + 1) % m];
        const RatVec& c = points[(v + 2) % m];
        int s = sign(cross(sub(b, a), sub(c, b)));
        if (s == 0) throw NotInConvexPosition("collinear or repeated vertices");
        if (orient == 0) orient = s;
        if (s != orient) throw NotInConvexPosition("vertex order is not convex");
    }

    HPolytope P;
    P.dim = 2;
    P.rows.reserve(m);
    for (std::size_t v = 0; v < m; ++v) {
        const RatVec& a = points[v];
        const RatVec& b = points[(v + 1) % m];
        RatVec d = sub(b, a);
        HRow row;
        row.normal = orient > 0 ? RatVec{d[1], -d[0]} : RatVec{-d[1], d[0]};
        row.rhs = dot(row.normal, a);
        P.rows.push_back(canonical_row(row));
    }
    // Feasibility scan: every vertex satisfies every facet, tight exactly
    // at the two points that span it.
    for (std::size_t f = 0; f < m; ++f) {
        std::size_t tight = 0;
        for (std::size_t v = 0; v < m; ++v) {
            Rational lhs = dot(P.rows[f].normal, points[v]);
            if (lhs > P.rows[f].rhs) throw NotInConvexPosition("facet cut a vertex off");
            if (lhs == P.rows[f].rhs) ++tight;
        }
        if (tight != 2) throw NotInConvexPosition("facet not spanned by exactly two vertices");
    }
    return P;
}

namespace {

Rational pow2_rat(int e) {
    if (e >= 0) return Rational(Integer(1) << static_cast<unsigned>(e));
    return Rational(1, Integer(1) << static_cast<unsigned>(-e));
}

struct Construction {
    Rational U;
    std::vector<RatVec> pts;  // 2n
    std::vector<RatVec> qs;   // 2n
    Rational eps_def;         // 1 - max off-diagonal product
    Rational diag_excess;     // max(0, max ||p_v||_p^p - 1)
    Rational eps;             // eps_def - diag_excess, used in the pair rows
    Rational min_diag;        // min ||p_v||_p^p
    Rational yes, no;
    Rational eps_lb;          // 2^{p-1}/(p n^p)
};

Construction make_construction(std::size_t n, int p, std::size_t k) {
    Construction c;
    c.U = Rational(1, pow_int(Integer(n), static_cast<unsigned>(2 * p)) * Integer(k * k));
    c.pts = sphere_points(n, p, c.U);
    c.qs.resize(2 * n);
    for (std::size_t v = 0; v < 2 * n; ++v)
        c.qs[v] = {signed_pow(c.pts[v][0], static_cast<unsigned>(p - 1)),
                   signed_pow(c.pts[v][1], static_cast<unsigned>(p - 1))};

    bool first = true;
    Rational max_off;
    Rational max_diag, min_diag;
    for (std::size_t u = 0; u < 2 * n; ++u) {
        Rational diag = dot(c.qs[u], c.pts[u]);
        if (u == 0 || diag > max_diag) max_diag = diag;
        if (u == 0 || diag < min_diag) min_diag = diag;
        for (std::size_t v = 0; v < 2 * n; ++v) {
            if (u == v) continue;
            Rational val = dot(c.qs[u], c.pts[v]);
            if (first || val > max_off) {
                max_off = val;
                first = false;
            }
        }
    }
    c.eps_def = Rational(1) - max_off;
    c.diag_excess = max_diag > 1 ? Rational(max_diag - 1) : Rational(0);
    c.eps = c.eps_def - c.diag_excess;
    c.min_diag = min_diag;

    const auto pu = static_cast<unsigned>(p);
    Rational npow(pow_int(Integer(n), pu));
    c.yes = Rational(Integer(k)) * pow_int(Rational(1) - c.U, pu);
    c.no = Rational(Integer(k - 1)) * pow_int(Rational(1) + c.U, pu) + 1 -
           pow2_rat(p - 3) / (Rational(p) * npow);
    c.eps_lb = pow2_rat(p - 1) / (Rational(p) * npow);
    return c;
}

// Exact maximum of the p-norm power over the polygon clipped by all
// supporting cuts q_v^T x <= 1 - eps/2 (the "far from every vertex" region).
Rational far_region_max(const HPolytope& polygon, const std::vector<RatVec>& qs,
                        const Rational& eps, int p) {
    HPolytope R = polygon;
    const Rational rhs = Rational(1) - eps / 2;
    for (const auto& q : qs) R.rows.push_back(canonical_row({q, rhs}));
    Rational best(0);
    for (const auto& v : enumerate_vertices(R)) {
        Rational val = pnorm_pow(v, p);
        if (val > best) best = val;
    }
    return best;
}

bool certificates_hold(const Construction& c, std::size_t n, int p, std::size_t k) {
    (void)n;
    (void)k;
    if (!(c.no < c.yes)) return false;
    Rational lb = c.eps_lb - Rational(3 * p) * c.U;
    if (!(lb > 0) || !(c.eps >= lb)) return false;
    // Pair cuts must sever every forbidden combination...
    if (!(2 * c.min_diag > 2 - c.eps)) return false;
    // ...and the far arc must stay below the NO budget.
    Rational far = far_region_max(polygon_hrep(c.pts), c.qs, c.eps, p);
    if (!(far <= Rational(1) - pow2_rat(p - 3) /
                                  (Rational(p) * Rational(pow_int(Integer(n),
                                                                  static_cast<unsigned>(p))))))
        return false;
    return true;
}

}  // namespace

GadgetInstance build_gadget(const Graph& G, std::size_t k, int p) {
    if (k < 2) throw Error("build_gadget: k must be >= 2");
    if (p < 2) throw Error("build_gadget: p must be >= 2");

    std::size_t n = std::max<std::size_t>(G.n, 4);
    if (n % 2 != 0) ++n;

    Construction c;
    for (;; n += 2) {
        if (n > 256) throw Error("build_gadget: certificates failed up to n = 256");
        c = make_construction(n, p, k);
        if (certificates_hold(c, n, p, k)) break;
    }
    if (k > n) throw KTooLarge("build_gadget: k exceeds the padded vertex count");

    const std::size_t d = 2 * k;
    HPolytope polygon = polygon_hrep(c.pts);

    GadgetInstance inst;
    inst.p = p;
    inst.n_padded = n;
    inst.k = k;
    inst.U = c.U;
    inst.eps_bar = c.eps;
    inst.vertices_bar = c.pts;
    inst.normals_bar = c.qs;
    inst.yes_threshold = c.yes;
    inst.no_threshold = c.no;
    inst.polytope.dim = d;

    std::set<HRow> seen;
    auto push_row = [&](HRow row) {
        row = canonical_row(row);
        if (seen.insert(row).second) inst.polytope.rows.push_back(std::move(row));
    };

    for (std::size_t i = 0; i < k; ++i)
        for (const auto& facet : polygon.rows) {
            HRow row{RatVec(d, Rational(0)), facet.rhs};
            row.normal[2 * i] = facet.normal[0];
            row.normal[2 * i + 1] = facet.normal[1];
            push_row(std::move(row));
        }

    // Forbidden pairs: non-edges of the padded graph plus every repeat (v,v).
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const bool edge = u < G.n && v < G.n && G.adjacent(u, v);
            if (!edge) pairs.emplace_back(u, v);
        }
    for (std::size_t u = 0; u < n; ++u) pairs.emplace_back(u, u);

    const Rational bound = Rational(2) - c.eps;
    for (auto [u, v] : pairs)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j) continue;
                for (int su : {1, -1})
                    for (int sv : {1, -1}) {
                        HRow row{RatVec(d, Rational(0)), bound};
                        row.normal[2 * i] = Rational(su) * c.qs[u][0];
                        row.normal[2 * i + 1] = Rational(su) * c.qs[u][1];
                        row.normal[2 * j] += Rational(sv) * c.qs[v][0];
                        row.normal[2 * j + 1] += Rational(sv) * c.qs[v][1];
                        push_row(std::move(row));
                    }
            }
    return inst;
}

bool decide_clique_via_normmax(const GadgetInstance& inst, int dim_cap) {
    // The row set is invariant under swapping the k two-dimensional blocks;
    // the hints are re-verified inside exact_normmax before being used.
    SymmetryHints hints;
    for (std::size_t i = 0; i + 1 < inst.k; ++i) {
        std::vector<std::size_t> perm(2 * inst.k);
        for (std::size_t j = 0; j < 2 * inst.k; ++j) perm[j] = j;
        std::swap(perm[2 * i], perm[2 * i + 2]);
        std::swap(perm[2 * i + 1], perm[2 * i + 3]);
        hints.coordinate_perms.push_back(std::move(perm));
    }
    NormmaxResult r = exact_normmax(inst.polytope, inst.p, dim_cap,
                                    EnumStrategy::automatic, hints);
    if (r.value > inst.no_threshold && r.value < inst.yes_threshold)
        throw GapViolation("normmax value " + to_string(r.value) + " lies strictly between " +
                           to_string(inst.no_threshold) + " and " +
                           to_string(inst.yes_threshold));
    return r.value >= inst.yes_threshold;
}

std::size_t nearest_vertex_index(const RatVec& x_block,
                                 const std::vector<RatVec>& normals_bar) {
    std::size_t best = 0;
    Rational best_val;
    for (std::size_t v = 0; v < normals_bar.size(); ++v) {
        Rational val = dot(normals_bar[v], x_block);
        if (v == 0 || val > best_val) {
            best = v;
            best_val = val;
        }
    }
    return best;
}

bool clique_oracle(const Graph& G, std::size_t k) {
    if (G.n > 16) throw Error("clique_oracle: n must be <= 16");
    if (k == 0) return true;
    if (k > G.n) return false;
    std::vector<std::uint32_t> adj(G.n, 0);
    for (auto [u, v] : G.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    for (;;) {
        bool ok = true;
        for (std::size_t a = 0; a < k && ok; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (!((adj[comb[a]] >> comb[b]) & 1u)) {
                    ok = false;
                    break;
                }
        if (ok) return true;
        std::size_t i = k;
        bool done = true;
        while (i > 0) {
            --i;
            if (comb[i] + (k - i) < G.n) {
                ++comb[i];
                for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                done = false;
                break;
            }
        }
        if (done) return false;
    }
}

BoundsReport verify_gadget_bounds(std::size_t n, int p, std::size_t k) {
    Construction c = make_construction(n, p, k);
    BoundsReport rep;
    rep.n = n;
    rep.p = p;
    rep.k = k;
    rep.U = c.U;
    rep.eps_bar = c.eps;

    const auto pu = static_cast<unsigned>(p);
    const std::size_t two_n = 2 * n;

    {  // squared euclidean gaps between angular neighbors, cyclic
        Rational lo = Rational(8, Integer(n * n));
        Rational hi = Rational(16, Integer(n * n));
        Rational slack = Rational(16) * c.U / Rational(Integer(n)) + 4 * c.U * c.U;
        bool ok = true;
        Rational worst_lo, worst_hi;
        bool first = true;
        for (std::size_t v = 0; v < two_n; ++v) {
            Rational d2 = pnorm_pow(sub(c.pts[(v + 1) % two_n], c.pts[v]), 2);
            if (d2 < lo - slack || d2 > hi + slack) ok = false;
            if (first || d2 < worst_lo) worst_lo = d2;
            if (first || d2 > worst_hi) worst_hi = d2;
            first = false;
        }
        rep.checks.push_back({"neighbor_distance_sq_in_[8/n^2,16/n^2]_with_slack", ok,
                              "range [" + to_string(worst_lo) + ", " + to_string(worst_hi) +
                                  "], slack " + to_string(slack)});
    }
    {
        Rational lb = c.eps_lb - Rational(3 * p) * c.U;
        rep.checks.push_back({"eps_bar_lower_bound", c.eps >= lb && lb > 0,
                              "eps_bar " + to_string(c.eps) + " vs 2^(p-1)/(p n^p) - 3pU = " +
                                  to_string(lb)});
    }
    {
        bool ok = true;
        for (std::size_t v = 0; v < two_n && ok; ++v)
            ok = dot(c.qs[v], c.pts[v]) == pnorm_pow(c.pts[v], p);
        rep.checks.push_back({"dual_identity_q.p_equals_pnorm_pow", ok, ""});
    }
    {
        Rational lo = pow_int(Rational(1) - c.U, pu);
        Rational hi = pow_int(Rational(1) + c.U, pu);
        bool ok = true;
        for (std::size_t v = 0; v < two_n && ok; ++v) {
            Rational norm = pnorm_pow(c.pts[v], p);
            ok = norm >= lo && norm <= hi;
        }
        rep.checks.push_back({"rounded_norms_within_(1-U)^p_(1+U)^p", ok, ""});
    }
    {  // normal rounding, certified against high precision brackets
        bool ok = true;
        Rational budget = Rational(p - 1) * c.U;
        Rational worst(0);
        for (std::size_t v = 0; v < n; ++v) {
            Ray r = ray_for(v, n);
            auto [lo, hi] = bisect_sphere(r, p, c.U / 4096);
            Rational dist(0);
            for (int coord = 0; coord < 2; ++coord) {
                Rational a = r.origin[coord] + lo * r.dir[coord];
                Rational b = r.origin[coord] + hi * r.dir[coord];
                if (a > b) std::swap(a, b);
                Rational qa = signed_pow(a, pu - 1), qb = signed_pow(b, pu - 1);
                Rational da = abs_val(c.qs[v][coord] - qa);
                Rational db = abs_val(c.qs[v][coord] - qb);
                dist += da > db ? da : db;
            }
            if (dist > worst) worst = dist;
            if (dist > budget) ok = false;
        }
        rep.checks.push_back({"normal_rounding_l1_within_(p-1)U", ok,
                              "worst certified " + to_string(worst) + " vs " + to_string(budget)});
    }
    return rep;
}

std::string gadget_sidecar_json(const GadgetInstance& inst) {
    nlohmann::json j;
    j["n_padded"] = inst.n_padded;
    j["k"] = inst.k;
    j["p"] = inst.p;
    j["U"] = to_fraction_string(inst.U);
    j["eps_bar"] = to_fraction_string(inst.eps_bar);
    j["yes_threshold"] = to_fraction_string(inst.yes_threshold);
    j["no_threshold"] = to_fraction_string(inst.no_threshold);
    return j.dump(2);
}

}  // namespace normax
