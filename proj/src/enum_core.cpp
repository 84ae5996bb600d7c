#include "enum_core.hpp"

#include <deque>
#include <set>

namespace normax::detail {
namespace {

RatMat tight_matrix(const std::vector<IntRow>& rows, const std::vector<std::size_t>& idx,
                    std::size_t dim) {
    RatMat M;
    M.reserve(idx.size());
    for (auto i : idx) {
        RatVec r(dim);
        for (std::size_t j = 0; j < dim; ++j) r[j] = Rational(rows[i].a[j]);
        M.push_back(std::move(r));
    }
    return M;
}

// Any nonzero kernel vector of M (cols columns), or nullopt when M has full
// column rank. Gauss-Jordan, first free column.
std::optional<RatVec> any_kernel_vector(RatMat M, std::size_t cols) {
    const std::size_t rows = M.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && M[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        const Rational inv = Rational(1) / M[r][col];
        for (std::size_t c = col; c < cols; ++c) M[r][c] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][col] == 0) continue;
            const Rational f = M[i][col];
            for (std::size_t c = col; c < cols; ++c) M[i][c] -= f * M[r][c];
        }
        pivot_col.push_back(col);
        ++r;
    }
    if (r == cols) return std::nullopt;
    std::size_t free_col = 0;
    std::vector<bool> is_piv(cols, false);
    for (auto c : pivot_col) is_piv[c] = true;
    while (free_col < cols && is_piv[free_col]) ++free_col;
    RatVec y(cols, Rational(0));
    y[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = -M[i][free_col];
    return y;
}

// Shoots x + t*y, t >= 0. Returns the blocking (slack, a.y) pair minimizing
// slack/(delta * a.y), or nullopt when the ray never blocks.
struct Hit {
    Integer slack, step;  // lambda = slack / (delta * step)
};
std::optional<Hit> ray_shoot(const std::vector<IntRow>& rows, const std::vector<Integer>& slacks,
                             const IntVec& y) {
    thread_local Integer t, lhs, rhs;
    std::optional<Hit> best;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        row_dot_into(t, rows[i], y);
        if (t <= 0) continue;
        if (best) {
            mul_into(lhs, slacks[i], best->step);
            mul_into(rhs, best->slack, t);
            if (lhs >= rhs) continue;
        }
        best = Hit{slacks[i], t};
    }
    return best;
}

VertexRep step_to(const VertexRep& v, const IntVec& y, const Hit& hit) {
    VertexRep w;
    w.nu.resize(v.nu.size());
    for (std::size_t i = 0; i < v.nu.size(); ++i) w.nu[i] = v.nu[i] * hit.step + hit.slack * y[i];
    w.delta = v.delta * hit.step;
    normalize(w);
    return w;
}

Integer int_det(std::vector<IntVec>& M) {
    // Bareiss fraction-free elimination, in place.
    thread_local Integer t1, t2;
    const std::size_t n = M.size();
    if (n == 0) return 1;
    Integer prev(1);
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && M[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(M[piv], M[k]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mul_into(t1, M[k][k], M[i][j]);
                mul_into(t2, M[i][k], M[k][j]);
                t1 -= t2;
                mpz_divexact(M[i][j].backend().data(), t1.backend().data(),
                             prev.backend().data());
            }
        prev = M[k][k];
    }
    Integer d = M[n - 1][n - 1];
    return sgn < 0 ? Integer(-d) : d;
}

// Kernel direction of the (dim-1) x dim system spanned by `sel` via signed
// maximal minors, primitive; empty when the rank is below dim-1.
IntVec cramer_kernel(const std::vector<const IntRow*>& sel, std::size_t dim) {
    IntVec y(dim);
    std::vector<IntVec> minor(dim - 1, IntVec(dim - 1));
    bool nonzero = false;
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t i = 0; i + 1 < dim; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < dim; ++j) {
                if (j == c) continue;
                minor[i][jj++] = sel[i]->a[j];
            }
        }
        Integer d = int_det(minor);
        if (c % 2 == 1) d = -d;
        nonzero = nonzero || d != 0;
        y[c] = std::move(d);
    }
    if (!nonzero) return {};
    Integer g(0);
    for (const auto& x : y) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& x : y) x /= g;
    return y;
}

// At a simple vertex (exactly d tight, nonsingular rows) the edge
// directions are the columns of -sign(det) * A^{-1}, i.e. signed cofactor
// rows: relaxing tight row r moves along y with A y = -|det| e_r. Returns
// one primitive integer direction per tight row, or empty when singular.
std::vector<IntVec> simple_vertex_rays(const std::vector<IntRow>& rows,
                                       const std::vector<std::size_t>& tight, std::size_t dim) {
    std::vector<IntVec> A(dim, IntVec(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) A[i][j] = rows[tight[i]].a[j];
    Integer det;
    {
        std::vector<IntVec> scratch = A;
        det = int_det(scratch);
    }
    if (det == 0) return {};
    const int flip = det > 0 ? -1 : 1;

    std::vector<IntVec> rays(dim, IntVec(dim));
    std::vector<IntVec> minor(dim - 1, IntVec(dim - 1));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            for (std::size_t i = 0, ii = 0; i < dim; ++i) {
                if (i == r) continue;
                for (std::size_t j = 0, jj = 0; j < dim; ++j) {
                    if (j == c) continue;
                    minor[ii][jj] = A[i][j];
                    ++jj;
                }
                ++ii;
            }
            Integer cof = int_det(minor);
            if ((r + c) % 2 == 1) cof = -cof;
            rays[r][c] = flip > 0 ? cof : Integer(-cof);
        }
        Integer g(0);
        for (const auto& x : rays[r]) {
            g = gcd(g, x);
            if (g == 1) break;
        }
        if (g > 1)
            for (auto& x : rays[r]) x /= g;
    }
    return rays;
}

}  // namespace

std::vector<IntVec> orbit_images(const IntVec& nu, const SymmetrySpec& spec) {
    std::set<IntVec> seen{nu};
    std::vector<IntVec> frontier{nu};
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& x : frontier) {
            auto try_add = [&](IntVec img) {
                if (seen.insert(img).second) next.push_back(std::move(img));
            };
            if (spec.negation) {
                IntVec m = x;
                for (auto& c : m) c = -c;
                try_add(std::move(m));
            }
            for (const auto& p : spec.perms) {
                IntVec m(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) m[i] = x[p[i]];
                try_add(std::move(m));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::function<void(VertexRep&)> make_canonicalizer(const SymmetrySpec& spec) {
    if (spec.trivial()) return nullptr;
    return [spec](VertexRep& v) {
        auto images = orbit_images(v.nu, spec);
        v.nu = std::move(images.back());  // set iteration is ordered, back is lex-max
    };
}

VertexRep crawl_to_vertex(const std::vector<IntRow>& rows, std::size_t dim, const RatVec& start,
                          const RatVec& c) {
    VertexRep v = from_rational(start);
    std::vector<Integer> slacks;
    for (;;) {
        compute_slacks(rows, v, slacks);
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (slacks[i] == 0) tight.push_back(i);
        auto ker = any_kernel_vector(tight_matrix(rows, tight, dim), dim);
        if (!ker) return v;

        IntVec y = primitive(*ker);
        // Prefer the improving side of the kernel line when c says so.
        Rational dir(0);
        for (std::size_t j = 0; j < dim; ++j) dir += c[j] * Rational(y[j]);
        if (dir < 0)
            for (auto& x : y) x = -x;

        auto hit = ray_shoot(rows, slacks, y);
        if (!hit) {
            if (dir != 0) throw UnboundedPolytope();
            for (auto& x : y) x = -x;
            hit = ray_shoot(rows, slacks, y);
            if (!hit) throw UnboundedPolytope();
        }
        v = step_to(v, y, *hit);
    }
}

TraversalResult traverse_vertices(const std::vector<IntRow>& rows, std::size_t dim,
                                  const VertexRep& start,
                                  const std::function<void(VertexRep&)>& canonicalize) {
    std::set<VertexRep> seen;
    std::deque<VertexRep> queue;
    {
        VertexRep s = start;
        if (canonicalize) canonicalize(s);
        seen.insert(s);
        queue.push_back(std::move(s));
    }

    std::vector<Integer> slacks;
    std::vector<Integer> t_tight;
    TraversalResult out;
    while (!queue.empty()) {
        VertexRep v = std::move(queue.front());
        queue.pop_front();
        out.reps.push_back(v);

        compute_slacks(rows, v, slacks);
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (slacks[i] == 0) tight.push_back(i);

        if (tight.size() == dim) {
            // Simple vertex: all d edge directions from one cofactor matrix,
            // no cone test needed.
            auto rays = simple_vertex_rays(rows, tight, dim);
            if (!rays.empty()) {
                for (const auto& y : rays) {
                    auto hit = ray_shoot(rows, slacks, y);
                    if (!hit) throw UnboundedPolytope();
                    VertexRep w = step_to(v, y, *hit);
                    if (canonicalize) canonicalize(w);
                    if (seen.insert(w).second) queue.push_back(std::move(w));
                }
                continue;
            }
        }

        // Degenerate vertex: kernel of each (dim-1)-subset of the tight rows
        // with rank dim-1, filtered by the tangent-cone test a_i.y <= 0.
        std::set<IntVec> done;
        const std::size_t k = dim - 1;
        if (tight.size() < k) continue;  // dim 0 polytope
        std::vector<std::size_t> comb(k);
        for (std::size_t i = 0; i < k; ++i) comb[i] = i;
        std::vector<const IntRow*> sel(k);
        for (;;) {
            for (std::size_t i = 0; i < k; ++i) sel[i] = &rows[tight[comb[i]]];
            IntVec y = k == 0 ? IntVec{Integer(1)} : cramer_kernel(sel, dim);
            if (!y.empty()) {
                for (int s = 0; s < 2; ++s) {
                    if (s == 1)
                        for (auto& x : y) x = -x;
                    bool in_cone = true;
                    for (auto i : tight)
                        if (row_dot(rows[i], y) > 0) { in_cone = false; break; }
                    if (!in_cone) continue;
                    if (!done.insert(y).second) continue;
                    auto hit = ray_shoot(rows, slacks, y);
                    if (!hit) throw UnboundedPolytope();
                    VertexRep w = step_to(v, y, *hit);
                    if (canonicalize) canonicalize(w);
                    if (seen.insert(w).second) queue.push_back(std::move(w));
                }
            }
            // next combination
            std::size_t i = k;
            while (i > 0) {
                --i;
                if (comb[i] + (k - i) < tight.size()) {
                    ++comb[i];
                    for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                    break;
                }
                if (i == 0) { i = k + 1; break; }
            }
            if (i == k + 1 || k == 0) break;
        }
    }
    return out;
}

}  // namespace normax::detail
