#include "normax/lp.hpp"

#include <cassert>

namespace normax {
namespace {

// Dense tableau simplex over Q. Variables are ordered
//   u_0..u_{d-1}, w_0..w_{d-1}, s_0..s_{n-1}, artificials,
// with x = u - w and one slack per row. Bland's rule: entering column is the
// lowest index with positive reduced cost; the leaving row is the minimum
// ratio with ties broken by the lowest basic-variable index, which is what
// makes Bland's termination argument go through.
struct Tableau {
    std::size_t m, ncols;
    std::vector<RatVec> T;
    RatVec rhs;
    std::vector<std::size_t> basis;
    RatVec obj;
    Rational objval;

    void price_out(const RatVec& cost) {
        obj = cost;
        objval = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const Rational cb = cost[basis[i]];
            if (cb == 0) continue;
            objval += cb * rhs[i];
            for (std::size_t j = 0; j < ncols; ++j)
                if (T[i][j] != 0) obj[j] -= cb * T[i][j];
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = Rational(1) / T[row][col];
        if (inv != 1)
            for (std::size_t j = 0; j < ncols; ++j) T[row][j] *= inv;
        rhs[row] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || T[i][col] == 0) continue;
            const Rational f = T[i][col];
            for (std::size_t j = 0; j < ncols; ++j)
                if (T[row][j] != 0) T[i][j] -= f * T[row][j];
            rhs[i] -= f * rhs[row];
        }
        if (obj[col] != 0) {
            const Rational f = obj[col];
            for (std::size_t j = 0; j < ncols; ++j)
                if (T[row][j] != 0) obj[j] -= f * T[row][j];
            objval += f * rhs[row];
        }
        basis[row] = col;
    }

    // Returns false when unbounded.
    bool run(std::size_t usable_cols) {
        for (;;) {
            std::size_t enter = usable_cols;
            for (std::size_t j = 0; j < usable_cols; ++j)
                if (obj[j] > 0) { enter = j; break; }
            if (enter == usable_cols) return true;

            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (T[i][enter] <= 0) continue;
                const Rational ratio = rhs[i] / T[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LPResult solve_lp_max(const RatVec& c, const HPolytope& P) {
    assert(c.size() == P.dim);
    const std::size_t d = P.dim, n = P.rows.size();

    std::vector<std::size_t> art_rows;
    for (std::size_t i = 0; i < n; ++i)
        if (P.rows[i].rhs < 0) art_rows.push_back(i);

    Tableau t;
    t.m = n;
    t.ncols = 2 * d + n + art_rows.size();
    t.T.assign(n, RatVec(t.ncols, Rational(0)));
    t.rhs.resize(n);
    t.basis.resize(n);

    std::size_t next_art = 2 * d + n;
    for (std::size_t i = 0; i < n; ++i) {
        const bool flip = P.rows[i].rhs < 0;
        const Rational sgn = flip ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < d; ++j) {
            t.T[i][j] = sgn * P.rows[i].normal[j];
            t.T[i][d + j] = -t.T[i][j];
        }
        t.T[i][2 * d + i] = sgn;
        t.rhs[i] = sgn * P.rows[i].rhs;
        if (flip) {
            t.T[i][next_art] = 1;
            t.basis[i] = next_art++;
        } else {
            t.basis[i] = 2 * d + i;
        }
    }

    if (!art_rows.empty()) {
        RatVec phase1(t.ncols, Rational(0));
        for (std::size_t j = 2 * d + n; j < t.ncols; ++j) phase1[j] = -1;
        t.price_out(phase1);
        t.run(t.ncols);  // phase-1 objective is bounded above by 0
        if (t.objval < 0) return {LPStatus::infeasible, Rational(0), {}};
        // Remove artificials from the basis; an all-zero row is redundant.
        for (std::size_t i = 0; i < t.m; ++i) {
            if (t.basis[i] < 2 * d + n) continue;
            std::size_t col = 2 * d + n;
            for (std::size_t j = 0; j < 2 * d + n; ++j)
                if (t.T[i][j] != 0) { col = j; break; }
            if (col < 2 * d + n) {
                t.pivot(i, col);
            } else {
                t.T.erase(t.T.begin() + i);
                t.rhs.erase(t.rhs.begin() + i);
                t.basis.erase(t.basis.begin() + i);
                --t.m;
                --i;
            }
        }
    }

    RatVec cost(t.ncols, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
        cost[j] = c[j];
        cost[d + j] = -c[j];
    }
    t.price_out(cost);
    if (!t.run(2 * d + n)) return {LPStatus::unbounded, Rational(0), {}};

    RatVec x(d, Rational(0));
    for (std::size_t i = 0; i < t.m; ++i) {
        if (t.basis[i] < d)
            x[t.basis[i]] += t.rhs[i];
        else if (t.basis[i] < 2 * d)
            x[t.basis[i] - d] -= t.rhs[i];
    }
    return {LPStatus::optimal, t.objval, x};
}

bool is_bounded(const HPolytope& P) {
    for (std::size_t i = 0; i < P.dim; ++i) {
        for (int s : {1, -1}) {
            LPResult r = solve_lp_max(unit_vec(P.dim, i, Rational(s)), P);
            if (r.status == LPStatus::unbounded) return false;
            if (r.status == LPStatus::infeasible) return true;  // empty set is bounded
        }
    }
    return true;
}

std::optional<RatVec> feasible_point(const HPolytope& P) {
    bool origin_ok = true;
    for (const auto& r : P.rows)
        if (r.rhs < 0) { origin_ok = false; break; }
    if (origin_ok) return RatVec(P.dim, Rational(0));
    LPResult r = solve_lp_max(RatVec(P.dim, Rational(0)), P);
    if (r.status != LPStatus::optimal) return std::nullopt;
    return r.point;
}

}  // namespace normax
