#include "normax/linalg.hpp"

namespace normax {

std::optional<RatVec> solve_square(RatMat M, RatVec b) {
    const std::size_t n = b.size();
    // Gaussian elimination with partial (first nonzero) pivoting.
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            std::swap(M[piv], M[col]);
            std::swap(b[piv], b[col]);
        }
        const Rational inv = Rational(1) / M[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (M[r][col] == 0) continue;
            const Rational f = M[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
            b[r] -= f * b[col];
        }
    }
    RatVec x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= M[i][c] * x[c];
        x[i] = s / M[i][i];
    }
    return x;
}

std::size_t rank(RatMat M) {
    if (M.empty()) return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && M[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        const Rational inv = Rational(1) / M[r][col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (M[i][col] == 0) continue;
            const Rational f = M[i][col] * inv;
            for (std::size_t c = col; c < cols; ++c) M[i][c] -= f * M[r][c];
        }
        ++r;
    }
    return r;
}

std::optional<RatVec> nullspace_dir(RatMat M, std::size_t cols) {
    // Row-reduce, track pivot columns; exactly one free column expected.
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
    if (r + 1 != cols) return std::nullopt;
    std::size_t free_col = 0;
    {
        std::vector<bool> is_piv(cols, false);
        for (auto c : pivot_col) is_piv[c] = true;
        while (free_col < cols && is_piv[free_col]) ++free_col;
    }
    RatVec y(cols, Rational(0));
    y[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = -M[i][free_col];
    return y;
}

}  // namespace normax
