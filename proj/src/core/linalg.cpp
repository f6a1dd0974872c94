#include "core/linalg.hpp"

#include <algorithm>

namespace domcert {

RatMat rat_identity(int n) {
    RatMat out(size_t(n), RatVec(size_t(n), Rat(0)));
    for (int i = 0; i < n; ++i) out[size_t(i)][size_t(i)] = 1;
    return out;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
    RatVec out(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
        for (size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0 && x[j] != 0) out[i] += a[i][j] * x[j];
    }
    return out;
}

namespace {

// Row echelon reduction; returns pivot columns.  Operates on a and, when
// given, applies the same row operations to rhs.
std::vector<int> echelon(RatMat& a, RatVec* rhs) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        Rat inv = a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] /= inv;
        if (rhs) (*rhs)[r] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (rhs) (*rhs)[i] -= f * (*rhs)[r];
        }
        pivots.push_back(int(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int matrix_rank(RatMat a) { return int(echelon(a, nullptr).size()); }

std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
    size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("solve_linear: shape mismatch");
    size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivots = echelon(a, &b);
    for (size_t i = pivots.size(); i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[size_t(pivots[r])] = b[r];
    return x;
}

std::optional<RatMat> invert(RatMat a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("invert: matrix not square");
    RatMat aug = a;
    RatMat inv = rat_identity(int(n));
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(aug[p], aug[c]);
        std::swap(inv[p], inv[c]);
        Rat d = aug[c][c];
        for (size_t j = 0; j < n; ++j) {
            aug[c][j] /= d;
            inv[c][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (size_t j = 0; j < n; ++j) {
                aug[i][j] -= f * aug[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

RatVec nullspace_vector(RatMat a) {
    size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<int> pivots = echelon(a, nullptr);
    if (pivots.size() >= cols) throw std::invalid_argument("nullspace_vector: trivial nullspace");
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[size_t(c)] = true;
    size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
    RatVec x(cols, Rat(0));
    x[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) x[size_t(pivots[r])] = -a[r][free_col];
    return x;
}

bool nonneg_combination_exists(const RatMat& m, const RatVec& target) {
    size_t rows = m.size();
    if (target.size() != rows) throw std::invalid_argument("nonneg_combination_exists: shape mismatch");
    size_t vars = rows ? m[0].size() : 0;
    size_t width = vars + rows + 1;  // original, artificial, rhs
    RatMat t(rows, RatVec(width, Rat(0)));
    for (size_t i = 0; i < rows; ++i) {
        bool flip = target[i] < 0;
        for (size_t j = 0; j < vars; ++j) t[i][j] = flip ? -m[i][j] : m[i][j];
        t[i][vars + i] = 1;
        t[i][width - 1] = flip ? -target[i] : target[i];
    }
    RatVec obj(width, Rat(0));  // objective expressed in nonbasic variables
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < width; ++j)
            if (j < vars || j == width - 1) obj[j] += t[i][j];
    std::vector<size_t> basis(rows);
    for (size_t i = 0; i < rows; ++i) basis[i] = vars + i;

    while (true) {
        size_t enter = width - 1;
        for (size_t j = 0; j < vars + rows; ++j) {
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == width - 1) break;
        size_t leave = rows;
        Rat best = 0;
        for (size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][width - 1] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) throw std::logic_error("nonneg_combination_exists: unbounded phase one");
        Rat d = t[leave][enter];
        for (size_t j = 0; j < width; ++j) t[leave][j] /= d;
        for (size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        Rat f = obj[enter];
        if (f != 0)
            for (size_t j = 0; j < width; ++j) obj[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    return obj[width - 1] == 0;
}

IntMat column_hermite(IntMat w) {
    size_t n = w.size();
    for (const auto& row : w)
        if (row.size() != n) throw std::invalid_argument("column_hermite: matrix not square");
    auto col_sub = [&](size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < n; ++i) w[i][dst] -= q * w[i][src];
    };
    auto col_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < n; ++i) std::swap(w[i][a], w[i][b]);
    };
    for (size_t i = 0; i < n; ++i) {
        while (true) {
            size_t best = n;
            for (size_t j = i; j < n; ++j) {
                if (w[i][j] == 0) continue;
                if (best == n || boost::multiprecision::abs(w[i][j]) < boost::multiprecision::abs(w[i][best])) best = j;
            }
            if (best == n) throw std::invalid_argument("column_hermite: singular matrix");
            if (best != i) col_swap(i, best);
            bool clean = true;
            for (size_t j = i + 1; j < n; ++j) {
                if (w[i][j] == 0) continue;
                Int q = w[i][j] / w[i][i];
                col_sub(j, i, q);
                if (w[i][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (w[i][i] < 0)
            for (size_t r = 0; r < n; ++r) w[r][i] = -w[r][i];
    }
    return w;
}

}  // namespace domcert
