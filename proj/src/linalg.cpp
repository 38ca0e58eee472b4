#include "isoring/linalg.hpp"

#include <algorithm>

namespace isoring {

QMatrix q_identity(int n) {
    QMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ZMatrix z_identity(int n) {
    ZMatrix m(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMatrix r(n, std::vector<Rat>(m, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

ZMatrix z_mul(const ZMatrix& a, const ZMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ZMatrix r(n, std::vector<Int>(m, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

std::vector<Rat> q_apply(const QMatrix& a, const std::vector<Rat>& v) {
    std::vector<Rat> r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

bool q_equal(const QMatrix& a, const QMatrix& b) { return a == b; }

QMatrix z_to_q(const ZMatrix& a) {
    QMatrix r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (const auto& v : a[i]) r[i].push_back(Rat(v));
    return r;
}

std::optional<ZMatrix> q_to_z(const QMatrix& a) {
    ZMatrix r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (const auto& v : a[i]) {
            if (v.get_den() != 1) return std::nullopt;
            r[i].push_back(v.get_num());
        }
    return r;
}

std::vector<int> q_rref(QMatrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Rat inv = Rat(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int q_rank(QMatrix a) { return static_cast<int>(q_rref(a).size()); }

std::vector<std::vector<Rat>> q_nullspace(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix m = a;
    size_t cols = m[0].size();
    std::vector<int> pivots = q_rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_c] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -m[pi][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> q_solve(const QMatrix& a, const std::vector<Rat>& b) {
    if (a.empty()) {
        for (const auto& v : b)
            if (v != 0) return std::nullopt;
        return std::vector<Rat>{};
    }
    size_t rows = a.size(), cols = a[0].size();
    QMatrix m(rows, std::vector<Rat>(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    std::vector<int> pivots = q_rref(m);
    for (int p : pivots)
        if (p == static_cast<int>(cols)) return std::nullopt;  // inconsistent
    std::vector<Rat> x(cols, Rat(0));
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = m[pi][cols];
    return x;
}

std::optional<QMatrix> q_inverse(const QMatrix& a) {
    size_t n = a.size();
    QMatrix m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    std::vector<int> pivots = q_rref(m);
    if (pivots.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (pivots[i] != static_cast<int>(i)) return std::nullopt;
    QMatrix inv(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

Rat q_det(QMatrix a) {
    size_t n = a.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Rat inv = Rat(1) / a[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] * inv;
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

ZMatrix z_column_hnf(const ZMatrix& a) {
    ZMatrix h = a;
    if (h.empty()) return h;
    size_t rows = h.size(), cols = h[0].size();
    size_t pivot_col = 0;
    for (size_t r = 0; r < rows && pivot_col < cols; ++r) {
        // Reduce columns pivot_col.. so that row r has a single nonneg pivot.
        while (true) {
            size_t nonzero = cols;
            for (size_t c = pivot_col; c < cols; ++c)
                if (h[r][c] != 0) {
                    if (nonzero == cols || abs(h[r][c]) < abs(h[r][nonzero])) nonzero = c;
                }
            if (nonzero == cols) break;  // row r is zero beyond pivot_col
            if (nonzero != pivot_col)
                for (size_t i = 0; i < rows; ++i) std::swap(h[i][nonzero], h[i][pivot_col]);
            bool reduced = true;
            for (size_t c = pivot_col + 1; c < cols; ++c) {
                if (h[r][c] == 0) continue;
                Int q = h[r][c] / h[r][pivot_col];
                // round toward making remainder small
                for (size_t i = 0; i < rows; ++i) h[i][c] -= q * h[i][pivot_col];
                if (h[r][c] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (h[r][pivot_col] != 0) {
            if (h[r][pivot_col] < 0)
                for (size_t i = 0; i < rows; ++i) h[i][pivot_col] = -h[i][pivot_col];
            // Reduce earlier columns against this pivot for canonicity.
            for (size_t c = 0; c < pivot_col; ++c) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h[r][c].get_mpz_t(), h[r][pivot_col].get_mpz_t());
                if (q != 0)
                    for (size_t i = 0; i < rows; ++i) h[i][c] -= q * h[i][pivot_col];
            }
            ++pivot_col;
        }
    }
    return h;
}

std::vector<Int> z_snf_diagonal(ZMatrix a) {
    std::vector<Int> result;
    if (a.empty() || a[0].empty()) return result;
    size_t rows = a.size(), cols = a[0].size();
    size_t t = 0;
    while (t < rows && t < cols) {
        // Find a nonzero pivot with smallest absolute value.
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;  // all zero
        std::swap(a[t], a[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
        }
        // Ensure divisibility of later entries by a[t][t].
        bool redo = false;
        for (size_t i = t + 1; i < rows && !redo; ++i)
            for (size_t j = t + 1; j < cols && !redo; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                    redo = true;
                }
        if (redo) continue;
        if (a[t][t] < 0) a[t][t] = -a[t][t];
        result.push_back(a[t][t]);
        ++t;
    }
    return result;
}

std::optional<std::vector<Int>> z_lattice_solve(const ZMatrix& a, const std::vector<Int>& b) {
    // Solve a x = b over Z. Augment columns with transform bookkeeping:
    // maintain U with cols(a * U) = hnf; then express b in hnf columns greedily.
    if (a.empty()) return std::vector<Int>{};
    size_t rows = a.size(), cols = a[0].size();
    // Track transforms: work on [a; I] columns.
    ZMatrix work(rows + cols, std::vector<Int>(cols, Int(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) work[i][j] = a[i][j];
    for (size_t j = 0; j < cols; ++j) work[rows + j][j] = 1;

    // Column HNF on the top block, applying ops to the whole column.
    size_t pivot_col = 0;
    for (size_t r = 0; r < rows && pivot_col < cols; ++r) {
        while (true) {
            size_t best = cols;
            for (size_t c = pivot_col; c < cols; ++c)
                if (work[r][c] != 0 && (best == cols || abs(work[r][c]) < abs(work[r][best])))
                    best = c;
            if (best == cols) break;
            if (best != pivot_col)
                for (size_t i = 0; i < rows + cols; ++i)
                    std::swap(work[i][best], work[i][pivot_col]);
            bool reduced = true;
            for (size_t c = pivot_col + 1; c < cols; ++c) {
                if (work[r][c] == 0) continue;
                Int q = work[r][c] / work[r][pivot_col];
                for (size_t i = 0; i < rows + cols; ++i)
                    work[i][c] -= q * work[i][pivot_col];
                if (work[r][c] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (work[r][pivot_col] != 0) {
            if (work[r][pivot_col] < 0)
                for (size_t i = 0; i < rows + cols; ++i) work[i][pivot_col] = -work[i][pivot_col];
            ++pivot_col;
        }
    }
    // Now solve: express b as integer combination of the HNF columns [0, pivot_col).
    std::vector<Int> residual = b;
    std::vector<Int> coeffs(cols, Int(0));
    for (size_t c = 0; c < pivot_col; ++c) {
        // Find the top nonzero row of column c.
        size_t lead = rows;
        for (size_t i = 0; i < rows; ++i)
            if (work[i][c] != 0) {
                lead = i;
                break;
            }
        if (lead == rows) continue;
        if (residual[lead] % work[lead][c] != 0) {
            // Leading entry cannot be matched; if all earlier rows are zero, fail.
            return std::nullopt;
        }
        Int q = residual[lead] / work[lead][c];
        coeffs[c] = q;
        for (size_t i = 0; i < rows; ++i) residual[i] -= q * work[i][c];
    }
    for (const auto& v : residual)
        if (v != 0) return std::nullopt;
    // x = U * coeffs, where U rows live in work[rows..].
    std::vector<Int> x(cols, Int(0));
    for (size_t j = 0; j < cols; ++j)
        for (size_t c = 0; c < cols; ++c) x[j] += work[rows + j][c] * coeffs[c];
    return x;
}

bool z_lattice_member(const ZMatrix& a, const std::vector<Int>& b) {
    return z_lattice_solve(a, b).has_value();
}

std::optional<QMatrix> z_inverse_q(const ZMatrix& a) { return q_inverse(z_to_q(a)); }

std::vector<std::vector<Int>> z_kernel_basis(const ZMatrix& a) {
    std::vector<std::vector<Int>> basis;
    if (a.empty() || a[0].empty()) return basis;
    size_t rows = a.size(), cols = a[0].size();
    // Column-reduce [a; I]; kernel basis = transform columns under zero columns of a.
    ZMatrix work(rows + cols, std::vector<Int>(cols, Int(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) work[i][j] = a[i][j];
    for (size_t j = 0; j < cols; ++j) work[rows + j][j] = 1;

    size_t pivot_col = 0;
    for (size_t r = 0; r < rows && pivot_col < cols; ++r) {
        while (true) {
            size_t best = cols;
            for (size_t c = pivot_col; c < cols; ++c)
                if (work[r][c] != 0 && (best == cols || abs(work[r][c]) < abs(work[r][best])))
                    best = c;
            if (best == cols) break;
            if (best != pivot_col)
                for (size_t i = 0; i < rows + cols; ++i)
                    std::swap(work[i][best], work[i][pivot_col]);
            bool reduced = true;
            for (size_t c = pivot_col + 1; c < cols; ++c) {
                if (work[r][c] == 0) continue;
                Int q = work[r][c] / work[r][pivot_col];
                for (size_t i = 0; i < rows + cols; ++i)
                    work[i][c] -= q * work[i][pivot_col];
                if (work[r][c] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (work[r][pivot_col] != 0) ++pivot_col;
    }
    for (size_t c = pivot_col; c < cols; ++c) {
        bool zero = true;
        for (size_t i = 0; i < rows && zero; ++i)
            if (work[i][c] != 0) zero = false;
        if (!zero) continue;
        std::vector<Int> v(cols);
        for (size_t j = 0; j < cols; ++j) v[j] = work[rows + j][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

Int z_det(ZMatrix a) {
    Rat d = q_det(z_to_q(a));
    return d.get_num();  // determinant of integer matrix is integral
}

}  // namespace isoring
