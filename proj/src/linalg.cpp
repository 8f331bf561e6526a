#include "weylk3/linalg.hpp"

namespace weylk3 {

Int bareiss_det(Mat<Int> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t sel = k + 1;
            while (sel < n && m[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev;  // exact by Bareiss
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

SmithResult smith_normal_form(Mat<Int> m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    SmithResult res;
    res.U = mat_identity<Int>(rows);
    res.V = mat_identity<Int>(cols);
    auto row_op = [&](size_t i, size_t j, const Int& f) {  // row_i -= f*row_j
        for (size_t c = 0; c < cols; ++c) m[i][c] -= f * m[j][c];
        for (size_t c = 0; c < rows; ++c) res.U[i][c] -= f * res.U[j][c];
    };
    auto col_op = [&](size_t i, size_t j, const Int& f) {  // col_i -= f*col_j
        for (size_t r = 0; r < rows; ++r) m[r][i] -= f * m[r][j];
        for (size_t r = 0; r < cols; ++r) res.V[r][i] -= f * res.V[r][j];
    };
    auto row_swap = [&](size_t i, size_t j) {
        std::swap(m[i], m[j]);
        std::swap(res.U[i], res.U[j]);
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
        for (size_t r = 0; r < cols; ++r) std::swap(res.V[r][i], res.V[r][j]);
    };

    size_t t = 0;
    for (; t < rows && t < cols; ++t) {
        // find a nonzero pivot
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < rows && !found; ++i)
            for (size_t j = t; j < cols && !found; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                row_op(i, t, q);
                if (m[i][t] != 0) {
                    row_swap(t, i);
                    changed = true;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                col_op(j, t, q);
                if (m[t][j] != 0) {
                    col_swap(t, j);
                    changed = true;
                }
            }
            if (!changed) {
                // ensure pivot divides the remaining block
                for (size_t i = t + 1; i < rows && !changed; ++i)
                    for (size_t j = t + 1; j < cols && !changed; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            // add row i to row t, restart
                            for (size_t c = 0; c < cols; ++c) m[t][c] += m[i][c];
                            for (size_t c = 0; c < rows; ++c) res.U[t][c] += res.U[i][c];
                            changed = true;
                        }
            }
        }
        if (m[t][t] < 0) {
            for (size_t c = 0; c < cols; ++c) m[t][c] = -m[t][c];
            for (size_t c = 0; c < rows; ++c) res.U[t][c] = -res.U[t][c];
        }
    }
    res.rank = (int)t;
    res.d.clear();
    for (size_t i = 0; i < std::min(rows, cols); ++i) res.d.push_back(m[i][i]);
    return res;
}

}  // namespace weylk3
