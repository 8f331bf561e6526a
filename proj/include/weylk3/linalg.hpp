#pragma once

#include "weylk3/numeric.hpp"
#include "weylk3/unipoly.hpp"

#include <array>
#include <cassert>
#include <vector>

namespace weylk3 {

template <class K>
using Mat = std::vector<std::vector<K>>;

template <class K>
Mat<K> mat_identity(size_t n) {
    Mat<K> I(n, std::vector<K>(n, K(0)));
    for (size_t i = 0; i < n; ++i) I[i][i] = K(1);
    return I;
}

template <class K>
Mat<K> mat_mul(const Mat<K>& a, const Mat<K>& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat<K> r(n, std::vector<K>(m, K(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == K(0)) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
        }
    return r;
}

template <class K>
std::vector<K> mat_apply(const Mat<K>& a, const std::vector<K>& v) {
    std::vector<K> r(a.size(), K(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] = r[i] + a[i][j] * v[j];
    return r;
}

// row echelon reduction in place; returns pivot columns
template <class K>
std::vector<int> rref(Mat<K>& m) {
    std::vector<int> pivots;
    size_t rows = m.size();
    if (rows == 0) return pivots;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == K(0)) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        K inv = K(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == K(0)) continue;
            K f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    return pivots;
}

template <class K>
int mat_rank(Mat<K> m) {
    return (int)rref(m).size();
}

// basis of the right kernel
template <class K>
Mat<K> kernel_basis(Mat<K> m) {
    size_t cols = m.empty() ? 0 : m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    Mat<K> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<K> v(cols, K(0));
        v[free_c] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            // pivot row r has leading 1 at pivots[r]
            v[pivots[r]] = K(0) - m[r][free_c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// solve m x = b; returns false if inconsistent (m square or overdetermined)
template <class K>
bool solve_linear(Mat<K> m, std::vector<K> b, std::vector<K>& x) {
    size_t rows = m.size(), cols = m[0].size();
    for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
    auto pivots = rref(m);
    x.assign(cols, K(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == (int)cols) return false;  // pivot in the rhs column
        x[pivots[r]] = m[r][cols];
    }
    // verify (handles overdetermined systems)
    for (size_t i = 0; i < rows; ++i) {
        K s(0);
        for (size_t j = 0; j < cols; ++j) s = s + m[i][j] * x[j];
        // rows of the reduced matrix: s should equal rhs entry
        if (!(s == m[i][cols])) return false;
    }
    return true;
}

template <class K>
K mat_det(Mat<K> m) {
    size_t n = m.size();
    K det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && m[sel][c] == K(0)) ++sel;
        if (sel == n) return K(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = K(0) - det;
        }
        det = det * m[c][c];
        K inv = K(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == K(0)) continue;
            K f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

// characteristic polynomial det(t*I - M) by the Faddeev-LeVerrier recurrence
template <class K>
UPoly<K> charpoly(const Mat<K>& M) {
    size_t n = M.size();
    std::vector<K> c(n + 1, K(0));
    c[n] = K(1);
    Mat<K> A = M;
    for (size_t k = 1; k <= n; ++k) {
        K tr(0);
        for (size_t i = 0; i < n; ++i) tr = tr + A[i][i];
        c[n - k] = K(0) - tr * (K(1) / K((int)k));
        if (k == n) break;
        for (size_t i = 0; i < n; ++i) A[i][i] = A[i][i] + c[n - k];
        A = mat_mul(M, A);
    }
    return UPoly<K>::from(c);
}

// ---- integer matrices -------------------------------------------------------

// determinant by fraction-free Bareiss elimination
Int bareiss_det(Mat<Int> m);

// Smith normal form: returns diagonal invariant factors d; U*M*V = D with
// |det U| = |det V| = 1
struct SmithResult {
    std::vector<Int> d;  // invariant factors, d[i] | d[i+1], zeros last
    Mat<Int> U, V;
    int rank;
};
SmithResult smith_normal_form(Mat<Int> m);

}  // namespace weylk3
