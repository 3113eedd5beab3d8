#pragma once

// Small dense exact linear algebra over a field: Gauss-Jordan elimination
// returning a particular solution plus a kernel basis, and a rank helper.

#include <cstddef>
#include <vector>

#include "pfield/errors.hpp"

namespace pfield {

template <class K>
struct LinearSolution {
    bool consistent = false;
    std::vector<K> particular;        // one solution (n entries)
    std::vector<std::vector<K>> kernel; // basis of the homogeneous solutions
    std::size_t dim() const { return kernel.size(); }
};

template <class K>
LinearSolution<K> solve_linear(std::vector<std::vector<K>> a, std::vector<K> rhs) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && a[sel][col] == K(0)) ++sel;
        if (sel == m) continue;
        std::swap(a[sel], a[row]);
        std::swap(rhs[sel], rhs[row]);
        K inv = K(1) / a[row][col];
        for (std::size_t j = col; j < n; ++j) a[row][j] = inv * a[row][j];
        rhs[row] = inv * rhs[row];
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == K(0)) continue;
            K f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[row][j];
            rhs[i] = rhs[i] - f * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    LinearSolution<K> out;
    for (std::size_t i = row; i < m; ++i)
        if (!(rhs[i] == K(0))) return out; // inconsistent
    out.consistent = true;
    out.particular.assign(n, K(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
        out.particular[pivot_col[r]] = rhs[r];
        is_pivot[pivot_col[r]] = true;
    }
    for (std::size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<K> vec(n, K(0));
        vec[col] = K(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r) vec[pivot_col[r]] = K(0) - a[r][col];
        out.kernel.push_back(std::move(vec));
    }
    return out;
}

template <class K>
std::size_t matrix_rank(std::vector<std::vector<K>> a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && a[sel][col] == K(0)) ++sel;
        if (sel == m) continue;
        std::swap(a[sel], a[row]);
        for (std::size_t i = row + 1; i < m; ++i) {
            if (a[i][col] == K(0)) continue;
            K f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[row][j];
        }
        ++row;
    }
    return row;
}

} // namespace pfield
