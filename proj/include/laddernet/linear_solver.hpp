#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "types.hpp"

namespace laddernet::linear {

// Outcome of eliminating one dense complex square system A x = b.
//
// particular is the solution with every free unknown set to zero; null_basis
// holds one vector per free column, so the full solution set is
// particular + span(null_basis). rank + null_basis.size() == n whenever the
// system is consistent.
struct Solution {
    bool consistent = false;
    int rank = 0;
    std::vector<Complex> particular;
    std::vector<std::vector<Complex>> null_basis;

    bool unique() const { return consistent && null_basis.empty(); }
};

// Gaussian elimination with scaled partial pivoting. A column whose best
// available pivot has modulus below 1e-12 times the column's initial
// max-modulus is declared free rather than divided by.
inline Solution solve(int n, std::vector<Complex> a, std::vector<Complex> b) {
    Solution out;
    if (n == 0) {
        out.consistent = true;
        return out;
    }

    std::vector<double> row_scale(n, 0.0), col_max(n, 0.0);
    double global_max = 0.0, rhs_max = 0.0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const double m = std::abs(a[r * n + c]);
            row_scale[r] = std::max(row_scale[r], m);
            col_max[c] = std::max(col_max[c], m);
            global_max = std::max(global_max, m);
        }
        rhs_max = std::max(rhs_max, std::abs(b[r]));
    }
    std::vector<double> col_tol(n);
    for (int c = 0; c < n; ++c)
        col_tol[c] = 1e-12 * (col_max[c] > 0.0 ? col_max[c] : global_max);

    std::vector<int> pivot_cols;
    std::vector<int> free_cols;
    pivot_cols.reserve(n);
    int row = 0;
    for (int col = 0; col < n; ++col) {
        int best = -1;
        double best_score = 0.0;
        for (int r = row; r < n; ++r) {
            const double m = std::abs(a[r * n + col]);
            if (m == 0.0) continue;
            const double score = row_scale[r] > 0.0 ? m / row_scale[r] : m;
            if (best < 0 || score > best_score) {
                best = r;
                best_score = score;
            }
        }
        if (best < 0 || std::abs(a[best * n + col]) < col_tol[col]) {
            free_cols.push_back(col);
            continue;
        }
        if (best != row) {
            for (int c = 0; c < n; ++c) std::swap(a[row * n + c], a[best * n + c]);
            std::swap(b[row], b[best]);
            std::swap(row_scale[row], row_scale[best]);
        }
        for (int r = row + 1; r < n; ++r) {
            if (a[r * n + col] == Complex(0.0)) continue;
            const Complex f = a[r * n + col] / a[row * n + col];
            a[r * n + col] = 0.0;
            for (int c = col + 1; c < n; ++c) a[r * n + c] -= f * a[row * n + c];
            b[r] -= f * b[row];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    out.rank = static_cast<int>(pivot_cols.size());

    // Rows past the rank hold only sub-tolerance coefficients; a visible
    // right-hand side there means the system is inconsistent.
    const double cons_tol = 1e-9 * std::max({1.0, global_max, rhs_max});
    out.consistent = true;
    for (int r = out.rank; r < n; ++r) {
        if (std::abs(b[r]) > cons_tol) {
            out.consistent = false;
            return out;
        }
    }

    out.particular.assign(n, Complex(0.0));
    for (int i = out.rank - 1; i >= 0; --i) {
        const int col = pivot_cols[i];
        Complex s = b[i];
        for (int j = col + 1; j < n; ++j) s -= a[i * n + j] * out.particular[j];
        out.particular[col] = s / a[i * n + col];
    }

    for (int fc : free_cols) {
        std::vector<Complex> w(n, Complex(0.0));
        w[fc] = 1.0;
        for (int i = out.rank - 1; i >= 0; --i) {
            const int col = pivot_cols[i];
            Complex s = 0.0;
            // a free column left of the pivot can still carry a coefficient
            for (int j = 0; j < n; ++j)
                if (j != col) s -= a[i * n + j] * w[j];
            w[col] = s / a[i * n + col];
        }
        out.null_basis.push_back(std::move(w));
    }
    return out;
}

}  // namespace laddernet::linear
