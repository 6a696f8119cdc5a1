#include "rodsim/linear_solver.hpp"

#include <cmath>

namespace rodsim {

// Elimination as a sequence of row interchanges and Gauss transforms: at step k
// only the active columns [k, k + reach] of the two pivot-candidate rows are
// swapped, so the stored multipliers of column k stay in the rows they were
// created for. The solve interleaves the interchanges accordingly.
void DenseLu::factor(MatX a, int lower, int upper) {
    const int n = static_cast<int>(a.rows());
    lu_ = std::move(a);
    pivots_.resize(n);
    singular_ = false;
    lower_ = lower < 0 ? n : lower;
    upper_ = upper < 0 ? n : upper;
    const int reach = std::min<long>(n, static_cast<long>(lower_) + upper_);

    for (int k = 0; k < n; ++k) {
        const int row_end = std::min(n, k + lower_ + 1);
        int piv = k;
        double best = std::abs(lu_(k, k));
        for (int r = k + 1; r < row_end; ++r) {
            const double v = std::abs(lu_(r, k));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        pivots_[k] = piv;
        if (best == 0.0) {
            singular_ = true;
            continue;
        }
        const int col_hi = std::min(n, k + reach + 1);
        if (piv != k)
            for (int c = k; c < col_hi; ++c) std::swap(lu_(k, c), lu_(piv, c));
        const double inv_pivot = 1.0 / lu_(k, k);
        for (int r = k + 1; r < row_end; ++r) {
            const double l = lu_(r, k) * inv_pivot;
            lu_(r, k) = l;
            if (l == 0.0) continue;
            for (int c = k + 1; c < col_hi; ++c) lu_(r, c) -= l * lu_(k, c);
        }
    }
}

VecX DenseLu::solve_refined(const MatX& a, const VecX& rhs, int passes) const {
    VecX x = solve(rhs);
    for (int pass = 0; pass < passes; ++pass) {
        const VecX residual = rhs - a * x;
        x += solve(residual);
    }
    return x;
}

VecX DenseLu::solve(const VecX& rhs) const {
    const int n = static_cast<int>(lu_.rows());
    const int reach = std::min<long>(n, static_cast<long>(lower_) + upper_);
    VecX x = rhs;
    for (int k = 0; k < n; ++k) {
        if (pivots_[k] != k) std::swap(x[k], x[pivots_[k]]);
        const int row_end = std::min(n, k + lower_ + 1);
        const double xk = x[k];
        if (xk == 0.0) continue;
        for (int r = k + 1; r < row_end; ++r) x[r] -= lu_(r, k) * xk;
    }
    for (int k = n - 1; k >= 0; --k) {
        const int col_hi = std::min(n, k + reach + 1);
        double acc = x[k];
        for (int c = k + 1; c < col_hi; ++c) acc -= lu_(k, c) * x[c];
        x[k] = acc / lu_(k, k);
    }
    return x;
}

}  // namespace rodsim
