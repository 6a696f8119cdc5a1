#pragma once

#include "rodsim/types.hpp"

namespace rodsim {

/// LU factorization with row partial pivoting on dense storage. A bandwidth
/// hint restricts the elimination loops to the structurally nonzero region;
/// the factors are identical to the full dense elimination because all skipped
/// operations act on zeros. Row swaps widen the upper band by the lower width.
class DenseLu {
  public:
    /// Factor a in place. lower/upper are the bandwidths of a, or -1 for full.
    void factor(MatX a, int lower = -1, int upper = -1);

    VecX solve(const VecX& rhs) const;

    /// Solve with iterative refinement against the unfactored matrix; recovers
    /// most of the accuracy lost to ill conditioning while cond * eps < 1.
    VecX solve_refined(const MatX& a, const VecX& rhs, int passes = 2) const;

    bool singular() const { return singular_; }

  private:
    MatX lu_;
    std::vector<int> pivots_;
    int lower_ = 0, upper_ = 0;
    bool singular_ = false;
};

}  // namespace rodsim
