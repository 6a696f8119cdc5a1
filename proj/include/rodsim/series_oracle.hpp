#pragma once

#include "rodsim/types.hpp"

namespace rodsim {

// Truncated power-series evaluations of the generic matrix Lie group formulas.
// Test-only reference implementations; never called from solver paths.
namespace series {

enum class Algebra { So3, Se3 };

/// j map: coordinates to algebra element (3x3 or 4x4).
MatX hat(const VecX& x, Algebra g);

/// Adjoint of j(x) expressed on coordinates, columns built from Lie brackets.
MatX box(const VecX& x, Algebra g);

/// Truncated matrix exponential sum_{i<n} X^i / i!.
MatX exp(const MatX& x, int n_terms);

/// Truncated dexp_X(Y) = sum_{i<n} ad_X^i(Y) / (i+1)!.
MatX dexp(const MatX& x, const MatX& y, int n_terms);

/// Truncated dexp^{-1}_X(Y) = sum_{i<n} B_i ad_X^i(Y) / i!, Bernoulli numbers B_i.
MatX dexp_inv(const MatX& x, const MatX& y, int n_terms);

/// Tangent operator sum_{i<n} (-1)^i box(x)^i / (i+1)!.
MatX tangent(const VecX& x, Algebra g, int n_terms);

/// Inverse tangent operator sum_{i<n} (-1)^i B_i box(x)^i / i!.
MatX inv_tangent(const VecX& x, Algebra g, int n_terms);

}  // namespace series
}  // namespace rodsim
