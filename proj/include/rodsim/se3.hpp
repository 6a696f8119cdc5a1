#pragma once

#include "rodsim/so3.hpp"
#include "rodsim/types.hpp"

namespace rodsim {

/// Exponential map from twist coordinates to a rigid transformation.
Pose exp_se3(const Twist& theta, const LieConfig& cfg = {});

/// Logarithm of a rigid transformation. Throws AngleAtPi near rotation angle pi.
Twist log_se3(const Pose& h, const LieConfig& cfg = {});

/// d(exp_se3 as 4x4)_ij / d(theta)_k with theta ordered (v, omega), stored (i, j, k).
Tensor446 d_exp_se3(const Twist& theta, const LieConfig& cfg = {});

/// d(log_se3)_i / d(h as 4x4)_jk with the twist ordered (v, omega), stored (i, j, k).
Tensor644 d_log_se3(const Pose& h, const LieConfig& cfg = {});

}  // namespace rodsim
