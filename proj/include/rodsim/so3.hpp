#pragma once

#include "rodsim/types.hpp"

namespace rodsim {

/// Skew-symmetric matrix such that skew(w) * r == w.cross(r).
Mat3 skew(const Vec3& w);

/// Inverse of skew. Throws NonSkewInput if the symmetric part of m is not negligible.
Vec3 unskew(const Mat3& m);

/// Rotation angle of a, from the clamped arccos of (trace - 1) / 2.
double rotation_angle(const Mat3& a);

/// Rodrigues' formula; first-order branch below cfg.omega_crit.
Mat3 exp_so3(const Vec3& psi, const LieConfig& cfg = {});

/// Rotation vector of a. Throws AngleAtPi for trace(a) <= -1 + 1e-9.
Vec3 log_so3(const Mat3& a, const LieConfig& cfg = {});

/// Tangent operator relating rotation-vector rates to angular velocities.
Mat3 tangent_so3(const Vec3& psi, const LieConfig& cfg = {});

/// Inverse tangent operator. Throws TangentSingular near |psi| = 2*pi*k, k >= 1.
Mat3 inv_tangent_so3(const Vec3& psi, const LieConfig& cfg = {});

/// d(exp_so3)_ij / d(psi)_k, stored as (i, j, k).
Tensor333 d_exp_so3(const Vec3& psi, const LieConfig& cfg = {});

/// d(log_so3)_i / d(a)_jk, stored as (i, j, k). Throws AngleAtPi near angle pi.
Tensor333 d_log_so3(const Mat3& a, const LieConfig& cfg = {});

/// d(tangent_so3)_ij / d(psi)_k.
Tensor333 d_tangent_so3(const Vec3& psi, const LieConfig& cfg = {});

/// d(inv_tangent_so3)_ij / d(psi)_k. Throws TangentSingular near 2*pi*k, k >= 1.
Tensor333 d_inv_tangent_so3(const Vec3& psi, const LieConfig& cfg = {});

/// Levi-Civita permutation symbol.
inline double levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0.0;
    // even permutations of (0,1,2)
    if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1.0;
    return -1.0;
}

}  // namespace rodsim
