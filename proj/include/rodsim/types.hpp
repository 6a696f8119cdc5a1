#pragma once

#include <Eigen/Dense>
#include <array>
#include <stdexcept>
#include <string>

namespace rodsim {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec12 = Eigen::Matrix<double, 12, 1>;
using Mat12 = Eigen::Matrix<double, 12, 12>;
using Mat6x12 = Eigen::Matrix<double, 6, 12>;
using Mat3x12 = Eigen::Matrix<double, 3, 12>;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

/// A twist (v, omega): linear part first, angular part second.
struct Twist {
    Vec3 v = Vec3::Zero();
    Vec3 omega = Vec3::Zero();

    Vec6 as_vec6() const {
        Vec6 t;
        t << v, omega;
        return t;
    }
    static Twist from_vec6(const Vec6& t) { return {t.head<3>(), t.tail<3>()}; }
    Twist scaled(double s) const { return {s * v, s * omega}; }
};

/// A rigid transformation: rotation plus translation, homogeneous bottom row implied.
struct Pose {
    Mat3 R = Mat3::Identity();
    Vec3 r = Vec3::Zero();

    static Pose identity() { return {}; }

    Pose inverse() const { return {R.transpose(), -(R.transpose() * r)}; }

    Pose operator*(const Pose& other) const { return {R * other.R, r + R * other.r}; }

    Vec3 apply(const Vec3& p) const { return R * p + r; }

    Mat4 as_mat4() const {
        Mat4 h = Mat4::Identity();
        h.topLeftCorner<3, 3>() = R;
        h.topRightCorner<3, 1>() = r;
        return h;
    }
    static Pose from_mat4(const Mat4& h) { return {h.topLeftCorner<3, 3>(), h.topRightCorner<3, 1>()}; }
};

/// Dense third-order tensor with fixed dimensions, row-major index order (i, j, k).
template <int N1, int N2, int N3>
struct Tensor3 {
    std::array<double, static_cast<std::size_t>(N1) * N2 * N3> a{};

    double& operator()(int i, int j, int k) { return a[(static_cast<std::size_t>(i) * N2 + j) * N3 + k]; }
    double operator()(int i, int j, int k) const { return a[(static_cast<std::size_t>(i) * N2 + j) * N3 + k]; }
    void set_zero() { a.fill(0.0); }
};

using Tensor333 = Tensor3<3, 3, 3>;
using Tensor446 = Tensor3<4, 4, 6>;
using Tensor644 = Tensor3<6, 4, 4>;
using Tensor4412 = Tensor3<4, 4, 12>;

/// Numerical branch controls shared by the closed-form Lie group kernels.
struct LieConfig {
    double omega_crit = 1e-6;  ///< below this angle the first-order branches are used
    int series_terms = 40;     ///< truncation length of the series reference
};

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonSkewInput : Error {
    explicit NonSkewInput(const std::string& msg) : Error(msg) {}
};

/// The rotation logarithm and its derivatives are singular at angle pi.
struct AngleAtPi : Error {
    explicit AngleAtPi(const std::string& msg) : Error(msg) {}
};

/// The inverse tangent operator is singular at angles 2*pi*k, k >= 1.
struct TangentSingular : Error {
    explicit TangentSingular(const std::string& msg) : Error(msg) {}
};

struct NewtonDiverged : Error {
    explicit NewtonDiverged(const std::string& msg) : Error(msg) {}
};

struct StepFailure : Error {
    explicit StepFailure(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace rodsim
