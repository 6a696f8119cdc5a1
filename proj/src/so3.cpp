#include "rodsim/so3.hpp"

#include <cmath>
#include <numbers>

namespace rodsim {

namespace {

// Shared transcendental evaluations for the closed forms. All three tend to 1
// as the angle tends to zero.
struct Aux {
    double omega;  // |psi|
    double alpha;  // sin(w) / w
    double beta;   // 2 (1 - cos(w)) / w^2
    double gamma;  // alpha / beta = (w / 2) cot(w / 2)
    double cosw;
};

Aux aux_scalars(const Vec3& psi) {
    Aux s;
    s.omega = psi.norm();
    const double w = s.omega;
    const double h = 0.5 * w;
    s.cosw = std::cos(w);
    s.alpha = std::sin(w) / w;
    // half-angle forms keep beta and gamma fully accurate for small angles
    const double sh = std::sin(h) / h;
    s.beta = sh * sh;
    s.gamma = h * std::cos(h) / std::sin(h);
    return s;
}

void require_inv_tangent_regular(double omega) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double k = std::round(omega / two_pi);
    if (k >= 1.0 && std::abs(omega - k * two_pi) < 1e-6)
        throw TangentSingular("inverse tangent operator singular near |psi| = 2*pi*k");
}

}  // namespace

Mat3 skew(const Vec3& w) {
    Mat3 m;
    m << 0.0, -w.z(), w.y(),
         w.z(), 0.0, -w.x(),
        -w.y(), w.x(), 0.0;
    return m;
}

Vec3 unskew(const Mat3& m) {
    const double scale = m.norm();
    const double sym = (m + m.transpose()).norm();
    if (sym > 1e-10 * std::max(scale, 1e-300))
        throw NonSkewInput("unskew: matrix has a non-negligible symmetric part");
    return Vec3(m(2, 1), m(0, 2), m(1, 0));
}

double rotation_angle(const Mat3& a) {
    const double c = std::clamp(0.5 * (a.trace() - 1.0), -1.0, 1.0);
    return std::acos(c);
}

Mat3 exp_so3(const Vec3& psi, const LieConfig& cfg) {
    const double w = psi.norm();
    const Mat3 s = skew(psi);
    if (w <= cfg.omega_crit) return Mat3::Identity() + s;
    const Aux x = aux_scalars(psi);
    return Mat3::Identity() + x.alpha * s + 0.5 * x.beta * s * s;
}

Vec3 log_so3(const Mat3& a, const LieConfig& cfg) {
    const double tr = a.trace();
    if (tr <= -1.0 + 1e-9) throw AngleAtPi("log_so3: rotation angle at or too close to pi");
    const double w = rotation_angle(a);
    const Vec3 u(a(2, 1) - a(1, 2), a(0, 2) - a(2, 0), a(1, 0) - a(0, 1));
    if (w <= cfg.omega_crit) return 0.5 * u;
    return (w / (2.0 * std::sin(w))) * u;
}

Mat3 tangent_so3(const Vec3& psi, const LieConfig& cfg) {
    const double w = psi.norm();
    const Mat3 s = skew(psi);
    if (w <= cfg.omega_crit) return Mat3::Identity() - 0.5 * s;
    const Aux x = aux_scalars(psi);
    return Mat3::Identity() - 0.5 * x.beta * s + ((1.0 - x.alpha) / (w * w)) * s * s;
}

Mat3 inv_tangent_so3(const Vec3& psi, const LieConfig& cfg) {
    const double w = psi.norm();
    const Mat3 s = skew(psi);
    if (w <= cfg.omega_crit) return Mat3::Identity() + 0.5 * s;
    require_inv_tangent_regular(w);
    const Aux x = aux_scalars(psi);
    return Mat3::Identity() + 0.5 * s + ((1.0 - x.gamma) / (w * w)) * s * s;
}

Tensor333 d_exp_so3(const Vec3& psi, const LieConfig& cfg) {
    Tensor333 d;
    const double w = psi.norm();
    if (w <= cfg.omega_crit) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) d(i, j, k) = -levi_civita(i, j, k);
        return d;
    }
    const Aux x = aux_scalars(psi);
    const Mat3 s = skew(psi);
    const Mat3 s2 = s * s;
    const double w2 = w * w;
    const double c1 = (x.cosw - x.alpha) / w2;
    const double c2 = (x.alpha - x.beta) / w2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double prod = 0.0;
                for (int l = 0; l < 3; ++l)
                    prod += levi_civita(k, l, i) * s(l, j) + s(i, l) * levi_civita(k, j, l);
                d(i, j, k) = -x.alpha * levi_civita(i, j, k) + c1 * s(i, j) * psi[k] +
                             c2 * s2(i, j) * psi[k] + 0.5 * x.beta * prod;
            }
    return d;
}

Tensor333 d_log_so3(const Mat3& a, const LieConfig& cfg) {
    if (a.trace() <= -1.0 + 1e-9) throw AngleAtPi("d_log_so3: rotation angle at or too close to pi");
    Tensor333 d;
    const double w = rotation_angle(a);
    if (w <= cfg.omega_crit) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) d(i, j, k) = -0.5 * levi_civita(i, j, k);
        return d;
    }
    const double sw = std::sin(w);
    const Vec3 u(a(2, 1) - a(1, 2), a(0, 2) - a(2, 0), a(1, 0) - a(0, 1));
    const double c = w / (2.0 * sw);
    const double dc = (w * std::cos(w) - sw) / (4.0 * sw * sw * sw);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                d(i, j, k) = dc * u[i] * (j == k ? 1.0 : 0.0) - c * levi_civita(i, j, k);
    return d;
}

Tensor333 d_tangent_so3(const Vec3& psi, const LieConfig& cfg) {
    Tensor333 d;
    const double w = psi.norm();
    if (w <= cfg.omega_crit) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) d(i, j, k) = 0.5 * levi_civita(i, j, k);
        return d;
    }
    const Aux x = aux_scalars(psi);
    const Mat3 s = skew(psi);
    const Mat3 s2 = s * s;
    const double w2 = w * w;
    const double c1 = (x.beta - x.alpha) / w2;
    const double c2 = (1.0 - x.alpha) / w2;
    const double c3 = (3.0 * x.alpha - 2.0 - x.cosw) / (w2 * w2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double prod = 0.0;
                for (int l = 0; l < 3; ++l)
                    prod += levi_civita(k, l, i) * s(l, j) + s(i, l) * levi_civita(k, j, l);
                d(i, j, k) = 0.5 * x.beta * levi_civita(i, j, k) + c1 * s(i, j) * psi[k] +
                             c2 * prod + c3 * s2(i, j) * psi[k];
            }
    return d;
}

Tensor333 d_inv_tangent_so3(const Vec3& psi, const LieConfig& cfg) {
    Tensor333 d;
    const double w = psi.norm();
    if (w <= cfg.omega_crit) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) d(i, j, k) = -0.5 * levi_civita(i, j, k);
        return d;
    }
    require_inv_tangent_regular(w);
    const Aux x = aux_scalars(psi);
    const Mat3 s = skew(psi);
    const Mat3 s2 = s * s;
    const double w2 = w * w;
    const double c1 = (1.0 - x.gamma) / w2;
    // d/dpsi_k of (1 - gamma) / w^2, collinear with psi.
    const double c2 = (0.25 - x.gamma * (1.0 - x.gamma) / w2 - 2.0 * (1.0 - x.gamma) / w2) / w2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double prod = 0.0;
                for (int l = 0; l < 3; ++l)
                    prod += levi_civita(k, l, i) * s(l, j) + s(i, l) * levi_civita(k, j, l);
                d(i, j, k) = -0.5 * levi_civita(i, j, k) + c1 * prod + c2 * s2(i, j) * psi[k];
            }
    return d;
}

}  // namespace rodsim
