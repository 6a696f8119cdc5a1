#include "rodsim/se3.hpp"

namespace rodsim {

Pose exp_se3(const Twist& theta, const LieConfig& cfg) {
    Pose h;
    h.R = exp_so3(theta.omega, cfg);
    h.r = tangent_so3(theta.omega, cfg).transpose() * theta.v;
    return h;
}

Twist log_se3(const Pose& h, const LieConfig& cfg) {
    Twist theta;
    theta.omega = log_so3(h.R, cfg);
    theta.v = inv_tangent_so3(theta.omega, cfg).transpose() * h.r;
    return theta;
}

Tensor446 d_exp_se3(const Twist& theta, const LieConfig& cfg) {
    Tensor446 d;
    d.set_zero();
    const Tensor333 da = d_exp_so3(theta.omega, cfg);
    const Mat3 t = tangent_so3(theta.omega, cfg);
    const Tensor333 dt = d_tangent_so3(theta.omega, cfg);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) d(i, j, k + 3) = da(i, j, k);
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) d(i, 3, k) = t(k, i);
        for (int k = 0; k < 3; ++k) {
            double acc = 0.0;
            for (int l = 0; l < 3; ++l) acc += theta.v[l] * dt(l, i, k);
            d(i, 3, k + 3) = acc;
        }
    }
    return d;
}

Tensor644 d_log_se3(const Pose& h, const LieConfig& cfg) {
    Tensor644 d;
    d.set_zero();
    const Vec3 psi = log_so3(h.R, cfg);
    const Tensor333 dlog = d_log_so3(h.R, cfg);
    const Mat3 tinv = inv_tangent_so3(psi, cfg);
    const Tensor333 dtinv = d_inv_tangent_so3(psi, cfg);
    // translational twist part w.r.t. the rotation block, chained through log_so3
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double acc = 0.0;
                for (int l = 0; l < 3; ++l)
                    for (int m = 0; m < 3; ++m) acc += h.r[l] * dtinv(l, i, m) * dlog(m, j, k);
                d(i, j, k) = acc;
            }
    // translational twist part w.r.t. the translation column
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d(i, j, 3) = tinv(j, i);
    // angular part w.r.t. the rotation block
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) d(i + 3, j, k) = dlog(i, j, k);
    return d;
}

}  // namespace rodsim
