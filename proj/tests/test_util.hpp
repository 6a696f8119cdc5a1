#pragma once

#include <functional>
#include <random>

#include "rodsim/types.hpp"

namespace rodsim::test {

inline std::mt19937_64 rng(0x5eed5eedULL);

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

inline Vec3 random_unit() {
    std::normal_distribution<double> d(0.0, 1.0);
    Vec3 v(d(rng), d(rng), d(rng));
    while (v.norm() < 1e-8) v = Vec3(d(rng), d(rng), d(rng));
    return v.normalized();
}

inline Vec3 random_vec3(double norm_lo, double norm_hi) {
    return uniform(norm_lo, norm_hi) * random_unit();
}

inline Vec3 random_box(double half_width) {
    return Vec3(uniform(-half_width, half_width), uniform(-half_width, half_width),
                uniform(-half_width, half_width));
}

/// Central finite difference of f: R^n -> R^m, columns are d f / d x_k.
inline MatX fd_jacobian(const std::function<VecX(const VecX&)>& f, const VecX& x,
                        double step = 1e-6) {
    const VecX f0 = f(x);
    MatX jac(f0.size(), x.size());
    for (int k = 0; k < x.size(); ++k) {
        VecX xp = x, xm = x;
        xp[k] += step;
        xm[k] -= step;
        jac.col(k) = (f(xp) - f(xm)) / (2.0 * step);
    }
    return jac;
}

/// Max |a - b| over entries, divided by max(1, |a|_inf).
inline double rel_err(const MatX& a, const MatX& b) {
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace rodsim::test
