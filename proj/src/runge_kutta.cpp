#include <cmath>

#include "rodsim/solvers.hpp"

namespace rodsim {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

double error_norm(const VecX& err, const VecX& y0, const VecX& y1, double atol, double rtol) {
    double acc = 0.0;
    for (int i = 0; i < err.size(); ++i) {
        const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double e = err[i] / scale;
        acc += e * e;
    }
    return std::sqrt(acc / err.size());
}

}  // namespace

OdeResult integrate_rk45(const OdeRhs& f, double t0, const VecX& y0, double t_end, double atol,
                         double rtol, const OdePostStep& post_step, double h0) {
    OdeResult out;
    double t = t0;
    VecX y = y0;
    out.t.push_back(t);
    out.y.push_back(y);

    const int n = static_cast<int>(y.size());
    VecX k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), err(n);

    f(t, y, k1);
    double h = h0;
    if (h <= 0.0) {
        // conservative guess from the initial slope
        const double d0 = y.cwiseAbs().maxCoeff() + 1.0;
        const double d1 = k1.cwiseAbs().maxCoeff() + 1e-12;
        h = std::min(0.01 * d0 / d1, 1e-3 * (t_end - t0));
        h = std::max(h, 1e-12 * (t_end - t0));
    }

    bool k1_valid = true;
    double err_prev = 1.0;
    while (t < t_end) {
        h = std::min(h, t_end - t);
        if (h < 1e-14 * std::max(1.0, std::abs(t)))
            throw StepFailure("integrate_rk45: step size underflow at t = " + std::to_string(t));

        if (!k1_valid) {
            f(t, y, k1);
            k1_valid = true;
        }
        ytmp = y + h * (a21 * k1);
        f(t + c2 * h, ytmp, k2);
        ytmp = y + h * (a31 * k1 + a32 * k2);
        f(t + c3 * h, ytmp, k3);
        ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        f(t + c4 * h, ytmp, k4);
        ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        f(t + c5 * h, ytmp, k5);
        ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        f(t + h, ytmp, k6);
        ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        f(t + h, ynew, k7);  // first-same-as-last stage
        err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double en = error_norm(err, y, ynew, atol, rtol);
        if (en <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7;
            if (post_step && post_step(t, y)) k1_valid = false;
            out.t.push_back(t);
            out.y.push_back(y);
            const double fac =
                0.9 * std::pow(std::max(en, 1e-10), -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
            h *= std::min(5.0, std::max(0.2, fac));
            err_prev = std::max(en, 1e-10);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(en, -1.0 / 5.0));
        }
    }
    return out;
}

}  // namespace rodsim
