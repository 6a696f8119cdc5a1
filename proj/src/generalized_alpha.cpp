#include <cmath>

#include "rodsim/solvers.hpp"

namespace rodsim {

// First-order generalized-alpha: alpha_m = (3 - rho)/(2 (1 + rho)),
// alpha_f = 1/(1 + rho), gamma = 1/2 + alpha_m - alpha_f. Second-order accurate
// with numerical high-frequency dissipation controlled by rho_inf.
OdeResult integrate_generalized_alpha(const OdeRhs& f, double t0, const VecX& y0, double t_end,
                                      double h, double rho_inf, const OdePostStep& post_step,
                                      int store_every) {
    const double am = 0.5 * (3.0 - rho_inf) / (1.0 + rho_inf);
    const double af = 1.0 / (1.0 + rho_inf);
    const double gamma = 0.5 + am - af;

    const int n = static_cast<int>(y0.size());
    OdeResult out;
    out.t.push_back(t0);
    out.y.push_back(y0);

    VecX y = y0;
    VecX ydot(n);
    f(t0, y, ydot);

    DenseLu iteration_matrix;
    bool have_matrix = false;
    const int max_newton = 12;
    const double fd_eps = 1e-7;

    auto refresh_matrix = [&](double t_stage, const VecX& y_stage, const VecX& r_base,
                              const VecX& x) {
        // J = am I - af gamma h df/dy, finite differences column by column
        MatX jac(n, n);
        VecX r_pert(n);
        for (int j = 0; j < n; ++j) {
            const double dx = fd_eps * std::max(1.0, std::abs(x[j]));
            VecX y_p = y_stage;
            y_p += (af * gamma * h * dx) * VecX::Unit(n, j);
            f(t_stage, y_p, r_pert);
            jac.col(j) = (am * dx) * VecX::Unit(n, j) - (r_pert - r_base);
            jac.col(j) /= dx;
        }
        iteration_matrix.factor(std::move(jac));
        have_matrix = true;
    };

    long step = 0;
    double t = t0;
    while (t < t_end - 1e-12 * std::max(1.0, std::abs(t_end))) {
        const double hs = std::min(h, t_end - t);
        const double t_stage = t + af * hs;

        VecX x = ydot;  // unknown: ydot at the step end
        VecX fx(n);
        bool converged = false;
        for (int it = 0; it < max_newton; ++it) {
            const VecX y_stage = y + (af * hs) * ((1.0 - gamma) * ydot + gamma * x);
            f(t_stage, y_stage, fx);
            const VecX residual = (1.0 - am) * ydot + am * x - fx;
            const double rn = residual.cwiseAbs().maxCoeff();
            const double scale = 1.0 + ydot.cwiseAbs().maxCoeff();
            if (rn <= 1e-10 * scale) {
                converged = true;
                break;
            }
            if (!have_matrix) refresh_matrix(t_stage, y_stage, fx, x);
            const VecX dx = iteration_matrix.solve(-residual);
            x += dx;
            if (dx.cwiseAbs().maxCoeff() <= 1e-12 * scale) {
                converged = true;
                break;
            }
            if (it == max_newton / 2 && !converged) {
                // slow convergence: rebuild the iteration matrix once
                const VecX y_mid = y + (af * hs) * ((1.0 - gamma) * ydot + gamma * x);
                f(t_stage, y_mid, fx);
                refresh_matrix(t_stage, y_mid, fx, x);
            }
        }
        if (!converged)
            throw NewtonDiverged("integrate_generalized_alpha: stage solve failed at t = " +
                                 std::to_string(t));

        y += hs * ((1.0 - gamma) * ydot + gamma * x);
        ydot = x;
        t += hs;
        ++step;

        if (post_step && post_step(t, y)) f(t, y, ydot);  // consistent restart

        if (step % store_every == 0 || t >= t_end - 1e-12) {
            out.t.push_back(t);
            out.y.push_back(y);
        }
    }
    return out;
}

}  // namespace rodsim
