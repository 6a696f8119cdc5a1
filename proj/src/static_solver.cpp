#include <cmath>

#include "rodsim/solvers.hpp"

namespace rodsim {

std::vector<int> Constraints::free_dofs() const {
    std::vector<int> f;
    f.reserve(kind_.size());
    for (int i = 0; i < n_dofs(); ++i)
        if (kind_[i] == DofKind::Free) f.push_back(i);
    return f;
}

void Constraints::apply_values(VecX& q, double t) const {
    for (const auto& [dof, p] : prescribed_)
        if (p.value) q[dof] = p.value(t);
}

double Constraints::rate(int dof, double t) const {
    const auto it = prescribed_.find(dof);
    if (it == prescribed_.end() || !it->second.rate) return 0.0;
    return it->second.rate(t);
}

double Constraints::accel(int dof, double t) const {
    const auto it = prescribed_.find(dof);
    if (it == prescribed_.end() || !it->second.accel) return 0.0;
    return it->second.accel(t);
}

namespace {

// band width of the two-node element coupling pattern
constexpr int kBand = 11;

VecX gather(const VecX& full, const std::vector<int>& idx) {
    VecX out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) out[i] = full[idx[i]];
    return out;
}

MatX gather(const MatX& full, const std::vector<int>& idx) {
    MatX out(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = full(idx[i], idx[j]);
    return out;
}

// Newton step with row/column equilibration: force and moment rows differ by
// orders of magnitude for very slender rods, and without scaling the soft
// singular values drown in round-off. A positive mu switches to the
// Levenberg-Marquardt normal equations of the equilibrated system, which keeps
// near-mechanism modes from amplifying residual dust into huge steps.
VecX scaled_newton_step(MatX k, VecX rhs, int band, double mu = 0.0) {
    const int n = static_cast<int>(k.rows());
    VecX row_scale(n), col_scale(n);
    for (int i = 0; i < n; ++i) {
        const double m = k.row(i).cwiseAbs().maxCoeff();
        row_scale[i] = m > 0.0 ? 1.0 / m : 1.0;
    }
    k.array().colwise() *= row_scale.array();
    for (int j = 0; j < n; ++j) {
        const double m = k.col(j).cwiseAbs().maxCoeff();
        col_scale[j] = m > 0.0 ? 1.0 / m : 1.0;
    }
    k.array().rowwise() *= col_scale.transpose().array();
    rhs.array() *= row_scale.array();

    VecX y;
    if (mu <= 0.0) {
        DenseLu lu;
        lu.factor(k, band, band);
        if (lu.singular()) throw NewtonDiverged("static_solve: singular tangent matrix");
        y = lu.solve_refined(k, rhs);
    } else {
        MatX normal = k.transpose() * k;
        normal.diagonal().array() += mu * mu;
        const VecX g = k.transpose() * rhs;
        DenseLu lu;
        lu.factor(normal, 2 * band, 2 * band);
        if (lu.singular()) throw NewtonDiverged("static_solve: singular regularized matrix");
        y = lu.solve_refined(normal, g);
    }
    y.array() *= col_scale.array();
    return y;
}

}  // namespace

StaticSolution static_solve(const RodModel& model, const Constraints& bcs,
                            const StaticSettings& settings, const VecX& q0) {
    const std::vector<int> free = bcs.free_dofs();
    StaticSolution sol;
    sol.q.reserve(settings.store_increments ? settings.n_increments : 1);
    sol.newton_iters.reserve(settings.n_increments);

    VecX q = q0;

    // Newton at a fixed increment fraction; returns the linear-solve count or
    // -1 when the iteration cap is reached (q is then left untouched).
    auto newton_at = [&](VecX& state, double s) {
        const double lambda = settings.load_ramp ? settings.load_ramp(s) : s;
        auto residual_free = [&](const VecX& qq) {
            const VecX r =
                assemble_internal_force(model.mesh, model.law, qq, model.quad, model.frame,
                                        model.lie) +
                lambda * assemble_external_force(model.mesh, model.loads, qq, s, model.quad,
                                                 model.frame, model.lie);
            return gather(r, free);
        };

        VecX work = state;
        bcs.apply_values(work, s);
        int iters = 0;
        VecX r_free = residual_free(work);
        double rn = r_free.size() == 0 ? 0.0 : r_free.cwiseAbs().maxCoeff();

        // Watchdog state: Newton is allowed its natural non-monotone path, but
        // once it stops improving on the best visited iterate for several steps
        // the best one is restored and retried with a damped step. This tames
        // the noise-driven walk of extremely soft problems without touching the
        // healthy quadratic path.
        VecX q_best = work, r_best = r_free;
        double rn_best = rn;
        int stalled = 0;
        bool polish = false;   // strict-descent fallback once Newton stalls
        double mu = 1e-8;      // Levenberg-Marquardt parameter of the polish mode

        for (int it = 0; it <= settings.max_newton_iters; ++it) {
            if (rn <= settings.atol) {
                state = std::move(work);
                return iters;
            }
            if (it == settings.max_newton_iters) break;

            MatX k_full =
                assemble_internal_jacobian(model.mesh, model.law, work, model.quad, model.lie);
            k_full += lambda * assemble_external_jacobian(model.mesh, model.loads, work, s,
                                                          model.quad, model.frame, model.lie);
            auto complement_nodes = [&](VecX& qq) {
                for (int node = 0; node < model.mesh.n_nodes(); ++node)
                    if (bcs.node_rotation_free(node))
                        qq.segment<3>(6 * node + 3) =
                            complement_update(qq.segment<3>(6 * node + 3));
            };

            if (!polish) {
                const VecX step = scaled_newton_step(gather(k_full, free), -r_free, kBand);
                ++iters;

                // limit the nodal rotation-vector change per iterate; large
                // rotation jumps are what sends a poor warm start onto a
                // different solution branch; near a solution the cap is inactive
                constexpr double rotation_cap = 1.0;
                double max_rot = 0.0;
                for (std::size_t i = 0; i < free.size(); ++i)
                    if (free[i] % 6 >= 3) max_rot = std::max(max_rot, std::abs(step[i]));
                const double alpha = max_rot > rotation_cap ? rotation_cap / max_rot : 1.0;

                for (std::size_t i = 0; i < free.size(); ++i) work[free[i]] += alpha * step[i];
                complement_nodes(work);
                r_free = residual_free(work);
                rn = r_free.cwiseAbs().maxCoeff();
                if (rn < rn_best) {
                    rn_best = rn;
                    q_best = work;
                    r_best = r_free;
                    stalled = 0;
                } else if (++stalled >= 8) {
                    // Newton is wandering; restore the best iterate and switch
                    // to regularized strict-descent steps
                    work = q_best;
                    r_free = r_best;
                    rn = rn_best;
                    polish = true;
                }
            } else {
                const VecX step =
                    scaled_newton_step(gather(k_full, free), -r_free, kBand, mu);
                ++iters;
                VecX cand = work;
                for (std::size_t i = 0; i < free.size(); ++i) cand[free[i]] += step[i];
                complement_nodes(cand);
                const VecX r_cand = residual_free(cand);
                const double rn_cand = r_cand.cwiseAbs().maxCoeff();
                if (rn_cand < rn) {
                    work = std::move(cand);
                    r_free = r_cand;
                    rn = rn_cand;
                    mu = std::max(mu / 3.0, 1e-12);
                    if (rn < rn_best) {
                        rn_best = rn;
                        q_best = work;
                        r_best = r_free;
                    }
                } else {
                    mu = std::min(mu * 10.0, 1e4);
                }
            }
        }
        return -1;
    };

    // one increment segment with automatic bisection on Newton failure
    auto solve_segment = [&](auto&& self, double s_from, double s_to, int depth) -> int {
        if (settings.predictor) settings.predictor(s_from, s_to, q);
        const int iters = newton_at(q, s_to);
        if (iters >= 0) return iters;
        if (depth >= settings.max_bisections)
            throw NewtonDiverged("static_solve: no convergence at increment fraction " +
                                 std::to_string(s_to));
        const double mid = 0.5 * (s_from + s_to);
        const int a = self(self, s_from, mid, depth + 1);
        const int b = self(self, mid, s_to, depth + 1);
        return a + b;
    };

    double s_prev = 0.0;
    for (int inc = 1; inc <= settings.n_increments; ++inc) {
        const double s = static_cast<double>(inc) / settings.n_increments;
        sol.newton_iters.push_back(solve_segment(solve_segment, s_prev, s, 0));
        s_prev = s;
        if (settings.store_increments || inc == settings.n_increments) sol.q.push_back(q);
    }
    return sol;
}

}  // namespace rodsim
