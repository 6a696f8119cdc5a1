#include "rodsim/solvers.hpp"

namespace rodsim {

namespace {
constexpr int kBand = 11;
}

RodOde::RodOde(const RodModel& model, const Constraints& bcs)
    : model_(&model), bcs_(&bcs), free_(bcs.free_dofs()) {
    constant_mass_ =
        model.frame == Frame::CrossSection && model.inertia.S_rho0.isZero(0.0);
}

void RodOde::rhs(double t, const VecX& y, VecX& ydot) const {
    const int n = model_->n_dofs();
    const VecX q = y.head(n);
    const VecX u = y.tail(n);
    ydot.resize(2 * n);

    // coordinate rates: nodal kinematic map on free slots, prescribed rates otherwise
    VecX qdot = kinematic_ode(model_->mesh, q, u, model_->frame, model_->lie);
    for (int dof = 0; dof < n; ++dof)
        if (!bcs_->is_free(dof)) qdot[dof] = bcs_->rate(dof, t);
    ydot.head(n) = qdot;

    // minimal-velocity rates from the equations of motion, constraints on
    // acceleration level
    VecX h = assemble_internal_force(model_->mesh, model_->law, q, model_->quad, model_->frame,
                                     model_->lie) +
             assemble_external_force(model_->mesh, model_->loads, q, t, model_->quad,
                                     model_->frame, model_->lie) -
             assemble_gyroscopic(model_->mesh, model_->inertia, q, u, model_->quad, model_->frame,
                                 model_->lie);

    VecX udot_c = VecX::Zero(n);
    bool any_constrained_accel = false;
    for (int dof = 0; dof < n; ++dof)
        if (!bcs_->is_free(dof)) {
            udot_c[dof] = bcs_->accel(dof, t);
            if (udot_c[dof] != 0.0) any_constrained_accel = true;
        }

    if (!mass_cached_ || !constant_mass_) {
        mass_full_ = assemble_mass(model_->mesh, model_->inertia, q, model_->quad, model_->frame,
                                   model_->lie);
        MatX m_free(free_.size(), free_.size());
        for (std::size_t i = 0; i < free_.size(); ++i)
            for (std::size_t j = 0; j < free_.size(); ++j)
                m_free(i, j) = mass_full_(free_[i], free_[j]);
        mass_lu_.factor(std::move(m_free), kBand, kBand);
        mass_cached_ = true;
    }

    VecX rhs_free(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) {
        double v = h[free_[i]];
        if (any_constrained_accel) v -= mass_full_.row(free_[i]).dot(udot_c);
        rhs_free[i] = v;
    }
    const VecX udot_free = mass_lu_.solve(rhs_free);

    VecX udot = udot_c;
    for (std::size_t i = 0; i < free_.size(); ++i) udot[free_[i]] = udot_free[i];
    ydot.tail(n) = udot;
}

bool RodOde::normalize(VecX& y) const {
    bool changed = false;
    for (int node = 0; node < model_->mesh.n_nodes(); ++node) {
        if (!bcs_->node_rotation_free(node)) continue;
        const Vec3 psi = y.segment<3>(6 * node + 3);
        const Vec3 updated = complement_update(psi);
        if ((updated - psi).squaredNorm() > 0.0) {
            y.segment<3>(6 * node + 3) = updated;
            changed = true;
        }
    }
    return changed;
}

Trajectory dynamic_solve(const RodModel& model, const Constraints& bcs, const VecX& q0,
                         const VecX& u0, const DynamicSettings& settings) {
    const RodOde ode(model, bcs);
    const int n = model.n_dofs();
    VecX y0(2 * n);
    y0 << q0, u0;

    const OdeRhs f = [&ode](double t, const VecX& y, VecX& ydot) { ode.rhs(t, y, ydot); };
    const OdePostStep post = [&ode](double, VecX& y) { return ode.normalize(y); };

    OdeResult res;
    if (settings.method == DynamicSettings::Method::AdaptiveRk) {
        res = integrate_rk45(f, 0.0, y0, settings.t_end, settings.atol, settings.rtol, post,
                             settings.h0);
    } else {
        res = integrate_generalized_alpha(f, 0.0, y0, settings.t_end, settings.h_alpha,
                                          settings.rho_inf, post, settings.store_every);
    }

    Trajectory traj;
    traj.t = std::move(res.t);
    traj.q.reserve(res.y.size());
    traj.u.reserve(res.y.size());
    for (const VecX& y : res.y) {
        traj.q.push_back(y.head(n));
        traj.u.push_back(y.tail(n));
    }
    return traj;
}

}  // namespace rodsim
