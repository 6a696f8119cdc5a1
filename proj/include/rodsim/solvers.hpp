#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "rodsim/assembly.hpp"
#include "rodsim/linear_solver.hpp"

namespace rodsim {

/// Everything that defines one rod problem.
struct RodModel {
    Mesh mesh;
    ConstitutiveLaw law;
    CrossSectionInertia inertia;
    LoadSpec loads;
    QuadratureRule quad = QuadratureRule::gauss_legendre(2);
    Frame frame = Frame::CrossSection;
    LieConfig lie;

    int n_dofs() const { return mesh.n_dofs(); }
};

enum class DofKind : std::uint8_t { Free, Fixed, Prescribed };

/// Trajectory of one prescribed degree of freedom; missing rate/accel mean zero.
struct PrescribedDof {
    std::function<double(double)> value;
    std::function<double(double)> rate;
    std::function<double(double)> accel;
};

/// Per-DOF boundary conditions. Fixed slots hold their initial values; prescribed
/// slots follow the given trajectories (in statics the argument is the increment
/// fraction, in dynamics the time).
class Constraints {
  public:
    explicit Constraints(int n_dofs) : kind_(n_dofs, DofKind::Free) {}

    void fix_dof(int dof) { kind_[dof] = DofKind::Fixed; }
    void fix_node(int node) {
        for (int i = 0; i < 6; ++i) fix_dof(6 * node + i);
    }
    void fix_translation(int node) {
        for (int i = 0; i < 3; ++i) fix_dof(6 * node + i);
    }
    void prescribe_dof(int dof, PrescribedDof p) {
        kind_[dof] = DofKind::Prescribed;
        prescribed_[dof] = std::move(p);
    }

    int n_dofs() const { return static_cast<int>(kind_.size()); }
    DofKind kind(int dof) const { return kind_[dof]; }
    bool is_free(int dof) const { return kind_[dof] == DofKind::Free; }
    bool node_rotation_free(int node) const {
        return is_free(6 * node + 3) && is_free(6 * node + 4) && is_free(6 * node + 5);
    }

    std::vector<int> free_dofs() const;

    /// Set prescribed coordinate slots at parameter t.
    void apply_values(VecX& q, double t) const;
    /// Rates and accelerations of constrained slots (zero for fixed).
    double rate(int dof, double t) const;
    double accel(int dof, double t) const;

  private:
    std::vector<DofKind> kind_;
    std::map<int, PrescribedDof> prescribed_;
};

// --- statics -----------------------------------------------------------------

struct StaticSettings {
    int n_increments = 10;
    double atol = 1e-8;
    int max_newton_iters = 50;
    /// Load scale as a function of the increment fraction s in (0, 1]; default s.
    std::function<double(double)> load_ramp;
    /// Optional warm start applied before each increment (and each bisected
    /// sub-step), receiving the previous and the target increment fraction.
    std::function<void(double s_from, double s_to, VecX& q)> predictor;
    /// Failed increments are bisected this many times before giving up.
    int max_bisections = 5;
    bool store_increments = true;
};

struct StaticSolution {
    std::vector<VecX> q;            ///< converged coordinates per increment
    std::vector<int> newton_iters;  ///< linear solves per increment
    const VecX& final_q() const { return q.back(); }
};

/// Incremental Newton solve of f_int(q) + ramp(s) f_ext(q, s) = 0 on the free
/// DOFs, with the complement rotation update after every accepted iterate.
StaticSolution static_solve(const RodModel& model, const Constraints& bcs,
                            const StaticSettings& settings, const VecX& q0);

// --- dynamics ----------------------------------------------------------------

struct DynamicSettings {
    enum class Method { AdaptiveRk, GeneralizedAlpha };
    Method method = Method::AdaptiveRk;
    double t_end = 1.0;
    double atol = 1e-8;  ///< adaptive Runge-Kutta error control
    double rtol = 1e-8;
    double h0 = 0.0;        ///< initial step; 0 picks one automatically
    double rho_inf = 0.9;   ///< generalized-alpha spectral radius at infinity
    double h_alpha = 1e-5;  ///< generalized-alpha fixed step
    int store_every = 1;    ///< storage stride for the fixed-step method
};

struct Trajectory {
    std::vector<double> t;
    std::vector<VecX> q;
    std::vector<VecX> u;

    int size() const { return static_cast<int>(t.size()); }
};

/// First-order ODE view of the semi-discrete rod equations. The state is
/// y = (q, u); boundary conditions are enforced on the rate/acceleration level.
class RodOde {
  public:
    RodOde(const RodModel& model, const Constraints& bcs);

    int dim() const { return 2 * model_->n_dofs(); }
    void rhs(double t, const VecX& y, VecX& ydot) const;
    /// Complement update on the rotation coordinates; true if y changed.
    bool normalize(VecX& y) const;

  private:
    const RodModel* model_;
    const Constraints* bcs_;
    std::vector<int> free_;
    mutable DenseLu mass_lu_;
    mutable MatX mass_full_;
    mutable bool mass_cached_ = false;
    bool constant_mass_;
};

Trajectory dynamic_solve(const RodModel& model, const Constraints& bcs, const VecX& q0,
                         const VecX& u0, const DynamicSettings& settings);

// --- generic ODE integrators ---------------------------------------------------

using OdeRhs = std::function<void(double, const VecX&, VecX&)>;
/// Applied to the state after each accepted step; returns true if it changed y.
using OdePostStep = std::function<bool(double, VecX&)>;

struct OdeResult {
    std::vector<double> t;
    std::vector<VecX> y;
};

/// Embedded Dormand-Prince 5(4) pair with PI step-size control.
OdeResult integrate_rk45(const OdeRhs& f, double t0, const VecX& y0, double t_end, double atol,
                         double rtol, const OdePostStep& post_step = {}, double h0 = 0.0);

/// Generalized-alpha method for first-order systems, fixed step, parameters from
/// the spectral radius at infinity.
OdeResult integrate_generalized_alpha(const OdeRhs& f, double t0, const VecX& y0, double t_end,
                                      double h, double rho_inf, const OdePostStep& post_step = {},
                                      int store_every = 1);

}  // namespace rodsim
