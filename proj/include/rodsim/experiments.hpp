#pragma once

#include <set>
#include <string>

#include "rodsim/config.hpp"
#include "rodsim/solvers.hpp"

namespace rodsim::bench {

/// Pose of a discrete solution at any centerline parameter.
Pose eval_pose(const Mesh& mesh, const VecX& q, double xi, const LieConfig& cfg = {});

/// Centerline and orientation error measures against a reference solution,
/// sampled at k equispaced parameters.
struct ErrorReport {
    double e_r = 0.0;
    double e_psi = 0.0;
    int samples = 0;
};
ErrorReport error_metrics(const Mesh& mesh, const VecX& q, const Mesh& ref_mesh,
                          const VecX& ref_q, int k = 100);

/// Strains of the uncoupled linear-position/geodesic-rotation interpolation,
/// generally xi-dependent (the locking-prone baseline).
StrainState r3so3_baseline_strains(const NodalCoords& a, const NodalCoords& b,
                                   const ElementGeom& geom, double xi, const LieConfig& cfg = {});

struct StaticRun {
    Mesh mesh;
    StaticSolution solution;
    int max_newton_iters = 0;
};

// --- cantilever under tip moment plus follower tip force ---------------------

inline constexpr double kCantileverLength = 1e3;

double cantilever_tolerance(double slenderness);
RodModel make_cantilever(double slenderness, int n_el);
VecX straight_reference_q(const Mesh& mesh, double length, const Pose& base = Pose::identity());
StaticRun run_cantilever_case(double slenderness, int n_el, int increments, double atol);

// --- helix under the inverse-procedure boundary moment -----------------------

struct HelixGeometry {
    double radius = 10.0;
    double height = 50.0;
    double coils = 2.0;

    double slope() const;     ///< height / (2 pi coils radius)
    double length() const;    ///< total rod length
    double alpha_xi() const;  ///< 2 pi coils
    Vec3 point(double xi) const;
    Mat3 frame(double xi) const;
    Vec3 kappa_ref() const;  ///< constant torsion/bending measures
};

int helix_increments(double slenderness);
double helix_tolerance(double slenderness);
RodModel make_helix(const HelixGeometry& geom, double slenderness, int n_el);
VecX helix_initial_q(const HelixGeometry& geom, const Mesh& mesh);
VecX helix_analytic_q(const HelixGeometry& geom, const Mesh& mesh);
StaticRun run_helix_case(const HelixGeometry& geom, double slenderness, int n_el, int increments,
                         double atol);

// --- superimposed rotation of the deformed cantilever -------------------------

struct ObjectivityCase {
    double slenderness = 1e2;
    int total_increments = 500;
    int load_increments = 50;
    double turns = 10.0;
    double atol = 1e-11;
};
struct ObjectivityResult {
    std::vector<double> potential;  ///< per increment
    std::vector<Vec3> psi_tip;
    std::vector<Vec3> r_tip;
    std::vector<Mat3> rot_tip;
    int load_increments = 0;
};
ObjectivityResult run_objectivity_case(const ObjectivityCase& c);

// --- rod bent into a helical form ---------------------------------------------

struct BentHelixCase {
    int n_el = 30;
    int increments = 500;
    double atol = 1e-8;
};
struct BentHelixResult {
    std::vector<double> tip_z;  ///< per increment
    Mesh mesh;
    VecX final_q;
};
BentHelixResult run_bent_helix_case(const BentHelixCase& c);

// --- flexible heavy top ---------------------------------------------------------

struct HeavyTopSetup {
    RodModel model;
    VecX q0, u0;
    double spin = 0.0;      ///< angular rate about the rod axis
    double precession = 0.0;
    double t_end = 0.0;
    double length = 0.5;
};
HeavyTopSetup make_heavy_top(bool soft, double revolutions);

struct HeavyTopCase {
    bool soft = false;
    DynamicSettings::Method method = DynamicSettings::Method::AdaptiveRk;
    double atol = 1e-8;
    double rtol = 1e-8;
    double rho_inf = 0.9;
    double h = 1e-5;
    double revolutions = 1.0;
    int store_every = 20;
};
Trajectory run_heavy_top_case(const HeavyTopCase& c);

Vec3 trajectory_tip(const Trajectory& traj, int node, int sample);
/// Max distance of the tip from the steady-precession circle of radius L in the
/// horizontal plane.
double heavy_top_circle_deviation(const Trajectory& traj, int tip_node, double length);
/// Sup-norm tip disagreement over the common time range, cubic Hermite sampling.
double compare_tip_trajectories(const Trajectory& a, const Trajectory& b, int tip_node);

// --- experiment drivers writing CSV/SVG artifacts -------------------------------

struct RunSummary {
    bool ok = true;
    std::vector<std::string> lines;
};

RunSummary run_cantilever(const Config& cfg, const std::string& out_dir, int jobs = 1);
RunSummary run_helix(const Config& cfg, const std::string& out_dir, int jobs = 1);
RunSummary run_objectivity(const Config& cfg, const std::string& out_dir);
RunSummary run_bent_helix(const Config& cfg, const std::string& out_dir);
RunSummary run_heavy_top(const Config& cfg, const std::string& out_dir);
RunSummary run_liegroup_selftest(const Config& cfg, const std::string& out_dir);

/// Allowed sections and keys of the configuration file.
const std::map<std::string, std::set<std::string>>& config_schema();
/// Default configuration, also printed by the CLI list command.
std::string default_config_text();

}  // namespace rodsim::bench
