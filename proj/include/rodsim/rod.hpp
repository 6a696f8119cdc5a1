#pragma once

#include <array>
#include <vector>

#include "rodsim/se3.hpp"
#include "rodsim/types.hpp"

namespace rodsim {

/// Nodal generalized coordinates: centerline point and total rotation vector.
struct NodalCoords {
    Vec3 r = Vec3::Zero();
    Vec3 psi = Vec3::Zero();
};

/// Nodal minimal velocities: centerline velocity (inertial basis) and angular
/// velocity (cross-section basis in the default formulation).
struct NodalVelocity {
    Vec3 v = Vec3::Zero();
    Vec3 omega = Vec3::Zero();
};

/// One element interval of the parameter space with its reference length density.
struct ElementGeom {
    double xi0 = 0.0;
    double xi1 = 1.0;
    double J = 1.0;

    double dxi() const { return xi1 - xi0; }
    double n0(double xi) const { return (xi1 - xi) / dxi(); }
    double n1(double xi) const { return (xi - xi0) / dxi(); }
    double dn1() const { return 1.0 / dxi(); }  // dn0 = -dn1
};

/// Partition of [0, 1] into elements, each with a constant reference length density.
struct Mesh {
    std::vector<double> xi;      ///< n_el + 1 strictly increasing bounds, first 0, last 1
    std::vector<double> J_elem;  ///< per-element reference length density, > 0

    static Mesh uniform(int n_el, double length);

    int n_el() const { return static_cast<int>(J_elem.size()); }
    int n_nodes() const { return n_el() + 1; }
    int n_dofs() const { return 6 * n_nodes(); }
    ElementGeom elem(int e) const { return {xi[e], xi[e + 1], J_elem[e]}; }
    int element_of(double x) const;
};

/// Constant dilatation/shear and torsion/bending measures of one element.
struct StrainState {
    Vec3 gamma = Vec3::Zero();
    Vec3 kappa = Vec3::Zero();
};

/// Diagonal quadratic material law with reference strains.
struct ConstitutiveLaw {
    Vec3 C_gamma = Vec3::Ones();        ///< diag(k_e, k_s, k_s)
    Vec3 C_kappa = Vec3::Ones();        ///< diag(k_t, k_by, k_bz)
    Vec3 gamma0 = Vec3(1.0, 0.0, 0.0);  ///< reference dilatation/shear
    Vec3 kappa0 = Vec3::Zero();         ///< reference torsion/bending
};

struct StressResultants {
    Vec3 n = Vec3::Zero();  ///< force conjugate to gamma
    Vec3 m = Vec3::Zero();  ///< moment conjugate to kappa
};

/// Cross-section inertia densities per reference length.
struct CrossSectionInertia {
    double A_rho0 = 1.0;
    Mat3 S_rho0 = Mat3::Zero();  ///< vanishes for a centroidal centerline
    Mat3 I_rho0 = Mat3::Identity();
};

Pose node_pose(const NodalCoords& n, const LieConfig& cfg = {});

/// Twist theta with exp_se3(theta) = h0^{-1} h1. Throws AngleAtPi when the
/// relative rotation angle reaches pi.
Twist relative_twist(const Pose& h0, const Pose& h1, const LieConfig& cfg = {});

/// Geodesic two-node interpolation between the nodal poses, exact at the ends.
Pose interpolate_pose(double xi, const NodalCoords& a, const NodalCoords& b,
                      const ElementGeom& geom, const LieConfig& cfg = {});

/// Midpoint-frame variant of the interpolation; identical geodesic for two nodes.
Pose interpolate_pose_symmetric(double xi, const NodalCoords& a, const NodalCoords& b,
                                const ElementGeom& geom, const LieConfig& cfg = {});

/// Element strains, constant over the element: theta / (dxi * J).
StrainState element_strains(const NodalCoords& a, const NodalCoords& b, const ElementGeom& geom,
                            const LieConfig& cfg = {});

StressResultants stress_resultants(const StrainState& eps, const ConstitutiveLaw& law);

/// Quadratic strain energy per reference length.
double strain_energy_density(const StrainState& eps, const ConstitutiveLaw& law);

/// Equivalent rotation vector of norm below pi (shifts by a full turn when needed).
Vec3 complement_update(const Vec3& psi);

/// Block-diagonal map from nodal minimal velocities to coordinate rates.
Mat6 nodal_kinematic_map(const NodalCoords& n, const LieConfig& cfg = {});

/// d(pose as 4x4)_ij / d(q^e)_k at parameter xi, with q^e = (r_a, psi_a, r_b, psi_b).
Tensor4412 pose_jacobian(double xi, const NodalCoords& a, const NodalCoords& b,
                         const ElementGeom& geom, const LieConfig& cfg = {});

/// d(gamma, kappa) / d(q^e), rows ordered (gamma, kappa).
Mat6x12 strain_jacobian(const NodalCoords& a, const NodalCoords& b, const ElementGeom& geom,
                        const LieConfig& cfg = {});

/// Precomputed element interpolation state shared by force and stiffness kernels.
struct ElementFrame {
    ElementGeom geom;
    Pose p0, p1;
    Twist theta;
    bool has_jacobian = false;
    Mat6x12 dtheta = Mat6x12::Zero();  ///< d theta / d q^e
    Tensor333 dR0;                     ///< d exp of the first nodal rotation vector

    /// Rotation at local coordinate s = N1(xi) in [0, 1].
    Mat3 rotation(double s, const LieConfig& cfg = {}) const;

    /// Pose at local coordinate s.
    Pose pose(double s, const LieConfig& cfg = {}) const;

    /// d(rotation at s) / d(q^e)_k for all twelve element coordinates.
    std::array<Mat3, 12> rotation_jacobian(double s, const LieConfig& cfg = {}) const;
};

ElementFrame make_element_frame(const NodalCoords& a, const NodalCoords& b,
                                const ElementGeom& geom, bool with_jacobian,
                                const LieConfig& cfg = {});

// Global coordinate vector accessors, node-major with (r, psi) per node.
NodalCoords node_from_q(const VecX& q, int node);
void set_node_in_q(VecX& q, int node, const NodalCoords& n);
NodalVelocity velocity_from_u(const VecX& u, int node);

}  // namespace rodsim
