#pragma once

#include <functional>
#include <optional>

#include "rodsim/quadrature.hpp"
#include "rodsim/rod.hpp"

namespace rodsim {

/// Basis in which nodal virtual rotations and angular velocities live.
/// CrossSection is the default formulation; Inertial is the conservation-friendly
/// variant with a configuration-dependent mass matrix.
enum class Frame { CrossSection, Inertial };

/// External load description. Distributed densities are per reference arc length;
/// forces in the inertial basis, moments in the cross-section basis. Callables
/// receive the current pose so follower loads can be expressed directly.
struct LoadSpec {
    using Distributed = std::function<Vec3(double xi, double t, const Pose&)>;
    using PointLoad = std::function<Vec3(double t, const Pose&)>;

    Distributed distributed_force;
    Distributed distributed_moment;
    PointLoad point_force[2];   ///< at xi = 0 and xi = 1
    PointLoad point_moment[2];  ///< at xi = 0 and xi = 1

    bool any_distributed() const { return distributed_force || distributed_moment; }
};

// --- element kernels (coordinates ordered (r_a, psi_a, r_b, psi_b)) ---------

Vec12 element_internal_force(const NodalCoords& a, const NodalCoords& b, const ElementGeom& geom,
                             const ConstitutiveLaw& law, const QuadratureRule& quad,
                             Frame frame = Frame::CrossSection, const LieConfig& cfg = {});

/// Linearization of the internal force in the cross-section formulation;
/// non-symmetric in general.
Mat12 element_internal_jacobian(const NodalCoords& a, const NodalCoords& b,
                                const ElementGeom& geom, const ConstitutiveLaw& law,
                                const QuadratureRule& quad, const LieConfig& cfg = {});

Vec12 element_external_force(const ElementGeom& geom, const LoadSpec& loads, const NodalCoords& a,
                             const NodalCoords& b, double t, const QuadratureRule& quad,
                             Frame frame = Frame::CrossSection, const LieConfig& cfg = {});

Mat12 element_mass(const NodalCoords& a, const NodalCoords& b, const ElementGeom& geom,
                   const CrossSectionInertia& inertia, const QuadratureRule& quad,
                   Frame frame = Frame::CrossSection, const LieConfig& cfg = {});

Vec12 element_gyroscopic(const NodalCoords& a, const NodalCoords& b, const NodalVelocity& va,
                         const NodalVelocity& vb, const ElementGeom& geom,
                         const CrossSectionInertia& inertia, const QuadratureRule& quad,
                         Frame frame = Frame::CrossSection, const LieConfig& cfg = {});

/// Internal force, mass and gyroscopic force of the inertial-frame variant in one call.
struct InertialFrameElement {
    Vec12 f_int;
    Mat12 M;
    Vec12 f_gyr;
};
InertialFrameElement inertial_frame_variant(const NodalCoords& a, const NodalCoords& b,
                                            const NodalVelocity& va, const NodalVelocity& vb,
                                            const ElementGeom& geom, const ConstitutiveLaw& law,
                                            const CrossSectionInertia& inertia,
                                            const QuadratureRule& quad, const LieConfig& cfg = {});

// --- global assembly (deterministic scatter-add in element order) -----------

void scatter_add(VecX& global, int elem, const Vec12& local);
void scatter_add(MatX& global, int elem, const Mat12& local);

VecX assemble_internal_force(const Mesh& mesh, const ConstitutiveLaw& law, const VecX& q,
                             const QuadratureRule& quad, Frame frame = Frame::CrossSection,
                             const LieConfig& cfg = {});

MatX assemble_internal_jacobian(const Mesh& mesh, const ConstitutiveLaw& law, const VecX& q,
                                const QuadratureRule& quad, const LieConfig& cfg = {});

/// Distributed loads plus the boundary point loads added to the end-node slots.
VecX assemble_external_force(const Mesh& mesh, const LoadSpec& loads, const VecX& q, double t,
                             const QuadratureRule& quad, Frame frame = Frame::CrossSection,
                             const LieConfig& cfg = {});

/// Configuration dependence of the external forces (follower loads), by central
/// differences of the opaque load callables.
MatX assemble_external_jacobian(const Mesh& mesh, const LoadSpec& loads, const VecX& q, double t,
                                const QuadratureRule& quad, Frame frame = Frame::CrossSection,
                                const LieConfig& cfg = {});

MatX assemble_mass(const Mesh& mesh, const CrossSectionInertia& inertia, const VecX& q,
                   const QuadratureRule& quad, Frame frame = Frame::CrossSection,
                   const LieConfig& cfg = {});

VecX assemble_gyroscopic(const Mesh& mesh, const CrossSectionInertia& inertia, const VecX& q,
                         const VecX& u, const QuadratureRule& quad,
                         Frame frame = Frame::CrossSection, const LieConfig& cfg = {});

/// Exact gradient of the total strain energy with respect to q.
VecX potential_energy_gradient(const Mesh& mesh, const ConstitutiveLaw& law, const VecX& q,
                               const LieConfig& cfg = {});

/// Global kinematic map applied blockwise: qdot = B(q) u.
VecX kinematic_ode(const Mesh& mesh, const VecX& q, const VecX& u, Frame frame = Frame::CrossSection,
                   const LieConfig& cfg = {});

struct Diagnostics {
    double kinetic = 0.0;
    double potential = 0.0;
    Vec3 linear_momentum = Vec3::Zero();
    std::optional<Vec3> angular_momentum;  ///< available in the inertial-frame variant only

    double total_energy() const { return kinetic + potential; }
};

Diagnostics compute_diagnostics(const Mesh& mesh, const ConstitutiveLaw& law,
                                const CrossSectionInertia& inertia, const VecX& q, const VecX& u,
                                const QuadratureRule& quad, Frame frame = Frame::CrossSection,
                                const LieConfig& cfg = {});

}  // namespace rodsim
