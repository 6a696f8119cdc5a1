#include "rodsim/assembly.hpp"

namespace rodsim {

namespace {

struct ElementConstants {
    Twist theta;
    Vec3 gamma_bar, kappa_bar;  // scaled strains, constant over the element
    Vec3 n, m;                  // stress resultants in the cross-section basis
};

ElementConstants element_constants(const ElementFrame& f, const ConstitutiveLaw& law) {
    ElementConstants c;
    c.theta = f.theta;
    const double inv_dxi = 1.0 / f.geom.dxi();
    c.gamma_bar = inv_dxi * f.theta.v;
    c.kappa_bar = inv_dxi * f.theta.omega;
    const double inv_J = 1.0 / f.geom.J;
    const StrainState eps{inv_J * c.gamma_bar, inv_J * c.kappa_bar};
    const StressResultants s = stress_resultants(eps, law);
    c.n = s.n;
    c.m = s.m;
    return c;
}

}  // namespace

Vec12 element_internal_force(const NodalCoords& a, const NodalCoords& b, const ElementGeom& geom,
                             const ConstitutiveLaw& law, const QuadratureRule& quad, Frame frame,
                             const LieConfig& cfg) {
    const ElementFrame f = make_element_frame(a, b, geom, false, cfg);
    const ElementConstants c = element_constants(f, law);
    const double dxi = geom.dxi();

    Vec12 out = Vec12::Zero();
    if (frame == Frame::CrossSection) {
        const Vec3 cross = c.gamma_bar.cross(c.n) + c.kappa_bar.cross(c.m);
        for (const auto& qp : quad.points) {
            const Mat3 rot = f.rotation(qp.t, cfg);
            const Vec3 an = rot * c.n;
            const double w = qp.w;  // times dxi, folded into the shape derivatives
            out.segment<3>(0) += w * an;
            out.segment<3>(6) -= w * an;
            out.segment<3>(3) += w * c.m + (w * dxi) * (1.0 - qp.t) * cross;
            out.segment<3>(9) -= w * c.m - (w * dxi) * qp.t * cross;
        }
    } else {
        // centerline derivative of the test-function side; with this choice a
        // rigid virtual rotation produces exactly zero internal work
        const Vec3 r_xi = (b.r - a.r) / dxi;
        for (const auto& qp : quad.points) {
            const Mat3 rot = f.rotation(qp.t, cfg);
            const Vec3 an = rot * c.n;
            const Vec3 am = rot * c.m;
            const Vec3 cross = r_xi.cross(an);
            const double w = qp.w;
            out.segment<3>(0) += w * an;
            out.segment<3>(6) -= w * an;
            out.segment<3>(3) += w * am + (w * dxi) * (1.0 - qp.t) * cross;
            out.segment<3>(9) -= w * am - (w * dxi) * qp.t * cross;
        }
    }
    return out;
}

Mat12 element_internal_jacobian(const NodalCoords& a, const NodalCoords& b,
                                const ElementGeom& geom, const ConstitutiveLaw& law,
                                const QuadratureRule& quad, const LieConfig& cfg) {
    const ElementFrame f = make_element_frame(a, b, geom, true, cfg);
    const ElementConstants c = element_constants(f, law);
    const double dxi = geom.dxi();
    const double inv_len = 1.0 / (dxi * geom.J);

    const Mat3x12 dgamma_bar = f.dtheta.topRows<3>() / dxi;
    const Mat3x12 dkappa_bar = f.dtheta.bottomRows<3>() / dxi;
    Mat3x12 dn, dm;
    for (int i = 0; i < 3; ++i) {
        dn.row(i) = (law.C_gamma[i] * inv_len) * f.dtheta.row(i);
        dm.row(i) = (law.C_kappa[i] * inv_len) * f.dtheta.row(3 + i);
    }

    const Mat3x12 dcross = skew(c.gamma_bar) * dn - skew(c.n) * dgamma_bar +
                           skew(c.kappa_bar) * dm - skew(c.m) * dkappa_bar;

    Mat12 out = Mat12::Zero();
    for (const auto& qp : quad.points) {
        const Mat3 rot = f.rotation(qp.t, cfg);
        const std::array<Mat3, 12> drot = f.rotation_jacobian(qp.t, cfg);
        Mat3x12 dan = rot * dn;
        for (int k = 0; k < 12; ++k) dan.col(k) += drot[k] * c.n;
        const double w = qp.w;
        out.block<3, 12>(0, 0) += w * dan;
        out.block<3, 12>(6, 0) -= w * dan;
        out.block<3, 12>(3, 0) += w * dm + (w * dxi) * (1.0 - qp.t) * dcross;
        out.block<3, 12>(9, 0) -= w * dm - (w * dxi) * qp.t * dcross;
    }
    return out;
}

Vec12 element_external_force(const ElementGeom& geom, const LoadSpec& loads, const NodalCoords& a,
                             const NodalCoords& b, double t, const QuadratureRule& quad,
                             Frame frame, const LieConfig& cfg) {
    Vec12 out = Vec12::Zero();
    if (!loads.any_distributed()) return out;

    const ElementFrame f = make_element_frame(a, b, geom, false, cfg);
    const double dxi = geom.dxi();
    for (const auto& qp : quad.points) {
        const double xi = geom.xi0 + qp.t * dxi;
        const Pose pose = f.pose(qp.t, cfg);
        const double w = qp.w * dxi * geom.J;
        if (loads.distributed_force) {
            const Vec3 bf = loads.distributed_force(xi, t, pose);
            out.segment<3>(0) += w * (1.0 - qp.t) * bf;
            out.segment<3>(6) += w * qp.t * bf;
        }
        if (loads.distributed_moment) {
            Vec3 cm = loads.distributed_moment(xi, t, pose);
            if (frame == Frame::Inertial) cm = pose.R * cm;
            out.segment<3>(3) += w * (1.0 - qp.t) * cm;
            out.segment<3>(9) += w * qp.t * cm;
        }
    }
    return out;
}

Mat12 element_mass(const NodalCoords& a, const NodalCoords& b, const ElementGeom& geom,
                   const CrossSectionInertia& inertia, const QuadratureRule& quad, Frame frame,
                   const LieConfig& cfg) {
    const ElementFrame f = make_element_frame(a, b, geom, false, cfg);
    const double dxi = geom.dxi();

    Mat12 out = Mat12::Zero();
    for (const auto& qp : quad.points) {
        const double w = qp.w * dxi * geom.J;
        const double nn[2] = {1.0 - qp.t, qp.t};
        Mat3 rot_inertia;  // rotation-slot inertia block at this point
        Mat3 coupling = Mat3::Zero();
        if (frame == Frame::CrossSection) {
            rot_inertia = inertia.I_rho0;
            coupling = f.rotation(qp.t, cfg) * inertia.S_rho0.transpose();
        } else {
            const Mat3 rot = f.rotation(qp.t, cfg);
            rot_inertia = rot * inertia.I_rho0 * rot.transpose();
        }
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) {
                const double s = w * nn[i] * nn[k];
                out.block<3, 3>(6 * i, 6 * k) +=
                    (s * inertia.A_rho0) * Mat3::Identity();
                out.block<3, 3>(6 * i + 3, 6 * k + 3) += s * rot_inertia;
                if (frame == Frame::CrossSection && !inertia.S_rho0.isZero(0.0)) {
                    out.block<3, 3>(6 * i, 6 * k + 3) += s * coupling;
                    out.block<3, 3>(6 * i + 3, 6 * k) += s * coupling.transpose();
                }
            }
    }
    return out;
}

Vec12 element_gyroscopic(const NodalCoords& a, const NodalCoords& b, const NodalVelocity& va,
                         const NodalVelocity& vb, const ElementGeom& geom,
                         const CrossSectionInertia& inertia, const QuadratureRule& quad,
                         Frame frame, const LieConfig& cfg) {
    const ElementFrame f = make_element_frame(a, b, geom, false, cfg);
    const double dxi = geom.dxi();

    Vec12 out = Vec12::Zero();
    for (const auto& qp : quad.points) {
        const double w = qp.w * dxi * geom.J;
        const double nn[2] = {1.0 - qp.t, qp.t};
        const Vec3 omega = nn[0] * va.omega + nn[1] * vb.omega;
        Vec3 moment_term;
        Vec3 force_term = Vec3::Zero();
        if (frame == Frame::CrossSection) {
            moment_term = omega.cross(inertia.I_rho0 * omega);
            if (!inertia.S_rho0.isZero(0.0)) {
                const Mat3 rot = f.rotation(qp.t, cfg);
                force_term = rot * omega.cross(inertia.S_rho0.transpose() * omega);
            }
        } else {
            const Mat3 rot = f.rotation(qp.t, cfg);
            const Mat3 inertia_i = rot * inertia.I_rho0 * rot.transpose();
            moment_term = omega.cross(inertia_i * omega);
        }
        for (int i = 0; i < 2; ++i) {
            out.segment<3>(6 * i) += (w * nn[i]) * force_term;
            out.segment<3>(6 * i + 3) += (w * nn[i]) * moment_term;
        }
    }
    return out;
}

InertialFrameElement inertial_frame_variant(const NodalCoords& a, const NodalCoords& b,
                                            const NodalVelocity& va, const NodalVelocity& vb,
                                            const ElementGeom& geom, const ConstitutiveLaw& law,
                                            const CrossSectionInertia& inertia,
                                            const QuadratureRule& quad, const LieConfig& cfg) {
    InertialFrameElement out;
    out.f_int = element_internal_force(a, b, geom, law, quad, Frame::Inertial, cfg);
    out.M = element_mass(a, b, geom, inertia, quad, Frame::Inertial, cfg);
    out.f_gyr = element_gyroscopic(a, b, va, vb, geom, inertia, quad, Frame::Inertial, cfg);
    return out;
}

}  // namespace rodsim
