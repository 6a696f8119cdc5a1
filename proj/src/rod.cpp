#include "rodsim/rod.hpp"

#include <cmath>
#include <numbers>

namespace rodsim {

namespace {

// d theta / d q^e for theta = log_se3(p0^{-1} p1), chained through the
// closed-form derivatives of the nodal exponentials and the logarithm.
Mat6x12 relative_twist_jacobian(const Pose& p0, const Pose& p1, const Tensor333& dR0,
                                const Tensor333& dR1, const Vec3& r0, const LieConfig& cfg) {
    const Pose h01 = p0.inverse() * p1;
    const Tensor644 dlog = d_log_se3(h01, cfg);
    const Mat3 R0t = p0.R.transpose();
    const Mat4 h1m = p1.as_mat4();

    Mat6x12 dtheta = Mat6x12::Zero();
    Mat4 dh;  // derivative of h01 w.r.t. one element coordinate
    for (int k = 0; k < 12; ++k) {
        dh.setZero();
        if (k < 3) {
            dh.topRightCorner<3, 1>() = -R0t.col(k);
        } else if (k < 6) {
            const int kk = k - 3;
            Mat3 dR0t;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) dR0t(i, j) = dR0(j, i, kk);
            Mat4 dh0inv = Mat4::Zero();
            dh0inv.topLeftCorner<3, 3>() = dR0t;
            dh0inv.topRightCorner<3, 1>() = -dR0t * r0;
            dh = dh0inv * h1m;
            dh.row(3).setZero();
        } else if (k < 9) {
            dh.topRightCorner<3, 1>() = R0t.col(k - 6);
        } else {
            const int kk = k - 9;
            Mat3 dR1k;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) dR1k(i, j) = dR1(i, j, kk);
            dh.topLeftCorner<3, 3>() = R0t * dR1k;
        }
        for (int m = 0; m < 6; ++m) {
            double acc = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 4; ++j) acc += dlog(m, i, j) * dh(i, j);
            dtheta(m, k) = acc;
        }
    }
    return dtheta;
}

}  // namespace

Mesh Mesh::uniform(int n_el, double length) {
    Mesh m;
    m.xi.resize(n_el + 1);
    for (int i = 0; i <= n_el; ++i) m.xi[i] = static_cast<double>(i) / n_el;
    m.J_elem.assign(n_el, length);
    return m;
}

int Mesh::element_of(double x) const {
    const int n = n_el();
    for (int e = 0; e < n - 1; ++e)
        if (x < xi[e + 1]) return e;
    return n - 1;
}

Pose node_pose(const NodalCoords& n, const LieConfig& cfg) { return {exp_so3(n.psi, cfg), n.r}; }

Twist relative_twist(const Pose& h0, const Pose& h1, const LieConfig& cfg) {
    return log_se3(h0.inverse() * h1, cfg);
}

Pose interpolate_pose(double xi, const NodalCoords& a, const NodalCoords& b,
                      const ElementGeom& geom, const LieConfig& cfg) {
    const Pose p0 = node_pose(a, cfg);
    const Twist theta = relative_twist(p0, node_pose(b, cfg), cfg);
    return p0 * exp_se3(theta.scaled(geom.n1(xi)), cfg);
}

Pose interpolate_pose_symmetric(double xi, const NodalCoords& a, const NodalCoords& b,
                                const ElementGeom& geom, const LieConfig& cfg) {
    const Pose p0 = node_pose(a, cfg);
    const Pose p1 = node_pose(b, cfg);
    const Twist theta = relative_twist(p0, p1, cfg);
    const Pose mid = p0 * exp_se3(theta.scaled(0.5), cfg);
    const Twist t0 = relative_twist(mid, p0, cfg);
    const Twist t1 = relative_twist(mid, p1, cfg);
    const double s0 = geom.n0(xi);
    const double s1 = geom.n1(xi);
    const Twist blend{s0 * t0.v + s1 * t1.v, s0 * t0.omega + s1 * t1.omega};
    return mid * exp_se3(blend, cfg);
}

StrainState element_strains(const NodalCoords& a, const NodalCoords& b, const ElementGeom& geom,
                            const LieConfig& cfg) {
    const Twist theta = relative_twist(node_pose(a, cfg), node_pose(b, cfg), cfg);
    const double scale = 1.0 / (geom.dxi() * geom.J);
    return {scale * theta.v, scale * theta.omega};
}

StressResultants stress_resultants(const StrainState& eps, const ConstitutiveLaw& law) {
    return {law.C_gamma.cwiseProduct(eps.gamma - law.gamma0),
            law.C_kappa.cwiseProduct(eps.kappa - law.kappa0)};
}

double strain_energy_density(const StrainState& eps, const ConstitutiveLaw& law) {
    const Vec3 dg = eps.gamma - law.gamma0;
    const Vec3 dk = eps.kappa - law.kappa0;
    return 0.5 * dg.dot(law.C_gamma.cwiseProduct(dg)) + 0.5 * dk.dot(law.C_kappa.cwiseProduct(dk));
}

Vec3 complement_update(const Vec3& psi) {
    const double n = psi.norm();
    if (n < std::numbers::pi) return psi;
    return (1.0 - 2.0 * std::numbers::pi / n) * psi;
}

Mat6 nodal_kinematic_map(const NodalCoords& n, const LieConfig& cfg) {
    Mat6 b = Mat6::Identity();
    b.bottomRightCorner<3, 3>() = inv_tangent_so3(n.psi, cfg);
    return b;
}

ElementFrame make_element_frame(const NodalCoords& a, const NodalCoords& b,
                                const ElementGeom& geom, bool with_jacobian,
                                const LieConfig& cfg) {
    ElementFrame f;
    f.geom = geom;
    f.p0 = node_pose(a, cfg);
    f.p1 = node_pose(b, cfg);
    f.theta = relative_twist(f.p0, f.p1, cfg);
    if (with_jacobian) {
        f.has_jacobian = true;
        f.dR0 = d_exp_so3(a.psi, cfg);
        const Tensor333 dR1 = d_exp_so3(b.psi, cfg);
        f.dtheta = relative_twist_jacobian(f.p0, f.p1, f.dR0, dR1, a.r, cfg);
    }
    return f;
}

Mat3 ElementFrame::rotation(double s, const LieConfig& cfg) const {
    return p0.R * exp_so3(Vec3(s * theta.omega), cfg);
}

Pose ElementFrame::pose(double s, const LieConfig& cfg) const {
    return p0 * exp_se3(theta.scaled(s), cfg);
}

std::array<Mat3, 12> ElementFrame::rotation_jacobian(double s, const LieConfig& cfg) const {
    const Mat3 e = exp_so3(Vec3(s * theta.omega), cfg);
    const Tensor333 de = d_exp_so3(Vec3(s * theta.omega), cfg);
    std::array<Mat3, 12> out;
    for (int k = 0; k < 12; ++k) {
        Mat3 dE = Mat3::Zero();
        for (int m = 0; m < 3; ++m) {
            const double dw = s * dtheta(3 + m, k);
            if (dw == 0.0) continue;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) dE(i, j) += de(i, j, m) * dw;
        }
        out[k] = p0.R * dE;
        if (k >= 3 && k < 6) {
            const int kk = k - 3;
            Mat3 dR0k;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) dR0k(i, j) = dR0(i, j, kk);
            out[k] += dR0k * e;
        }
    }
    return out;
}

Tensor4412 pose_jacobian(double xi, const NodalCoords& a, const NodalCoords& b,
                         const ElementGeom& geom, const LieConfig& cfg) {
    const ElementFrame f = make_element_frame(a, b, geom, true, cfg);
    const double s = geom.n1(xi);
    const Pose e = exp_se3(f.theta.scaled(s), cfg);
    const Tensor446 dexp = d_exp_se3(f.theta.scaled(s), cfg);
    const Mat4 h0 = f.p0.as_mat4();
    const Mat4 em = e.as_mat4();

    Tensor4412 out;
    out.set_zero();
    for (int k = 0; k < 12; ++k) {
        Mat4 dh0 = Mat4::Zero();
        if (k < 3) {
            dh0(k, 3) = 1.0;
        } else if (k < 6) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) dh0(i, j) = f.dR0(i, j, k - 3);
        }
        Mat4 dh = dh0 * em;
        Mat4 dexp_k = Mat4::Zero();
        for (int m = 0; m < 6; ++m) {
            const double dw = s * f.dtheta(m, k);
            if (dw == 0.0) continue;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) dexp_k(i, j) += dexp(i, j, m) * dw;
        }
        dh += h0 * dexp_k;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out(i, j, k) = dh(i, j);
    }
    return out;
}

Mat6x12 strain_jacobian(const NodalCoords& a, const NodalCoords& b, const ElementGeom& geom,
                        const LieConfig& cfg) {
    const ElementFrame f = make_element_frame(a, b, geom, true, cfg);
    return f.dtheta / (geom.dxi() * geom.J);
}

NodalCoords node_from_q(const VecX& q, int node) {
    return {q.segment<3>(6 * node), q.segment<3>(6 * node + 3)};
}

void set_node_in_q(VecX& q, int node, const NodalCoords& n) {
    q.segment<3>(6 * node) = n.r;
    q.segment<3>(6 * node + 3) = n.psi;
}

NodalVelocity velocity_from_u(const VecX& u, int node) {
    return {u.segment<3>(6 * node), u.segment<3>(6 * node + 3)};
}

}  // namespace rodsim
