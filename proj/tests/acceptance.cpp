// Acceptance suite: drives the full set of verification criteria end to end and
// prints one PASS/FAIL line per criterion.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "rodsim/experiments.hpp"
#include "rodsim/series_oracle.hpp"
#include "rodsim/solvers.hpp"

using namespace rodsim;
using namespace rodsim::bench;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("%s: criterion %d — %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
    if (!ok) ++g_failures;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4e", v);
    return buf;
}

std::mt19937_64 rng(0xacce97edULL);

Vec3 random_unit() {
    std::normal_distribution<double> d(0.0, 1.0);
    Vec3 v(d(rng), d(rng), d(rng));
    while (v.norm() < 1e-8) v = Vec3(d(rng), d(rng), d(rng));
    return v.normalized();
}

double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const int samples = 50;
    double round_trip = 0, tt_inv = 0, transpose_sym = 0, vs_series = 0, fd_err = 0;

    auto tensor_fd = [&](auto&& f, auto&& dtensor, const Vec3& psi) {
        const Tensor333 d = dtensor(psi);
        const double step = 1e-6;
        double worst = 0.0, scale = 1.0;
        for (int k = 0; k < 3; ++k) {
            Vec3 p = psi, m = psi;
            p[k] += step;
            m[k] -= step;
            const Mat3 diff = (f(p) - f(m)) / (2 * step);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    worst = std::max(worst, std::abs(diff(i, j) - d(i, j, k)));
                    scale = std::max(scale, std::abs(d(i, j, k)));
                }
        }
        return worst / scale;
    };

    for (int s = 0; s < samples; ++s) {
        const Vec3 psi = uniform(1e-3, kPi - 0.05) * random_unit();
        round_trip = std::max(round_trip, (log_so3(exp_so3(psi)) - psi).norm());
        const Mat3 t = tangent_so3(psi);
        tt_inv = std::max(tt_inv,
                          (t * inv_tangent_so3(psi) - Mat3::Identity()).cwiseAbs().maxCoeff());
        transpose_sym = std::max(
            transpose_sym, (tangent_so3(Vec3(-psi)) - t.transpose()).cwiseAbs().maxCoeff());

        const Vec3 small = uniform(1e-3, 2.0) * random_unit();
        vs_series = std::max(
            vs_series, (exp_so3(small) - series::exp(skew(small), 40)).cwiseAbs().maxCoeff());
        vs_series = std::max(
            vs_series, (tangent_so3(small) - series::tangent(small, series::Algebra::So3, 40))
                           .cwiseAbs()
                           .maxCoeff());
        vs_series = std::max(vs_series, (inv_tangent_so3(small) -
                                         series::inv_tangent(small, series::Algebra::So3, 33))
                                            .cwiseAbs()
                                            .maxCoeff());

        const Vec3 mid = uniform(0.05, 2.2) * random_unit();
        fd_err = std::max(fd_err, tensor_fd([](const Vec3& p) { return exp_so3(p); },
                                            [](const Vec3& p) { return d_exp_so3(p); }, mid));
        fd_err = std::max(fd_err, tensor_fd([](const Vec3& p) { return tangent_so3(p); },
                                            [](const Vec3& p) { return d_tangent_so3(p); }, mid));
        fd_err =
            std::max(fd_err, tensor_fd([](const Vec3& p) { return inv_tangent_so3(p); },
                                       [](const Vec3& p) { return d_inv_tangent_so3(p); }, mid));
        // logarithm derivative via the rotation built from mid
        {
            const Mat3 a = exp_so3(mid);
            const Tensor333 d = d_log_so3(a);
            const double step = 1e-6;
            double worst = 0.0, scale = 1.0;
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    Mat3 p = a, m = a;
                    p(j, k) += step;
                    m(j, k) -= step;
                    const Vec3 diff = (log_so3(p) - log_so3(m)) / (2 * step);
                    for (int i = 0; i < 3; ++i) {
                        worst = std::max(worst, std::abs(diff[i] - d(i, j, k)));
                        scale = std::max(scale, std::abs(d(i, j, k)));
                    }
                }
            fd_err = std::max(fd_err, worst / scale);
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = round_trip < 1e-10 && tt_inv < 1e-10 && transpose_sym < 1e-10 &&
                    vs_series < 1e-11 && fd_err < 1e-5 && elapsed < 10.0;
    report(1, ok,
           "lie-group kernels: round trip " + sci(round_trip) + ", T*Tinv " + sci(tt_inv) +
               ", transpose " + sci(transpose_sym) + ", series " + sci(vs_series) +
               ", derivatives-vs-fd " + sci(fd_err) + ", " + sci(elapsed) + " s");
}

// ---------------------------------------------------------------- criterion 2

void criterion_2() {
    HelixGeometry geom;
    double strain_err = 0.0;
    const double length = geom.length();
    const Vec3 kappa_ref = geom.kappa_ref();
    for (int e = 0; e < 5; ++e) {
        const double x0 = e / 5.0, x1 = (e + 1) / 5.0;
        const NodalCoords a{geom.point(x0), log_so3(geom.frame(x0))};
        const NodalCoords b{geom.point(x1), log_so3(geom.frame(x1))};
        const StrainState eps = element_strains(a, b, {x0, x1, length});
        strain_err = std::max(strain_err, (eps.gamma - Vec3(1, 0, 0)).norm());
        strain_err = std::max(strain_err, (eps.kappa - kappa_ref).norm());
    }

    // quarter circle: sampled strains constant along the element
    const NodalCoords qa{Vec3::Zero(), Vec3(0, -kPi / 2, 0)};
    const NodalCoords qb{Vec3(1, 0, 1), Vec3::Zero()};
    const ElementGeom qgeom{0.0, 1.0, 1.0};
    const StrainState ref = element_strains(qa, qb, qgeom);
    double constancy = 0.0;
    const double h = 1e-6;
    for (int i = 1; i < 10; ++i) {
        const double xi = i / 10.0;
        const Pose p = interpolate_pose(xi, qa, qb, qgeom);
        const Pose pp = interpolate_pose(xi + h, qa, qb, qgeom);
        const Pose pm = interpolate_pose(xi - h, qa, qb, qgeom);
        const Vec3 gamma = p.R.transpose() * (pp.r - pm.r) / (2 * h);
        const Mat3 sk = p.R.transpose() * (pp.R - pm.R) / (2 * h);
        const Vec3 kappa =
            0.5 * Vec3(sk(2, 1) - sk(1, 2), sk(0, 2) - sk(2, 0), sk(1, 0) - sk(0, 1));
        constancy = std::max(constancy, (gamma - ref.gamma).norm());
        constancy = std::max(constancy, (kappa - ref.kappa).norm());
    }
    const bool ok = strain_err < 1e-10 && constancy < 1e-8;
    report(2, ok,
           "exact strain representability: helix " + sci(strain_err) + " (tol 1e-10), "
           "quarter-circle constancy " +
               sci(constancy) + " (tol 1e-8)");
}

// ------------------------------------------------------- criteria 3 and 4

std::string three_digits(double v) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

void criteria_3_and_4() {
    const std::vector<double> rhos = {1e1, 1e2, 1e3, 1e4};
    struct Row {
        ErrorReport coarse, fine;
        StaticRun reference;
    };
    std::vector<Row> rows(rhos.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < rhos.size(); i = next.fetch_add(1)) {
            const double tol = cantilever_tolerance(rhos[i]);
            rows[i].reference = run_cantilever_case(rhos[i], 512, 20, tol);
            const StaticRun coarse = run_cantilever_case(rhos[i], 1, 20, tol);
            const StaticRun fine = run_cantilever_case(rhos[i], 64, 20, tol);
            rows[i].coarse =
                error_metrics(coarse.mesh, coarse.solution.final_q(), rows[i].reference.mesh,
                              rows[i].reference.solution.final_q(), 100);
            rows[i].fine =
                error_metrics(fine.mesh, fine.solution.final_q(), rows[i].reference.mesh,
                              rows[i].reference.solution.final_q(), 100);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < 4; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    bool pattern_ok = true;
    std::string detail;
    auto check_column = [&](const char* name, auto getter) {
        const std::string first = three_digits(getter(rows[0]));
        bool equal = true;
        std::string values = first;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const std::string v = three_digits(getter(rows[i]));
            values += " " + v;
            equal = equal && v == first;
        }
        pattern_ok = pattern_ok && equal;
        detail += std::string(name) + " [" + values + (equal ? "] " : "] MISMATCH ");
    };
    check_column("e_r(1)", [](const Row& r) { return r.coarse.e_r; });
    check_column("e_psi(1)", [](const Row& r) { return r.coarse.e_psi; });
    check_column("e_r(64)", [](const Row& r) { return r.fine.e_r; });
    check_column("e_psi(64)", [](const Row& r) { return r.fine.e_psi; });
    const bool coarse_order = rows[0].coarse.e_r > 1.0;  // O(1) error with one element
    report(3, pattern_ok && coarse_order, "locking pattern across slenderness: " + detail);

    // convergence order at rho = 1e3 against the 512-element reference
    const Row& conv_ref = rows[2];
    std::vector<double> log_n, log_er, log_epsi;
    for (int n_el : {4, 8, 16, 32, 64}) {
        const StaticRun run = run_cantilever_case(1e3, n_el, 20, cantilever_tolerance(1e3));
        const ErrorReport rep =
            error_metrics(run.mesh, run.solution.final_q(), conv_ref.reference.mesh,
                          conv_ref.reference.solution.final_q(), 100);
        log_n.push_back(std::log(n_el));
        log_er.push_back(std::log(rep.e_r));
        log_epsi.push_back(std::log(rep.e_psi));
    }
    auto slope = [&](const std::vector<double>& y) {
        const int n = static_cast<int>(log_n.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = 0; i < n; ++i) {
            sx += log_n[i];
            sy += y[i];
            sxx += log_n[i] * log_n[i];
            sxy += log_n[i] * y[i];
        }
        return -(n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    const double slope_r = slope(log_er), slope_psi = slope(log_epsi);
    const bool ok4 = slope_r > 1.8 && slope_r < 2.2 && slope_psi > 1.8 && slope_psi < 2.2;
    report(4, ok4,
           "second-order spatial convergence: slope e_r " + sci(slope_r) + ", slope e_psi " +
               sci(slope_psi) + " (window [1.8, 2.2])");
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
    ObjectivityCase c;
    const ObjectivityResult res = run_objectivity_case(c);
    const int n0 = res.load_increments;

    const double u_ref = res.potential[n0 - 1];
    double u_var = 0.0;
    for (std::size_t i = n0; i < res.potential.size(); ++i)
        u_var = std::max(u_var, std::abs(res.potential[i] - u_ref) / u_ref);

    int jumps = 0;
    double pose_step = 0.0;       // rotation-matrix continuity of the tip pose
    double axis_distance_var = 0.0;
    const double dphi = 2.0 * kPi * c.turns / (c.total_increments - n0);
    const double dist_ref = std::hypot(res.r_tip[n0 - 1].y(), res.r_tip[n0 - 1].z());
    for (std::size_t i = n0; i < res.psi_tip.size(); ++i) {
        if ((res.psi_tip[i] - res.psi_tip[i - 1]).norm() > 1.0) ++jumps;
        // pose continuity: one increment advances the tip by the prescribed angle
        const Mat3 g = exp_so3(Vec3(dphi, 0, 0));
        pose_step = std::max(pose_step,
                             (res.rot_tip[i] - g * res.rot_tip[i - 1]).cwiseAbs().maxCoeff());
        pose_step =
            std::max(pose_step, (res.r_tip[i] - g * res.r_tip[i - 1]).norm() / dist_ref);
        axis_distance_var = std::max(
            axis_distance_var,
            std::abs(std::hypot(res.r_tip[i].y(), res.r_tip[i].z()) - dist_ref) / dist_ref);
    }

    // ten full turns return the tip to the loaded pose
    const double final_gap =
        (res.r_tip.back() - res.r_tip[n0 - 1]).norm() +
        (res.rot_tip.back() - res.rot_tip[n0 - 1]).cwiseAbs().maxCoeff();

    const bool ok = u_var < 1e-8 && jumps >= 5 && pose_step < 1e-6 &&
                    axis_distance_var < 1e-8 && final_gap < 1e-6;
    report(5, ok,
           "objectivity: energy variation " + sci(u_var) + " (tol 1e-8), rotation-vector jumps " +
               std::to_string(jumps) + ", pose continuity " + sci(pose_step) +
               ", axis distance variation " + sci(axis_distance_var) + ", ten-turn closure " +
               sci(final_gap));
}

// ---------------------------------------------------------------- criterion 6

void criterion_6() {
    BentHelixCase c;
    bool converged = true;
    BentHelixResult res;
    try {
        res = run_bent_helix_case(c);
    } catch (const Error&) {
        converged = false;
    }
    if (!converged) {
        report(6, false, "bent helix: solver did not converge");
        return;
    }

    // sign changes with decaying amplitude after the second extremum
    int sign_changes = 0;
    for (std::size_t i = 1; i < res.tip_z.size(); ++i)
        if (res.tip_z[i] * res.tip_z[i - 1] < 0.0) ++sign_changes;
    std::vector<double> extrema;
    for (std::size_t i = 1; i + 1 < res.tip_z.size(); ++i) {
        const double a = res.tip_z[i] - res.tip_z[i - 1];
        const double b = res.tip_z[i + 1] - res.tip_z[i];
        if (a * b < 0.0) extrema.push_back(std::abs(res.tip_z[i]));
    }
    bool decaying = extrema.size() >= 4;
    for (std::size_t i = 2; i + 1 < extrema.size(); ++i)
        decaying = decaying && extrema[i + 1] < extrema[i];

    // the strain field of the discretization is a step profile: sampling it at
    // several stations inside each element gives exactly zero variance
    auto strain_at = [&](double xi) {
        const int e = res.mesh.element_of(xi);
        return element_strains(node_from_q(res.final_q, e), node_from_q(res.final_q, e + 1),
                               res.mesh.elem(e));
    };
    double variance = 0.0;
    for (int e = 0; e < res.mesh.n_el(); ++e) {
        const ElementGeom g = res.mesh.elem(e);
        Vec6 first;
        bool have_first = false;
        for (double s : {0.2, 0.5, 0.8}) {
            const StrainState eps = strain_at(g.xi0 + s * g.dxi());
            Vec6 v;
            v << eps.gamma, eps.kappa;
            if (!have_first) {
                first = v;
                have_first = true;
            }
            variance = std::max(variance, (v - first).squaredNorm());
        }
    }

    const bool ok = sign_changes >= 5 && decaying && variance == 0.0;
    report(6, ok,
           "bent helix: 30 elements converged, " + std::to_string(sign_changes) +
               " tip sign changes, amplitude decay " + (decaying ? "yes" : "NO") +
               ", strain profile variance " + sci(variance));
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
    // bound frozen from the fine-tolerance calibration run (atol = rtol = 1e-10
    // gives a maximum circle deviation of 2.5312e-4, set by the physical
    // flexibility of the stiff rod, not by integration error)
    const double calibration_bound = 3.17e-4;

    HeavyTopCase rk;
    const Trajectory t_rk = run_heavy_top_case(rk);
    const double dev_stiff = heavy_top_circle_deviation(t_rk, 1, 0.5);

    HeavyTopCase ga;
    ga.method = DynamicSettings::Method::GeneralizedAlpha;
    ga.store_every = 10;
    const Trajectory t_ga = run_heavy_top_case(ga);
    const double cross = compare_tip_trajectories(t_rk, t_ga, 1);

    HeavyTopCase soft;
    soft.soft = true;
    const Trajectory t_soft = run_heavy_top_case(soft);
    const double dev_soft = heavy_top_circle_deviation(t_soft, 1, 0.5);

    const bool ok = dev_stiff < calibration_bound && cross < 1e-5 &&
                    dev_soft > 10.0 * calibration_bound;
    report(7, ok,
           "heavy top: stiff deviation " + sci(dev_stiff) + " (bound " + sci(calibration_bound) +
               "), rk-vs-alpha tip " + sci(cross) + " (tol 1e-5), soft deviation " +
               sci(dev_soft));
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
    // free flight: no loads, free-free rod, tumbling with a centre-of-mass drift
    RodModel model;
    const double length = 1.0;
    model.mesh = Mesh::uniform(4, length);
    model.law.C_gamma = Vec3(1e3, 5e2, 5e2);
    model.law.C_kappa = Vec3(5.0, 10.0, 10.0);
    model.inertia.A_rho0 = 1.0;
    model.inertia.I_rho0 = Vec3(2e-3, 1e-3, 1e-3).asDiagonal();

    VecX q0 = VecX::Zero(model.n_dofs());
    for (int i = 0; i < model.mesh.n_nodes(); ++i)
        set_node_in_q(q0, i, {Vec3(length * i / model.mesh.n_el(), 0, 0), Vec3::Zero()});
    const Vec3 center(0.5 * length, 0, 0);
    const Vec3 omega(0.4, 0.3, 1.1);
    const Vec3 vcm(0.2, -0.1, 0.15);
    VecX u0 = VecX::Zero(model.n_dofs());
    for (int i = 0; i < model.mesh.n_nodes(); ++i) {
        u0.segment<3>(6 * i) = vcm + omega.cross(Vec3(q0.segment<3>(6 * i)) - center);
        u0.segment<3>(6 * i + 3) = omega;
    }

    double e_drift_k = 0, l_drift_k = 0, e_drift_i = 0, l_drift_i = 0, j_drift = 0;
    for (Frame frame : {Frame::CrossSection, Frame::Inertial}) {
        RodModel m = model;
        m.frame = frame;
        Constraints bcs(m.n_dofs());
        DynamicSettings st;
        st.t_end = 2.0;
        st.atol = st.rtol = 1e-10;
        const Trajectory traj = dynamic_solve(m, bcs, q0, u0, st);
        const QuadratureRule dq = QuadratureRule::gauss_legendre(2);
        const Diagnostics d0 = compute_diagnostics(m.mesh, m.law, m.inertia, traj.q.front(),
                                                   traj.u.front(), dq, frame);
        double e_drift = 0, l_drift = 0;
        for (int i = 0; i < traj.size(); ++i) {
            const Diagnostics d =
                compute_diagnostics(m.mesh, m.law, m.inertia, traj.q[i], traj.u[i], dq, frame);
            e_drift = std::max(e_drift, std::abs(d.total_energy() - d0.total_energy()) /
                                            d0.total_energy());
            l_drift = std::max(l_drift, (d.linear_momentum - d0.linear_momentum).norm() /
                                            d0.linear_momentum.norm());
            if (frame == Frame::Inertial)
                j_drift = std::max(j_drift, (*d.angular_momentum - *d0.angular_momentum).norm() /
                                                d0.angular_momentum->norm());
        }
        if (frame == Frame::CrossSection) {
            e_drift_k = e_drift;
            l_drift_k = l_drift;
        } else {
            e_drift_i = e_drift;
            l_drift_i = l_drift;
        }
    }
    const bool conservation_ok =
        e_drift_k < 1e-6 && l_drift_k < 1e-8 && l_drift_i < 1e-8 && j_drift < 1e-8;
    report(8, conservation_ok,
           "free flight: energy drift K " + sci(e_drift_k) + " (tol 1e-6, I-variant " +
               sci(e_drift_i) + "), momentum drift " + sci(std::max(l_drift_k, l_drift_i)) +
               " (tol 1e-8), angular momentum drift " + sci(j_drift) + " (tol 1e-8)");

    // virtual-work consistency residual across quadrature orders 2 -> 8
    const Mesh mesh = Mesh::uniform(2, 1.8);
    ConstitutiveLaw law;
    law.C_gamma = Vec3(120.0, 60.0, 60.0);
    law.C_kappa = Vec3(4.0, 7.0, 7.0);
    VecX q = VecX::Zero(mesh.n_dofs());
    for (int i = 0; i < mesh.n_nodes(); ++i) {
        const double s = static_cast<double>(i) / mesh.n_el();
        const double ang = 0.8 * s;
        const double radius = 1.8 / 0.8;
        set_node_in_q(q, i,
                      {Vec3(radius * std::sin(ang), radius * (1.0 - std::cos(ang)), 0.01 * s),
                       Vec3(0.02 * s, 0.04 * s, ang)});
    }
    VecX u(mesh.n_dofs());
    for (int i = 0; i < u.size(); ++i) u[i] = std::sin(1.7 * i + 0.3);
    const VecX grad_u = potential_energy_gradient(mesh, law, q);
    const VecX qdot = kinematic_ode(mesh, q, u);
    std::string residuals;
    bool monotone = true;
    double prev = 1e300;
    for (int n : {2, 3, 5, 8}) {
        const VecX f = assemble_internal_force(mesh, law, q, QuadratureRule::gauss_legendre(n));
        const double r = std::abs(u.dot(f) + grad_u.dot(qdot));
        residuals += " n=" + std::to_string(n) + ": " + sci(r);
        monotone = monotone && r < prev;
        prev = r;
    }
    report(8, monotone,
           "virtual-work consistency residual decreases monotonically with quadrature order:" +
               residuals);
}

// ---------------------------------------------------------------- criterion 9

void criterion_9() {
    // global internal-force jacobian against central finite differences on a
    // bent four-element configuration
    const Mesh mesh = Mesh::uniform(4, 3.0);
    ConstitutiveLaw law;
    law.C_gamma = Vec3(150.0, 80.0, 80.0);
    law.C_kappa = Vec3(3.0, 6.0, 6.0);
    VecX q = VecX::Zero(mesh.n_dofs());
    for (int i = 0; i < mesh.n_nodes(); ++i) {
        const double s = static_cast<double>(i) / mesh.n_el();
        const double ang = 0.9 * s;
        const double radius = 3.0 / 0.9;
        set_node_in_q(q, i,
                      {Vec3(radius * std::sin(ang), radius * (1.0 - std::cos(ang)), 0.05 * s),
                       Vec3(0.04 * s, 0.08 * s, ang)});
    }
    const QuadratureRule quad = QuadratureRule::gauss_legendre(2);
    const MatX jac = assemble_internal_jacobian(mesh, law, q, quad);
    const double step = 1e-6;
    double worst = 0.0;
    const double scale = jac.cwiseAbs().maxCoeff();
    for (int k = 0; k < q.size(); ++k) {
        VecX qp = q, qm = q;
        qp[k] += step;
        qm[k] -= step;
        const VecX diff = (assemble_internal_force(mesh, law, qp, quad) -
                           assemble_internal_force(mesh, law, qm, quad)) /
                          (2 * step);
        worst = std::max(worst, (diff - jac.col(k)).cwiseAbs().maxCoeff());
    }
    const double rel = worst / scale;

    // cantilever Newton iteration count per increment
    const StaticRun run = run_cantilever_case(1e2, 8, 20, cantilever_tolerance(1e2));
    const bool ok = rel < 1e-5 && run.max_newton_iters <= 6;
    report(9, ok,
           "jacobian vs finite differences " + sci(rel) +
               " (tol 1e-5); cantilever newton iterations per increment " +
               std::to_string(run.max_newton_iters) + " (limit 6)");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criteria_3_and_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("%d criterion check(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
