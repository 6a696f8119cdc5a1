#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rodsim/experiments.hpp"
#include "rodsim/solvers.hpp"

namespace py = pybind11;
using namespace rodsim;

namespace {

Mat4 pose_to_mat(const Pose& p) { return p.as_mat4(); }

NodalCoords make_node(const Vec3& r, const Vec3& psi) { return {r, psi}; }

}  // namespace

PYBIND11_MODULE(_rodsim, m) {
    m.doc() = "Geometrically exact rod simulator core";

    // Lie group kernels
    m.def("skew", &skew, py::arg("w"));
    m.def("unskew", &unskew, py::arg("m"));
    m.def("exp_so3", [](const Vec3& psi) { return exp_so3(psi); }, py::arg("psi"));
    m.def("log_so3", [](const Mat3& a) { return log_so3(a); }, py::arg("a"));
    m.def("tangent_so3", [](const Vec3& psi) { return tangent_so3(psi); }, py::arg("psi"));
    m.def("inv_tangent_so3", [](const Vec3& psi) { return inv_tangent_so3(psi); },
          py::arg("psi"));
    m.def(
        "exp_se3",
        [](const Vec3& v, const Vec3& omega) { return pose_to_mat(exp_se3(Twist{v, omega})); },
        py::arg("v"), py::arg("omega"));
    m.def(
        "log_se3",
        [](const Mat4& h) {
            const Twist t = log_se3(Pose::from_mat4(h));
            return std::make_pair(Vec3(t.v), Vec3(t.omega));
        },
        py::arg("h"));
    m.def("complement_update", &complement_update, py::arg("psi"));

    // rod kinematics
    py::class_<ElementGeom>(m, "ElementGeom")
        .def(py::init([](double xi0, double xi1, double j) {
                 return ElementGeom{xi0, xi1, j};
             }),
             py::arg("xi0"), py::arg("xi1"), py::arg("J"))
        .def_readwrite("xi0", &ElementGeom::xi0)
        .def_readwrite("xi1", &ElementGeom::xi1)
        .def_readwrite("J", &ElementGeom::J);

    m.def(
        "interpolate_pose",
        [](double xi, const Vec3& r0, const Vec3& psi0, const Vec3& r1, const Vec3& psi1,
           const ElementGeom& geom) {
            return pose_to_mat(interpolate_pose(xi, make_node(r0, psi0), make_node(r1, psi1), geom));
        },
        py::arg("xi"), py::arg("r0"), py::arg("psi0"), py::arg("r1"), py::arg("psi1"),
        py::arg("geom"));
    m.def(
        "element_strains",
        [](const Vec3& r0, const Vec3& psi0, const Vec3& r1, const Vec3& psi1,
           const ElementGeom& geom) {
            const StrainState eps =
                element_strains(make_node(r0, psi0), make_node(r1, psi1), geom);
            return std::make_pair(Vec3(eps.gamma), Vec3(eps.kappa));
        },
        py::arg("r0"), py::arg("psi0"), py::arg("r1"), py::arg("psi1"), py::arg("geom"));
    m.def(
        "nodal_kinematic_map",
        [](const Vec3& r, const Vec3& psi) { return Mat6(nodal_kinematic_map(make_node(r, psi))); },
        py::arg("r"), py::arg("psi"));

    // constitutive law and element forces
    py::class_<ConstitutiveLaw>(m, "ConstitutiveLaw")
        .def(py::init<>())
        .def_readwrite("C_gamma", &ConstitutiveLaw::C_gamma)
        .def_readwrite("C_kappa", &ConstitutiveLaw::C_kappa)
        .def_readwrite("gamma0", &ConstitutiveLaw::gamma0)
        .def_readwrite("kappa0", &ConstitutiveLaw::kappa0);

    m.def(
        "element_internal_force",
        [](const Vec3& r0, const Vec3& psi0, const Vec3& r1, const Vec3& psi1,
           const ElementGeom& geom, const ConstitutiveLaw& law, int quadrature_points) {
            return Vec12(element_internal_force(make_node(r0, psi0), make_node(r1, psi1), geom,
                                                law,
                                                QuadratureRule::gauss_legendre(quadrature_points)));
        },
        py::arg("r0"), py::arg("psi0"), py::arg("r1"), py::arg("psi1"), py::arg("geom"),
        py::arg("law"), py::arg("quadrature_points") = 2);
    m.def(
        "element_internal_jacobian",
        [](const Vec3& r0, const Vec3& psi0, const Vec3& r1, const Vec3& psi1,
           const ElementGeom& geom, const ConstitutiveLaw& law, int quadrature_points) {
            return Mat12(element_internal_jacobian(
                make_node(r0, psi0), make_node(r1, psi1), geom, law,
                QuadratureRule::gauss_legendre(quadrature_points)));
        },
        py::arg("r0"), py::arg("psi0"), py::arg("r1"), py::arg("psi1"), py::arg("geom"),
        py::arg("law"), py::arg("quadrature_points") = 2);

    // a ready-made static benchmark: cantilever under tip moment and follower force
    m.def(
        "solve_cantilever",
        [](double slenderness, int n_el, int increments, double atol) {
            const bench::StaticRun run =
                bench::run_cantilever_case(slenderness, n_el, increments, atol);
            return std::make_pair(VecX(run.solution.final_q()), run.max_newton_iters);
        },
        py::arg("slenderness"), py::arg("n_el"), py::arg("increments") = 20,
        py::arg("atol") = 1e-10);
    m.def(
        "heavy_top_tip_trajectory",
        [](bool soft, double revolutions, double atol, double rtol) {
            bench::HeavyTopCase c;
            c.soft = soft;
            c.revolutions = revolutions;
            c.atol = atol;
            c.rtol = rtol;
            const Trajectory traj = bench::run_heavy_top_case(c);
            MatX out(traj.size(), 4);
            for (int i = 0; i < traj.size(); ++i) {
                out(i, 0) = traj.t[i];
                out.row(i).tail(3) = bench::trajectory_tip(traj, 1, i).transpose();
            }
            return out;
        },
        py::arg("soft") = false, py::arg("revolutions") = 0.05, py::arg("atol") = 1e-8,
        py::arg("rtol") = 1e-8);

    py::register_exception<AngleAtPi>(m, "AngleAtPi");
    py::register_exception<TangentSingular>(m, "TangentSingular");
    py::register_exception<NewtonDiverged>(m, "NewtonDiverged");
}
