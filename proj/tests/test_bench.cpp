#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "rodsim/csv.hpp"
#include "rodsim/experiments.hpp"
#include "test_util.hpp"

using namespace rodsim;
using namespace rodsim::bench;
namespace t = rodsim::test;

namespace {

constexpr double kPi = std::numbers::pi;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("config parsing and validation") {
    const Config cfg = Config::parse_string(
        "# comment\n"
        "[cantilever]\n"
        "increments = 12\n"
        "slenderness_list = 1e1, 1e3\n"
        "\n"
        "[heavy-top]\n"
        "variants = stiff\n"
        "atol = 1e-9\n");
    CHECK(cfg.get_int("cantilever", "increments", 0) == 12);
    CHECK(cfg.get_double("heavy-top", "atol", 0.0) == 1e-9);
    CHECK(cfg.get_list("cantilever", "slenderness_list", {}) == std::vector<double>{1e1, 1e3});
    CHECK(cfg.get_string_list("heavy-top", "variants", {}) ==
          std::vector<std::string>{"stiff"});
    CHECK(cfg.get_int("cantilever", "samples", 100) == 100);  // fallback

    CHECK_NOTHROW(cfg.validate(config_schema()));
    CHECK_THROWS_AS(Config::parse_string("[cantilever]\nbogus_key = 1\n").validate(config_schema()),
                    ConfigError);
    CHECK_THROWS_AS(Config::parse_string("[no-such-experiment]\na = 1\n").validate(config_schema()),
                    ConfigError);
    CHECK_THROWS_AS(Config::parse_string("orphan = 1\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("[x\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("[cantilever]\nincrements 12\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("[cantilever]\nincrements = twelve\n")
                        .get_int("cantilever", "increments", 0),
                    ConfigError);

    // the shipped default configuration is valid
    CHECK_NOTHROW(Config::parse_string(default_config_text()).validate(config_schema()));
}

TEST_CASE("error metrics") {
    const Mesh mesh = Mesh::uniform(4, 2.0);
    VecX q = VecX::Zero(mesh.n_dofs());
    for (int i = 0; i < mesh.n_nodes(); ++i)
        set_node_in_q(q, i, {Vec3(2.0 * i / mesh.n_el(), 0, 0), Vec3::Zero()});

    const ErrorReport same = error_metrics(mesh, q, mesh, q, 100);
    CHECK(same.e_r == 0.0);
    CHECK(same.e_psi == 0.0);

    // constant centerline offset: e_r = |d| / sqrt(k), orientations untouched
    const Vec3 offset(0.3, -0.2, 0.6);
    VecX q_off = q;
    for (int i = 0; i < mesh.n_nodes(); ++i) q_off.segment<3>(6 * i) += offset;
    const int k = 100;
    const ErrorReport off = error_metrics(mesh, q_off, mesh, q, k);
    CHECK(off.e_r == doctest::Approx(offset.norm() / std::sqrt(double(k))).epsilon(1e-12));
    CHECK(off.e_psi < 1e-14);

    // a solution on a finer mesh of the same geometry matches itself
    const Mesh fine = Mesh::uniform(16, 2.0);
    VecX qf = VecX::Zero(fine.n_dofs());
    for (int i = 0; i < fine.n_nodes(); ++i)
        set_node_in_q(qf, i, {Vec3(2.0 * i / fine.n_el(), 0, 0), Vec3::Zero()});
    const ErrorReport cross = error_metrics(mesh, q, fine, qf, 57);
    CHECK(cross.e_r < 1e-12);
    CHECK(cross.e_psi < 1e-12);
}

TEST_CASE("uncoupled interpolation baseline exhibits parasitic strains") {
    const NodalCoords n0{Vec3::Zero(), Vec3(0, -kPi / 2, 0)};
    const NodalCoords n1{Vec3(1, 0, 1), Vec3::Zero()};
    const ElementGeom geom{0.0, 1.0, 1.0};

    // a straight element matches the coupled interpolation exactly
    const NodalCoords s0{Vec3::Zero(), Vec3::Zero()};
    const NodalCoords s1{Vec3(1, 0, 0), Vec3::Zero()};
    const StrainState straight = r3so3_baseline_strains(s0, s1, geom, 0.37);
    CHECK((straight.gamma - Vec3(1, 0, 0)).norm() < 1e-14);
    CHECK(straight.kappa.norm() < 1e-14);

    // quarter-circle data: dilatation varies along the element and spurious
    // transverse shear appears, while the torsion/bending measure stays constant
    const StrainState mid = r3so3_baseline_strains(n0, n1, geom, 0.5);
    const StrainState end = r3so3_baseline_strains(n0, n1, geom, 0.0);
    CHECK(std::abs(mid.gamma.x() - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(end.gamma.x() - 1.0) < 1e-12);
    CHECK(std::abs(end.gamma.z() + 1.0) < 1e-12);
    CHECK((mid.kappa - Vec3(0, kPi / 2, 0)).norm() < 1e-12);
    CHECK((end.kappa - Vec3(0, kPi / 2, 0)).norm() < 1e-12);

    // the coupled element sees constant strains on the same data
    const StrainState se3 = element_strains(n0, n1, geom);
    CHECK((se3.gamma - Vec3(kPi / 2, 0, 0)).norm() < 1e-12);
}

TEST_CASE("helix loads hold the analytic helix in equilibrium") {
    const HelixGeometry geom;
    const double slenderness = 1e2;
    const RodModel model = make_helix(geom, slenderness, 5);
    const VecX q = helix_analytic_q(geom, model.mesh);

    const VecX residual =
        assemble_internal_force(model.mesh, model.law, q, model.quad) +
        assemble_external_force(model.mesh, model.loads, q, 1.0, model.quad);
    Constraints bcs(model.n_dofs());
    bcs.fix_node(0);
    double worst = 0.0;
    for (int dof : bcs.free_dofs()) worst = std::max(worst, std::abs(residual[dof]));
    CHECK(worst < 10.0 * helix_tolerance(slenderness));

    // strains of the analytic placement are the constant helix measures
    for (int e = 0; e < model.mesh.n_el(); ++e) {
        const StrainState eps = element_strains(node_from_q(q, e), node_from_q(q, e + 1),
                                                model.mesh.elem(e));
        CHECK((eps.gamma - Vec3(1, 0, 0)).norm() < 1e-10);
        CHECK((eps.kappa - geom.kappa_ref()).norm() < 1e-10 * geom.kappa_ref().norm());
    }
}

TEST_CASE("experiment outputs are deterministic") {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "rodsim_determinism";
    fs::remove_all(base);
    const Config cfg = Config::parse_string("[liegroup-selftest]\nsamples = 20\n");
    const RunSummary a = run_liegroup_selftest(cfg, (base / "a").string());
    const RunSummary b = run_liegroup_selftest(cfg, (base / "b").string());
    CHECK(a.ok);
    CHECK(b.ok);
    CHECK(slurp((base / "a" / "liegroup_selftest.csv").string()) ==
          slurp((base / "b" / "liegroup_selftest.csv").string()));
    CHECK(!slurp((base / "a" / "liegroup_selftest.csv").string()).empty());
    fs::remove_all(base);
}

TEST_CASE("csv output uses full precision") {
    CHECK(format_sci(1.0 / 3.0) == "3.333333333333333e-01");
    CHECK(format_sci(-2.5e-13).find("e-13") != std::string::npos);
}

TEST_CASE("heavy top setup reproduces the steady-precession data") {
    const HeavyTopSetup setup = make_heavy_top(false, 1.0);
    CHECK(setup.spin == doctest::Approx(50.0 * kPi));
    CHECK(setup.precession == doctest::Approx(9.81 * 0.5 / (0.01 * 50.0 * kPi)));
    CHECK(setup.t_end == doctest::Approx(2.0 * kPi / setup.precession));
    // initial tip velocity is the rigid field of the initial angular velocity
    const Vec3 omega(setup.spin, 0, setup.precession);
    CHECK((setup.u0.segment<3>(6) - omega.cross(Vec3(setup.length, 0, 0))).norm() == 0.0);
    // the soft variant only rescales the stiffness
    const HeavyTopSetup soft = make_heavy_top(true, 1.0);
    CHECK(soft.model.law.C_gamma.x() == doctest::Approx(1e-3 * setup.model.law.C_gamma.x()));
    CHECK(soft.model.inertia.A_rho0 == setup.model.inertia.A_rho0);
}
