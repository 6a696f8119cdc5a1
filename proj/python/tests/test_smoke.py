import math

import numpy as np
import pytest

import _rodsim as rs


def test_so3_round_trip():
    psi = np.array([0.3, -0.5, 0.7])
    a = rs.exp_so3(psi)
    assert np.allclose(a @ a.T, np.eye(3), atol=1e-12)
    assert np.allclose(rs.log_so3(a), psi, atol=1e-12)


def test_skew_cross_product():
    w = np.array([1.0, 2.0, 3.0])
    r = np.array([-0.4, 0.2, 0.9])
    assert np.allclose(rs.skew(w) @ r, np.cross(w, r))
    assert np.allclose(rs.unskew(rs.skew(w)), w)


def test_tangent_inverse_pair():
    psi = np.array([0.2, 0.4, -0.3])
    t = rs.tangent_so3(psi)
    ti = rs.inv_tangent_so3(psi)
    assert np.allclose(t @ ti, np.eye(3), atol=1e-12)


def test_se3_round_trip():
    v = np.array([1.0, -2.0, 0.5])
    omega = np.array([0.4, 0.1, -0.6])
    h = rs.exp_se3(v, omega)
    assert h.shape == (4, 4)
    v2, omega2 = rs.log_se3(h)
    assert np.allclose(v2, v, atol=1e-12)
    assert np.allclose(omega2, omega, atol=1e-12)


def test_log_throws_at_pi():
    with pytest.raises(rs.AngleAtPi):
        rs.log_so3(rs.exp_so3(np.array([math.pi, 0.0, 0.0])))


def test_quarter_circle_strains_constant():
    geom = rs.ElementGeom(0.0, 1.0, 1.0)
    r0 = np.zeros(3)
    psi0 = np.array([0.0, -math.pi / 2, 0.0])
    r1 = np.array([1.0, 0.0, 1.0])
    psi1 = np.zeros(3)
    gamma, kappa = rs.element_strains(r0, psi0, r1, psi1, geom)
    assert np.allclose(gamma, [math.pi / 2, 0.0, 0.0], atol=1e-12)
    assert np.allclose(kappa, [0.0, math.pi / 2, 0.0], atol=1e-12)
    # interpolated centerline stays on the arc around (1, 0, 0)
    for xi in np.linspace(0.1, 0.9, 5):
        h = rs.interpolate_pose(xi, r0, psi0, r1, psi1, geom)
        assert abs(np.linalg.norm(h[:3, 3] - np.array([1.0, 0.0, 0.0])) - 1.0) < 1e-12


def test_internal_force_zero_at_reference():
    geom = rs.ElementGeom(0.0, 1.0, 2.0)
    law = rs.ConstitutiveLaw()
    law.C_gamma = np.array([100.0, 50.0, 50.0])
    law.C_kappa = np.array([4.0, 7.0, 7.0])
    f = rs.element_internal_force(
        np.zeros(3), np.zeros(3), np.array([2.0, 0.0, 0.0]), np.zeros(3), geom, law
    )
    assert np.max(np.abs(f)) < 1e-12


def test_internal_jacobian_matches_finite_differences():
    geom = rs.ElementGeom(0.0, 1.0, 1.0)
    law = rs.ConstitutiveLaw()
    law.C_gamma = np.array([90.0, 40.0, 40.0])
    law.C_kappa = np.array([3.0, 5.0, 5.0])
    qe = np.array([0.1, -0.2, 0.0, 0.2, 0.1, -0.3, 1.0, 0.3, 0.2, -0.1, 0.4, 0.2])

    def force(x):
        return rs.element_internal_force(x[0:3], x[3:6], x[6:9], x[9:12], geom, law)

    jac = rs.element_internal_jacobian(qe[0:3], qe[3:6], qe[6:9], qe[9:12], geom, law)
    h = 1e-6
    for k in range(12):
        dp, dm = qe.copy(), qe.copy()
        dp[k] += h
        dm[k] -= h
        fd = (force(dp) - force(dm)) / (2 * h)
        assert np.allclose(fd, jac[:, k], rtol=1e-4, atol=1e-6)


def test_cantilever_solver():
    q, iters = rs.solve_cantilever(slenderness=1e2, n_el=4, increments=10, atol=1e-9)
    assert iters <= 10
    tip = q[-6:-3]
    assert np.linalg.norm(tip) > 0.1 * 1e3  # deformed but finite
    assert np.all(np.isfinite(q))


def test_heavy_top_dynamics_smoke():
    traj = rs.heavy_top_tip_trajectory(soft=False, revolutions=0.02)
    assert traj.shape[1] == 4
    # the tip stays close to the steady-precession circle of radius L = 0.5
    radial = np.hypot(traj[:, 1], traj[:, 2])
    assert np.max(np.abs(radial - 0.5)) < 5e-3
    assert np.max(np.abs(traj[:, 3])) < 5e-3
