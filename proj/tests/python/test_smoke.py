"""Smoke tests for the pybind11 surface."""

import math

import pytest

liepolar = pytest.importorskip("liepolar")


def max_abs_diff(a, b):
    return max(abs(x - y) for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def test_boost_spot_values():
    m = liepolar.boost_matrix(math.log(2.0), [0.0, 0.0, 1.0])
    assert abs(m[0][0] - 1.25) < 1e-14
    assert abs(m[0][3] - 0.75) < 1e-14
    assert m[1][1] == 1.0


def test_polar_decompose_lorentz_roundtrip():
    rot = liepolar.rotation_matrix(1.1, [0.0, 1.0, 0.0])
    boost = liepolar.boost_matrix(0.9, [0.0, 0.0, 1.0])
    product = [
        [sum(rot[i][k] * boost[k][j] for k in range(4)) for j in range(4)]
        for i in range(4)
    ]
    d = liepolar.polar_decompose_lorentz(product)
    assert abs(d["chi"] - 0.9) < 1e-12
    assert abs(d["theta"] - 1.1) < 1e-12
    assert abs(d["boost_axis"][2] - 1.0) < 1e-12
    assert d["reconstruction_residual"] < 1e-12


def test_so3_round_trip():
    theta, axis = liepolar.log_so3(liepolar.exp_so3(0.3, [1.0, 2.0, 2.0]))
    assert abs(theta - 0.3) < 1e-13
    assert abs(axis[0] - 1.0 / 3.0) < 1e-13


def test_covering_map_diagonal_boost():
    image = liepolar.covering_map([[2.0, 0.0], [0.0, 0.5]])
    assert abs(image[0][0] - 2.125) < 1e-14
    assert abs(image[0][3] - 1.875) < 1e-14


def test_sl2c_polar_params():
    d = liepolar.polar_decompose_sl2c(
        liepolar.exp_herm(0.8, [1.0, 0.0, 0.0])
    )
    assert abs(d["chi"] - 0.8) < 1e-12
    assert d["theta"] == 0.0


def test_pseudo_membership_and_decomposition():
    signs = [-1, -1, 1, 1, 1]
    g = liepolar.random_ge(signs, 3)
    assert liepolar.ge_residual(g, signs) < 1e-9
    d = liepolar.polar_decompose_ge(g, signs)
    assert d["membership_residual"] < 1e-9
    assert d["commutation_residual"] < 1e-9


def test_random_lorentz_deterministic():
    assert liepolar.random_lorentz(7) == liepolar.random_lorentz(7)


def test_generic_polar_and_sqrt():
    s = [[2.0, 1.0, 0.0, 0.0], [1.0, 2.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]]
    root = liepolar.sqrt_spd(s)
    square = [[sum(root[i][k] * root[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
    assert max_abs_diff(square, s) < 1e-12

    u, p, pprime = liepolar.polar(s)
    assert max_abs_diff(u, [[1.0 if i == j else 0.0 for j in range(4)] for i in range(4)]) < 1e-12
    assert max_abs_diff(p, s) < 1e-12
    assert max_abs_diff(pprime, s) < 1e-12


def test_expm_matches_exp_so3():
    theta, axis = 0.4, [0.0, 0.0, 1.0]
    hat = [[0.0, -theta, 0.0], [theta, 0.0, 0.0], [0.0, 0.0, 0.0]]
    assert max_abs_diff(liepolar.expm(hat), liepolar.exp_so3(theta, axis)) < 1e-13


def test_boost_params_and_velocity():
    chi, axis = liepolar.boost_params(liepolar.boost_matrix(1.3, [0.0, -1.0, 0.0]))
    assert abs(chi - 1.3) < 1e-13
    assert abs(axis[1] + 1.0) < 1e-13
    v = liepolar.rapidity_to_velocity(math.log(2.0), [0.0, 0.0, 1.0], c=1.0)
    assert abs(v[2] - 0.75) < 1e-15


def test_exp_su2_double_cover():
    minus_i = liepolar.exp_su2(2.0 * math.pi, [1.0, 0.0, 0.0])
    assert abs(minus_i[0][0] + 1.0) < 1e-15
    boost_res, rot_res = liepolar.polar_compatibility(liepolar.exp_su2(1.0, [1.0, 0.0, 0.0]))
    assert boost_res < 1e-12
    assert rot_res < 1e-12


def test_run_suite_smoke():
    rows = liepolar.run_suite("so3", samples=10, seed=0)
    assert rows
    assert all(r["pass"] for r in rows)


def test_errors_surface_as_exceptions():
    with pytest.raises(RuntimeError):
        liepolar.polar_decompose_lorentz([[2.0 if i == j else 0.0 for j in range(4)] for i in range(4)])
