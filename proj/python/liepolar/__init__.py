"""Polar decomposition in the Lorentz group, SL(2,C) and pseudo-orthogonal groups."""

from ._core import (
    __version__,
    boost_matrix,
    boost_params,
    covering_map,
    exp_herm,
    exp_so3,
    exp_su2,
    expm,
    ge_residual,
    log_so3,
    polar,
    polar_compatibility,
    polar_decompose_ge,
    polar_decompose_lorentz,
    polar_decompose_sl2c,
    random_ge,
    random_lorentz,
    rapidity_to_velocity,
    rotation_matrix,
    run_suite,
    sqrt_spd,
)

__all__ = [
    "__version__",
    "boost_matrix",
    "boost_params",
    "covering_map",
    "exp_herm",
    "exp_so3",
    "exp_su2",
    "expm",
    "ge_residual",
    "log_so3",
    "polar",
    "polar_compatibility",
    "polar_decompose_ge",
    "polar_decompose_lorentz",
    "polar_decompose_sl2c",
    "random_ge",
    "random_lorentz",
    "rapidity_to_velocity",
    "rotation_matrix",
    "run_suite",
    "sqrt_spd",
]
