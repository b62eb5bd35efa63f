"""Additive energy, the u2 norm and compressions on Hamming spheres."""

import json
from fractions import Fraction

from ._core import (
    MAX_DIM,
    DimensionError,
    additive_energy,
    compress,
    compression_distance,
    energy_via_krawtchouk,
    fourier_forward,
    fourier_inverse,
    krawtchouk,
    l2_norm,
    l4_fourth,
    l4_ratio,
    maximize_ratio,
    sphere_connected,
    sphere_points,
    symmetrize_to_fixpoint,
    u2_fourth_by_cosets,
    u2_fourth_fast,
    u2_fourth_naive,
    u2_gradient,
    u2_ratio,
)
from . import _core

__all__ = [
    "MAX_DIM",
    "DimensionError",
    "additive_energy",
    "compress",
    "compression_distance",
    "energy_via_krawtchouk",
    "fourier_forward",
    "fourier_inverse",
    "krawtchouk",
    "l2_norm",
    "l4_fourth",
    "l4_ratio",
    "lemma_suite",
    "maximize_ratio",
    "mu",
    "remark_duality_check",
    "sphere_connected",
    "sphere_points",
    "symmetrize_to_fixpoint",
    "u2_fourth_by_cosets",
    "u2_fourth_fast",
    "u2_fourth_naive",
    "u2_gradient",
    "u2_ratio",
    "verify_theorem",
]


def mu(n, k):
    """E(S) / (2^n |S|^2) for S = S(n, k), as an exact Fraction."""
    num, den, _ = _core.mu_constant(n, k)
    return Fraction(num, den)


def verify_theorem(n, k, trials=8, seed=0, tol=1e-7):
    return json.loads(_core.verify_theorem_json(n, k, trials, seed, tol))


def lemma_suite(n, k, trials=100, seed=0):
    return json.loads(_core.lemma_suite_json(n, k, trials, seed))


def remark_duality_check(points, n, trials=50, seed=0):
    return json.loads(_core.remark_duality_json(list(points), n, trials, seed))
