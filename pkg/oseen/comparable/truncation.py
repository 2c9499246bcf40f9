#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/comparable/truncation.py                                                     #
# ------------------------------------------------------------------------------------------------ #
# Author     : John James                                                                          #
# Email      : john.james.ai.studio@gmail.com                                                      #
# URL        : https://github.com/john-james-ai/oseen-lab                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 10th 2026 09:12:44 am                                              #
# Modified   : Monday October 19th 2026 02:10:37 pm                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# Copyright  : (c) 2026 John James                                                                 #
"""Truncation v_bar = div(f psi) and its derivatives.

The grid field is v_bar = grad_perp(f psi12), taken spectrally, so its spectral divergence
vanishes to rounding. The product-rule form f v_rec + psi12 grad_perp(f), with analytic
derivatives of f, is the pointwise counterpart: it vanishes exactly on B_{R/2} and equals v_rec
exactly outside B_{2R/3}. The two differ by the spectral truncation error of f psi12, which
decays with resolution; truncation_identity_defect and truncation_support_defect report it.
The derivative helpers follow the product rule and feed the forcing decomposition.
"""
from __future__ import annotations

import logging
from typing import Iterable, Tuple

import numpy as np

from oseen.comparable.cutoff import CutoffProfile
from oseen.comparable.stream import StreamMatrix, stream_matrix
from oseen.field.fields import VectorField2
from oseen.field.spectral import spectral_operators
from oseen.lorentz.norms import lp_norm

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
def _check_grid(sm: StreamMatrix, f: CutoffProfile) -> None:
    if sm.grid != f.grid:
        msg = "The stream matrix and the cut-off live on different grids."
        logger.error(msg)
        raise ValueError(msg)


def truncate_stream(sm: StreamMatrix, f: CutoffProfile) -> VectorField2:
    _check_grid(sm, f)
    return spectral_operators(sm.grid).perp_gradient(f.values * sm.psi12)


def truncate_field(v: VectorField2, f: CutoffProfile) -> VectorField2:
    """div(f psi) for the stream matrix psi of v."""
    return truncate_stream(stream_matrix(v), f)


def truncate_pointwise(sm: StreamMatrix, f: CutoffProfile) -> VectorField2:
    """f v_rec + psi12 grad_perp(f), exact on the supports."""
    _check_grid(sm, f)
    return sm.divergence() * f.values + f.perp_gradient() * sm.psi12


def truncated_gradient(sm: StreamMatrix, f: CutoffProfile) -> tuple:
    """(d1 v_bar, d2 v_bar) of the pointwise form.

    d_k v_bar = d_k f v + f d_k v + d_k psi grad_perp f + psi d_k grad_perp f.
    """
    _check_grid(sm, f)
    ops = spectral_operators(sm.grid)
    v = sm.divergence()
    grad_f = f.gradient().components
    perp_f = f.perp_gradient()
    result = []
    for axis in (1, 2):
        dv = VectorField2(ops.derivative(v.u1, axis), ops.derivative(v.u2, axis))
        dpsi = ops.derivative(sm.psi12, axis)
        result.append(
            v * grad_f[axis - 1]
            + dv * f.values
            + perp_f * dpsi
            + f.derivative_of_perp_gradient(axis) * sm.psi12
        )
    return tuple(result)


def truncated_laplacian(sm: StreamMatrix, f: CutoffProfile) -> VectorField2:
    """Lap(v_bar) = f Lap(v) + truncation_laplacian_remainder(sm, f)."""
    ops = spectral_operators(sm.grid)
    v = sm.divergence()
    lap_v = VectorField2(ops.laplacian(v.u1), ops.laplacian(v.u2))
    return lap_v * f.values + truncation_laplacian_remainder(sm, f)


def truncation_laplacian_remainder(sm: StreamMatrix, f: CutoffProfile) -> VectorField2:
    """Lap(v_bar) - f Lap(v): every term carries a derivative of f, so the support lies in B_R."""
    _check_grid(sm, f)
    ops = spectral_operators(sm.grid)
    v = sm.divergence()
    omega = ops.laplacian(sm.psi12)
    grad_f = f.gradient().components
    cross = VectorField2.zeros(sm.grid)
    for axis in (1, 2):
        dpsi = ops.derivative(sm.psi12, axis)
        cross = (
            cross
            + ops.perp_gradient(dpsi) * grad_f[axis - 1]
            + f.derivative_of_perp_gradient(axis) * dpsi
        )
    return (
        f.perp_gradient() * omega
        + cross * 2.0
        + v * f.laplacian()
        + _perp(f.grad_laplacian()) * sm.psi12
    )


def _perp(g: VectorField2) -> VectorField2:
    """(g1, g2) -> (g2, -g1)."""
    return VectorField2(g.u2, -g.u1)


def truncation_identity_defect(v: VectorField2, f: CutoffProfile) -> float:
    """max |v_bar - (f v + psi12 grad_perp f)| over the grid."""
    sm = stream_matrix(v)
    return float(np.max((truncate_stream(sm, f) - truncate_pointwise(sm, f)).magnitude()))


def truncation_support_defect(v: VectorField2, f: CutoffProfile) -> Tuple[float, float]:
    """max |v_bar| on B_{R/2} and max |v_bar - v| outside B_{2R/3}, relative to max |v|."""
    scale = v.max_abs()
    if scale == 0.0:
        return 0.0, 0.0
    sm = stream_matrix(v)
    v_bar = truncate_stream(sm, f)
    r = v.grid.radius
    inner = float(np.max(v_bar.magnitude()[r <= f.inner_radius]))
    outer = float(np.max((v_bar - sm.divergence()).magnitude()[r >= f.outer_radius]))
    return inner / scale, outer / scale


def truncation_bound_constant(corpus: Iterable[VectorField2], f: CutoffProfile, p: float) -> float:
    """Largest ||v_bar||_p / ||v||_p over a corpus of divergence-free fields."""
    ratios = [
        lp_norm(truncate_field(v, f), p) / lp_norm(v, p) for v in corpus if v.max_abs() > 0
    ]
    if not ratios:
        msg = "truncation_bound_constant needs at least one nonzero field."
        logger.error(msg)
        raise ValueError(msg)
    constant = float(max(ratios))
    logger.info(f"Truncation bound over {len(ratios)} fields: C = {constant:.4f} for p = {p:g}.")
    return constant
