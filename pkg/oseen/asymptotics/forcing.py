#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/asymptotics/forcing.py                                                       #
# ------------------------------------------------------------------------------------------------ #
# Author     : John James                                                                          #
# Email      : john.james.ai.studio@gmail.com                                                      #
# URL        : https://github.com/john-james-ai/oseen-lab                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 10th 2026 09:12:44 am                                              #
# Modified   : Monday October 19th 2026 08:41:02 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# Copyright  : (c) 2026 John James                                                                 #
# ================================================================================================ #
"""Forcing terms of the perturbation w = u - v_bar, built pointwise from the plane flow.

v_bar and its derivatives are taken in product-rule form, so the supports hold exactly.

F = p grad f + d_t psi grad_perp f + (f Lap v - Lap v_bar) + (v_bar . grad v_bar - f v . grad v).
Every term carries a derivative of f or a factor (1 - f), so it vanishes outside B_R.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from oseen.comparable.cutoff import CutoffProfile
from oseen.comparable.stream import stream_matrix
from oseen.comparable.truncation import (
    truncate_pointwise,
    truncated_gradient,
    truncation_laplacian_remainder,
)
from oseen.field.fields import ScalarField, VectorField2
from oseen.field.spectral import spectral_operators
from oseen.lorentz.series import DecaySeries
from oseen.asymptotics.bounds import scaled_series

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
MAX_CADENCE = 20
CORE_EXPONENT = -1.25


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class ForcingFields:
    F1: VectorField2
    F2: VectorField2
    F3: VectorField2
    F4: VectorField2
    F4_core: VectorField2
    time: float
    support_violation: float

    def terms(self) -> Dict[str, VectorField2]:
        return {"F1": self.F1, "F2": self.F2, "F3": self.F3, "F4": self.F4, "F4_core": self.F4_core}

    @property
    def scale(self) -> float:
        return max(term.max_abs() for term in self.terms().values())

    def supported_in_ball(self, rtol: float = 1e-6) -> bool:
        return self.support_violation <= rtol * self.scale


def _advect(a: VectorField2, gradient: tuple) -> VectorField2:
    """(a . grad) b given (d1 b, d2 b)."""
    d1, d2 = gradient
    return d1 * a.u1 + d2 * a.u2


def forcing_decomposition(plane_traj, f: CutoffProfile) -> List[ForcingFields]:
    """ForcingFields for every snapshot of a plane trajectory.

    d_t psi is obtained by second-order differencing of the psi snapshots, which requires at
    least three snapshots spaced by at most 20 solver steps.
    """
    times = plane_traj.times
    config = plane_traj.config
    if len(times) < 3:
        msg = f"forcing_decomposition needs at least 3 snapshots, got {len(times)}."
        logger.error(msg)
        raise ValueError(msg)
    spacing = float(np.max(np.diff(times)))
    if spacing > MAX_CADENCE * config.dt * (1 + 1e-9):
        msg = (
            f"Snapshot spacing {spacing:.4g} exceeds {MAX_CADENCE} x dt = "
            f"{MAX_CADENCE * config.dt:.4g}; d_t psi cannot be differenced."
        )
        logger.error(msg)
        raise ValueError(msg)

    grid = config.grid
    ops = spectral_operators(grid)
    streams = [stream_matrix(v) for v in plane_traj.velocities()]
    psi_t = np.gradient(np.stack([s.psi12.values for s in streams]), times, axis=0, edge_order=2)
    outside = ~grid.ball_mask()
    grad_f = f.gradient()
    perp_f = f.perp_gradient()

    result = []
    for i, (t, sm) in enumerate(zip(times, streams)):
        v = sm.divergence()
        grad_v = tuple(
            VectorField2(ops.derivative(v.u1, k), ops.derivative(v.u2, k)) for k in (1, 2)
        )
        v_bar = truncate_pointwise(sm, f)
        advection = _advect(v, grad_v)
        terms = dict(
            F1=grad_f * ops.pressure_from_velocity(v),
            F2=perp_f * ScalarField(grid, psi_t[i]),
            F3=-truncation_laplacian_remainder(sm, f),
            F4=_advect(v_bar, truncated_gradient(sm, f)) - advection * f.values,
            F4_core=_advect(v_bar - v, grad_v) * f.values,
        )
        violation = max(float(np.max(term.magnitude()[outside])) for term in terms.values())
        result.append(ForcingFields(time=float(t), support_violation=violation, **terms))
    return result


def forcing_series(
    forcing: List[ForcingFields], p: float = 2.0, time_offset: float = 0.0
) -> Dict[str, DecaySeries]:
    """||F_j(s)||_p per snapshot; F4 and its core part carry the target exponent -5/4."""
    if not forcing:
        return {}
    times = [item.time for item in forcing]
    result = {}
    for name in forcing[0].terms():
        target = CORE_EXPONENT if name.startswith("F4") else None
        result[name] = scaled_series(
            f"forcing_{name}",
            times,
            (item.terms()[name] for item in forcing),
            p,
            0.0,
            target_exponent=target,
            time_offset=time_offset,
        )
    return result