#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/asymptotics/bounds.py                                                        #
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
"""Scaled norm series of a trajectory."""
from __future__ import annotations

import logging
from typing import Dict, Iterable, Optional

import numpy as np

from oseen.field.fields import ScalarField, VectorField2
from oseen.field.spectral import spectral_operators
from oseen.lorentz.norms import Field, lp_norm
from oseen.lorentz.series import DecaySeries

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
def scaled_series(
    name: str,
    times: Iterable[float],
    fields: Iterable[Field],
    p: float,
    power: float,
    target_exponent: Optional[float] = None,
    mask: np.ndarray = None,
    time_offset: float = 0.0,
) -> DecaySeries:
    """y_i = s_i^power ||f_i||_p with s_i = t_i + time_offset, dropping s_i <= 0."""
    samples = []
    for t, f in zip(times, fields):
        s = t + time_offset
        if s > 0:
            samples.append((s, s**power * lp_norm(f, p, mask=mask)))
    times_out = np.array([s for s, _ in samples])
    values_out = np.array([y for _, y in samples])
    return DecaySeries(name, times_out, values_out, target_exponent=target_exponent, p=p)


def gradient_magnitude(v: VectorField2) -> ScalarField:
    """Pointwise Frobenius norm of grad v."""
    ops = spectral_operators(v.grid)
    squares = sum(ops.derivative(c, axis).values ** 2 for c in v.components for axis in (1, 2))
    return ScalarField(v.grid, np.sqrt(squares))


def laplacian(v: VectorField2) -> VectorField2:
    ops = spectral_operators(v.grid)
    return VectorField2(ops.laplacian(v.u1), ops.laplacian(v.u2))


def decay_bounds(traj, p: float, time_offset: float = 0.0) -> Dict[str, DecaySeries]:
    """t^(1/2-1/p)||v||_p, t^(1-1/p)||grad v||_p and t^(3/2-1/p)||Lap v||_p.

    Their boundedness in time is the decay estimate for the whole-plane flow.
    """
    transforms = {
        "velocity": (lambda v: v, 0.5),
        "gradient": (gradient_magnitude, 1.0),
        "laplacian": (laplacian, 1.5),
    }
    result = {}
    for name, (transform, power) in transforms.items():
        result[name] = scaled_series(
            f"bound_{name}",
            traj.times,
            (transform(v) for v in traj.velocities()),
            p,
            power - 1.0 / p,
            target_exponent=0.0,
            time_offset=time_offset,
        )
    return result
