#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/comparable/stream.py                                                         #
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
"""Stream matrix of a divergence-free field."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from oseen.field.fields import ScalarField, VectorField2
from oseen.field.spectral import spectral_operators
from oseen.lorentz.norms import lp_norm

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class StreamMatrix:
    """Skew-symmetric psi with psi_12 = psi12, psi_21 = -psi12 and zero diagonal.

    div(psi) with rows convention (div psi)_i = d_j psi_ij is grad_perp(psi12).
    """

    psi12: ScalarField
    ball_mean_removed: bool = True

    @property
    def grid(self):
        return self.psi12.grid

    def component(self, i: int, j: int) -> ScalarField:
        if (i, j) == (1, 2):
            return self.psi12
        if (i, j) == (2, 1):
            return -self.psi12
        if (i, j) in ((1, 1), (2, 2)):
            return ScalarField.zeros(self.grid)
        msg = f"Invalid stream matrix index ({i}, {j})."
        logger.error(msg)
        raise ValueError(msg)

    def divergence(self) -> VectorField2:
        return spectral_operators(self.grid).perp_gradient(self.psi12)

    def ball_mean(self) -> float:
        return float(np.mean(self.psi12.values[self.grid.ball_mask()]))


# ------------------------------------------------------------------------------------------------ #
def stream_matrix(v: VectorField2, tol: float = 1e-8) -> StreamMatrix:
    """Solves Lap(psi12) = d2 v1 - d1 v2 and removes the mean of psi12 over B_R.

    On the periodic box the solution is unique up to the two mean conditions: zero box mean
    of the velocity (lost by the reconstruction) and zero B_R mean of psi12.
    """
    ops = spectral_operators(v.grid)
    scale = v.max_abs()
    divergence = ops.divergence(v).max_abs()
    if divergence > tol * scale:
        msg = (
            f"stream_matrix requires a divergence-free field; max |div v| = {divergence:.3e} "
            f"exceeds {tol:g} x max |v| = {tol * scale:.3e}."
        )
        logger.error(msg)
        raise ValueError(msg)
    mean = max(abs(v.u1.mean()), abs(v.u2.mean()))
    if mean > tol * max(scale, np.finfo(float).tiny):
        logger.warning(
            f"The velocity has box mean {mean:.3e}; div(psi) reconstructs v minus its mean."
        )
    curl = ops.curl(v)
    psi = ops.inverse_laplacian(ScalarField(v.grid, curl.values - curl.mean()))
    ball = v.grid.ball_mask()
    psi = ScalarField(v.grid, psi.values - np.mean(psi.values[ball]))
    return StreamMatrix(psi12=psi, ball_mean_removed=True)


def stream_bound_ratio(v: VectorField2, p: float) -> float:
    """(||psi12||_{L^p(B_R)} + ||grad psi12||_p) / ||v||_p; 0 for the zero field."""
    norm = lp_norm(v, p)
    if norm == 0:
        return 0.0
    sm = stream_matrix(v)
    grad = spectral_operators(v.grid).gradient(sm.psi12)
    return float((lp_norm(sm.psi12, p, mask=v.grid.ball_mask()) + lp_norm(grad, p)) / norm)
