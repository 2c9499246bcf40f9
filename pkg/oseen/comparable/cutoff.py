#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/comparable/cutoff.py                                                         #
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
"""Fixed radial cut-off: 0 on B_{R/2}, 1 outside B_{2R/3}, smooth in between.

The transition is s(tau) = sigma(tau) / (sigma(tau) + sigma(1 - tau)) with sigma(tau) = exp(-1/tau),
rewritten as expit(1/(1 - tau) - 1/tau). All derivatives are analytic so that products with the
cut-off keep exact supports on the grid.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.special import expit

from oseen.field.fields import ScalarField, VectorField2
from oseen.field.grid import Grid

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
TRANSITION_POINTS = 8


# ------------------------------------------------------------------------------------------------ #
def smoothstep(tau: np.ndarray, order: int = 0) -> np.ndarray:
    """Transition profile s and its derivatives up to order 3; flat outside (0, 1)."""
    tau = np.asarray(tau, dtype=float)
    result = np.zeros_like(tau) if order > 0 else (tau >= 1).astype(float)
    inside = (tau > 0) & (tau < 1)
    if not np.any(inside):
        return result
    t = tau[inside]
    u = 1.0 - t
    h1 = -1 / t**2 - 1 / u**2
    h2 = 2 / t**3 - 2 / u**3
    h3 = -6 / t**4 - 6 / u**4
    s = expit(1 / u - 1 / t)
    q = s * (1 - s)
    s1 = -q * h1
    q1 = (1 - 2 * s) * s1
    s2 = -(q1 * h1 + q * h2)
    q2 = (1 - 2 * s) * s2 - 2 * s1**2
    s3 = -(q2 * h1 + 2 * q1 * h2 + q * h3)
    result[inside] = (s, s1, s2, s3)[order]
    return result


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class CutoffProfile:
    """Cut-off f sampled on a grid, with its analytic derivatives.

    Args:
        grid (Grid): The sampling grid; the ball radius R sets the transition band.
        transition (str): Name of the transition profile.
    """

    grid: Grid
    transition: str = "exp-smoothstep"

    @property
    def inner_radius(self) -> float:
        return self.grid.ball_radius / 2

    @property
    def outer_radius(self) -> float:
        return 2 * self.grid.ball_radius / 3

    @property
    def width(self) -> float:
        return self.outer_radius - self.inner_radius

    def evaluate(self, radius: np.ndarray, order: int = 0) -> np.ndarray:
        """Radial profile f(r) or its order-th radial derivative."""
        tau = (np.asarray(radius, dtype=float) - self.inner_radius) / self.width
        return smoothstep(tau, order) / self.width**order

    @cached_property
    def _unit(self) -> tuple:
        x1, x2 = self.grid.mesh
        r = self.grid.radius
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(r > 0, x1 / r, 0.0), np.where(r > 0, x2 / r, 0.0)

    @cached_property
    def _radial(self) -> tuple:
        r = self.grid.radius
        return tuple(self.evaluate(r, order) for order in range(4))

    @cached_property
    def _inverse_radius(self) -> np.ndarray:
        r = self.grid.radius
        with np.errstate(divide="ignore"):
            return np.where(r > 0, 1.0 / np.where(r > 0, r, 1.0), 0.0)

    @property
    def values(self) -> ScalarField:
        return ScalarField(self.grid, self._radial[0])

    def gradient(self) -> VectorField2:
        e1, e2 = self._unit
        fr = self._radial[1]
        return VectorField2.from_arrays(self.grid, fr * e1, fr * e2)

    def perp_gradient(self) -> VectorField2:
        """(d2 f, -d1 f)."""
        e1, e2 = self._unit
        fr = self._radial[1]
        return VectorField2.from_arrays(self.grid, fr * e2, -fr * e1)

    def hessian(self) -> tuple:
        """(f_11, f_12, f_22) as arrays."""
        e1, e2 = self._unit
        _, fr, frr, _ = self._radial
        tangential = fr * self._inverse_radius
        f11 = frr * e1 * e1 + tangential * (1 - e1 * e1)
        f12 = (frr - tangential) * e1 * e2
        f22 = frr * e2 * e2 + tangential * (1 - e2 * e2)
        return f11, f12, f22

    def laplacian(self) -> ScalarField:
        _, fr, frr, _ = self._radial
        return ScalarField(self.grid, frr + fr * self._inverse_radius)

    def grad_laplacian(self) -> VectorField2:
        e1, e2 = self._unit
        _, fr, frr, frrr = self._radial
        inv = self._inverse_radius
        g = frrr + frr * inv - fr * inv**2
        return VectorField2.from_arrays(self.grid, g * e1, g * e2)

    def derivative_of_perp_gradient(self, axis: int) -> VectorField2:
        """d_axis of (d2 f, -d1 f)."""
        f11, f12, f22 = self.hessian()
        if axis == 1:
            return VectorField2.from_arrays(self.grid, f12, -f11)
        return VectorField2.from_arrays(self.grid, f22, -f12)


# ------------------------------------------------------------------------------------------------ #
def make_cutoff(grid: Grid, transition_points: int = TRANSITION_POINTS) -> CutoffProfile:
    """Builds the cut-off for grid, requiring transition_points nodes across the band."""
    profile = CutoffProfile(grid)
    if not grid.dx < profile.width / transition_points:
        msg = (
            f"The cut-off transition band of width {profile.width:.4g} is under-resolved: "
            f"dx = {grid.dx:.4g} must be below width / {transition_points}. Increase n_points."
        )
        logger.error(msg)
        raise ValueError(msg)
    return profile
