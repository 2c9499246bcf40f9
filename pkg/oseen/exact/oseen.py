#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/exact/oseen.py                                                               #
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
"""Closed-form Lamb-Oseen vortex."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from oseen.field.fields import ScalarField, VectorField2
from oseen.field.grid import Grid
from oseen.field.spectral import spectral_operators

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class OseenParams:
    """Circulation multiple alpha and the core time t_c of the mollified initial vortex."""

    alpha: float = 1.0
    core_time: float = 1.0

    def __post_init__(self) -> None:
        if not np.isfinite(self.alpha):
            msg = f"alpha must be finite, got {self.alpha}."
            logger.error(msg)
            raise ValueError(msg)
        if not np.isfinite(self.core_time) or self.core_time <= 0:
            msg = f"core_time must be positive, got {self.core_time}."
            logger.error(msg)
            raise ValueError(msg)

    @classmethod
    def default_for(cls, grid: Grid, alpha: float = 1.0) -> OseenParams:
        """Core time 4 dx^2, so the core spans at least two cells."""
        return cls(alpha=alpha, core_time=4 * grid.dx**2)


def _check_time(t: float) -> None:
    if not t > 0:
        msg = f"The Lamb-Oseen vortex is defined for t > 0, got t = {t}."
        logger.error(msg)
        raise ValueError(msg)


# ------------------------------------------------------------------------------------------------ #
def oseen_velocity_at(x1: np.ndarray, x2: np.ndarray, t: float, alpha: float = 1.0) -> tuple:
    """alpha x_perp / (2 pi |x|^2) (1 - exp(-|x|^2 / 4t)), zero at the origin."""
    _check_time(t)
    r2 = np.asarray(x1, dtype=float) ** 2 + np.asarray(x2, dtype=float) ** 2
    with np.errstate(invalid="ignore", divide="ignore"):
        factor = np.where(r2 > 0, -np.expm1(-r2 / (4 * t)) / (2 * np.pi * r2), 0.0)
    return alpha * x2 * factor, -alpha * x1 * factor


def oseen_vorticity_at(x1: np.ndarray, x2: np.ndarray, t: float, alpha: float = 1.0) -> np.ndarray:
    """alpha exp(-|x|^2 / 4t) / (4 pi t)."""
    _check_time(t)
    r2 = np.asarray(x1, dtype=float) ** 2 + np.asarray(x2, dtype=float) ** 2
    return alpha * np.exp(-r2 / (4 * t)) / (4 * np.pi * t)


# ------------------------------------------------------------------------------------------------ #
def lamb_oseen_velocity(params: OseenParams, t: float, grid: Grid) -> VectorField2:
    x1, x2 = grid.mesh
    v1, v2 = oseen_velocity_at(x1, x2, t, params.alpha)
    return VectorField2.from_arrays(grid, v1, v2)


def lamb_oseen_vorticity(params: OseenParams, t: float, grid: Grid) -> ScalarField:
    x1, x2 = grid.mesh
    return ScalarField(grid, oseen_vorticity_at(x1, x2, t, params.alpha))


def initial_vortex(params: OseenParams, grid: Grid) -> VectorField2:
    """Mollified singular vortex: the Lamb-Oseen velocity at t = core_time."""
    return lamb_oseen_velocity(params, params.core_time, grid)


def box_lamb_oseen_velocity(params: OseenParams, t: float, grid: Grid) -> VectorField2:
    """Biot-Savart velocity of the sampled Lamb-Oseen vorticity on the periodic box.

    The sampled closed-form velocity decays like 1/|x| and is not periodic; this field is the
    exact box counterpart and is what the solvers evolve. Near the origin it equals the closed
    form plus background_rotation_at, up to a relative 3.15 (|x| / 2L)^4 from the image vortices
    of the square lattice. Without the background term the relative gap is about
    |x|^2 / (4 L^2) at radii well outside the core.
    """
    return spectral_operators(grid).biot_savart(lamb_oseen_vorticity(params, t, grid))


def background_rotation_at(
    x1: np.ndarray, x2: np.ndarray, alpha: float, half_width: float
) -> tuple:
    """Solid-body velocity of the uniform vorticity -alpha / (2L)^2 that neutralizes the box."""
    omega = -alpha / (2 * half_width) ** 2
    return 0.5 * omega * np.asarray(x2, dtype=float), -0.5 * omega * np.asarray(x1, dtype=float)
