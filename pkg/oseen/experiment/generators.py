#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/experiment/generators.py                                                     #
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
"""Named initial-data generators. Each returns a divergence-free velocity on the grid."""
from __future__ import annotations

import logging

import numpy as np

from oseen.exact.oseen import OseenParams, box_lamb_oseen_velocity, oseen_vorticity_at
from oseen.field.fields import ScalarField, VectorField2
from oseen.field.grid import Grid
from oseen.field.sampling import random_solenoidal_field
from oseen.field.spectral import spectral_operators
from oseen.services.io import IOService

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
def default_core_time(grid: Grid) -> float:
    return OseenParams.default_for(grid).core_time


def zero(grid: Grid, rng: np.random.Generator) -> VectorField2:
    return VectorField2.zeros(grid)


def lamb_oseen(
    grid: Grid, rng: np.random.Generator, alpha: float = 0.1, core_time: float = None
) -> VectorField2:
    """Mollified vortex alpha Theta(core_time) in its periodic-box form."""
    core_time = default_core_time(grid) if core_time is None else core_time
    return box_lamb_oseen_velocity(OseenParams(alpha, core_time), core_time, grid)


def gaussian_vortex(
    grid: Grid,
    rng: np.random.Generator,
    alpha: float = 0.1,
    sigma: float = 1.0,
    center: tuple = (0.0, 0.0),
) -> VectorField2:
    """Velocity of the vorticity alpha exp(-|x - c|^2 / sigma^2) / (pi sigma^2)."""
    x1, x2 = grid.mesh
    omega = oseen_vorticity_at(x1 - center[0], x2 - center[1], sigma**2 / 4, alpha)
    return spectral_operators(grid).biot_savart(ScalarField(grid, omega))


def dipole(
    grid: Grid,
    rng: np.random.Generator,
    alpha: float = 0.1,
    sigma: float = 1.0,
    separation: float = 2.0,
) -> VectorField2:
    """Two opposite Gaussian vortices at (0, +/- separation / 2); zero circulation."""
    half = separation / 2
    return gaussian_vortex(grid, rng, alpha, sigma, (0.0, half)) - gaussian_vortex(
        grid, rng, alpha, sigma, (0.0, -half)
    )


def random_solenoidal(
    grid: Grid, rng: np.random.Generator, n_modes: int = 6, amplitude: float = 0.1
) -> VectorField2:
    return random_solenoidal_field(grid, rng, n_modes=n_modes, amplitude=amplitude)


def snapshot(grid: Grid, rng: np.random.Generator, path: str = None) -> VectorField2:
    """Velocity of an NSF2 snapshot; the snapshot must match the grid."""
    state = IOService.read(path, ball_radius=grid.ball_radius)
    if (state.grid.n_points, state.grid.half_width) != (grid.n_points, grid.half_width):
        msg = (
            f"Snapshot {path} has n_points={state.grid.n_points}, "
            f"half_width={state.grid.half_width}; the configuration requires "
            f"n_points={grid.n_points}, half_width={grid.half_width}."
        )
        logger.error(msg)
        raise ValueError(msg)
    return state.velocity_field()


GENERATORS = {
    "zero": zero,
    "lamb_oseen": lamb_oseen,
    "gaussian_vortex": gaussian_vortex,
    "dipole": dipole,
    "random_solenoidal": random_solenoidal,
    "snapshot": snapshot,
}
