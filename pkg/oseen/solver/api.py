#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/solver/api.py                                                                #
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
"""Functional entry points over the solver classes."""
from __future__ import annotations

import logging
from typing import Union

from oseen.field.fields import ScalarField, VectorField2
from oseen.field.spectral import spectral_operators
from oseen.solver.base import Solver
from oseen.solver.config import Mode, SimConfig
from oseen.solver.plane import VorticitySolver
from oseen.solver.state import SimState, Trajectory
from oseen.solver.velocity import VelocitySolver

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
DIVERGENCE_RTOL = 1e-8


# ------------------------------------------------------------------------------------------------ #
def make_solver(config: SimConfig, advection: bool = True) -> Solver:
    """Vorticity form for plane mode, velocity form for the other modes."""
    if config.mode == Mode.PLANE:
        return VorticitySolver(config, advection)
    return VelocitySolver(config, advection)


def step_plane(state: SimState, dt: float, config: SimConfig) -> SimState:
    return VorticitySolver(config.with_mode(Mode.PLANE)).step(state, dt)


def step_exterior(state: SimState, dt: float, config: SimConfig) -> SimState:
    return VelocitySolver(config.with_mode(Mode.EXTERIOR)).step(state, dt)


def run(
    config: SimConfig,
    initial: Union[SimState, ScalarField, VectorField2],
    output_dir: str = None,
    write_snapshots: bool = True,
) -> Trajectory:
    return make_solver(config).run(initial, output_dir=output_dir, write_snapshots=write_snapshots)


def stokes_evolve(v0: VectorField2, config: SimConfig, output_dir: str = None) -> Trajectory:
    """Linear flow of v0 in the Stokes counterpart of config.mode; v0 must be divergence-free."""
    divergence = spectral_operators(v0.grid).divergence(v0).max_abs()
    if divergence > DIVERGENCE_RTOL * v0.max_abs():
        msg = f"stokes_evolve requires divergence-free data; max |div v0| = {divergence:.3e}."
        logger.error(msg)
        raise ValueError(msg)
    config = config.with_mode(config.mode.stokes)
    return VelocitySolver(config, advection=False).run(
        v0, output_dir=output_dir, write_snapshots=False
    )


def resume(state: SimState, config: SimConfig, output_dir: str = None) -> Trajectory:
    """Continues a run from a replayed state to config.t_end."""
    logger.info(f"Resuming from t = {state.time:.6g} to t_end = {config.t_end:.6g}.")
    return run(config, state, output_dir=output_dir)
