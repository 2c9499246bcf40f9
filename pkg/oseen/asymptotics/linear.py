#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/asymptotics/linear.py                                                        #
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
"""Stokes decay rates and the Lamb-Oseen asymptotics."""
from __future__ import annotations

import logging

import numpy as np

from oseen.asymptotics.bounds import scaled_series
from oseen.asymptotics.window import ValidWindow, trend_flags
from oseen.exact.oseen import OseenParams, box_lamb_oseen_velocity, lamb_oseen_velocity
from oseen.field.fields import VectorField2
from oseen.lorentz.series import DecaySeries
from oseen.services.log import log
from oseen.solver.api import stokes_evolve
from oseen.solver.config import SimConfig
from oseen.solver.state import Trajectory

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
RATE_TOLERANCE = 0.1


# ------------------------------------------------------------------------------------------------ #
@log
def stokes_decay_report(
    q: float, p: float, v0: VectorField2, config: SimConfig, window: ValidWindow = None
) -> DecaySeries:
    """||e^{-tA} v0||_p in the exterior Stokes flow, with target exponent 1/p - 1/q.

    The target is an upper bound on the rate: rate_bound_holds is set when the fitted exponent
    does not exceed target + 0.1. For q = p the final half of the series must be nonincreasing.
    """
    if not 1 < q <= p:
        msg = f"Invalid exponent pair (q, p) = ({q}, {p}); 1 < q <= p is required."
        logger.error(msg)
        raise ValueError(msg)
    traj = stokes_evolve(v0, config.with_mode("stokes_exterior"))
    series = scaled_series(
        f"stokes_q{q:g}", traj.times, traj.velocities(), p, 0.0, target_exponent=1 / p - 1 / q
    )
    if len(series) == 0:
        return series
    series = (window or ValidWindow.for_grid(v0.grid)).apply(series)
    if series.fitted:
        series.flags["rate_bound_holds"] = (
            series.fitted_exponent <= series.target_exponent + RATE_TOLERANCE
        )
    if q == p:
        half = series.times[len(series) // 2]
        series.flags["tail_nonincreasing"] = series.window(half, np.inf).is_nonincreasing()
    return series


@log
def lamb_oseen_convergence(
    traj: Trajectory,
    alpha: float,
    p: float,
    core_time: float,
    reference: str = "box",
    window: ValidWindow = None,
) -> DecaySeries:
    """s^(1/2-1/p)||u(t) - alpha Theta(s)||_p with s = t + core_time, over the exterior nodes.

    reference "box" compares with the periodic Biot-Savart velocity of the Lamb-Oseen vorticity,
    "closed" with the sampled closed form.
    """
    builders = {"box": box_lamb_oseen_velocity, "closed": lamb_oseen_velocity}
    try:
        builder = builders[reference]
    except KeyError:
        msg = f"{reference} is not a valid reference; use one of {sorted(builders)}."
        logger.error(msg)
        raise ValueError(msg)
    params = OseenParams(alpha=alpha, core_time=core_time)
    grid = traj.grid
    outside = ~traj.config.obstacle_mask
    series = scaled_series(
        "lamb_oseen",
        traj.times,
        (
            traj.velocity(i) - builder(params, t + core_time, grid)
            for i, t in enumerate(traj.times)
        ),
        p,
        0.5 - 1.0 / p,
        target_exponent=0.0,
        mask=outside,
        time_offset=core_time,
    )
    if len(series) == 0:
        return series
    series = (window or ValidWindow.for_grid(grid, core_time)).apply(series)
    return trend_flags(series)
