#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/asymptotics/stability.py                                                     #
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
"""Stability of the large-time behaviour under perturbations of the data."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from oseen.asymptotics.bounds import scaled_series
from oseen.asymptotics.comparison import SMALLNESS_GATE, check_gate
from oseen.asymptotics.window import ValidWindow
from oseen.field.fields import VectorField2
from oseen.lorentz.series import DecaySeries
from oseen.services.log import log
from oseen.solver.api import run, stokes_evolve
from oseen.solver.config import Mode, SimConfig

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
@dataclass
class StabilityResult:
    nonlinear: DecaySeries
    linear: DecaySeries

    @property
    def co_trending(self) -> bool:
        """Both series zero, or both fitted with slopes of the same sign."""
        if self.nonlinear.is_zero() and self.linear.is_zero():
            return True
        if not (self.nonlinear.fitted and self.linear.fitted):
            return False
        return (self.nonlinear.fitted_exponent < 0) == (self.linear.fitted_exponent < 0)


@log
def stability_check(
    u0_a: VectorField2,
    u0_b: VectorField2,
    config: SimConfig,
    p: float,
    gate: float = SMALLNESS_GATE,
    window: ValidWindow = None,
) -> StabilityResult:
    """t^(1/2-1/p)||u_a - u_b||_p for two exterior flows.

    Reported next to the linear counterpart t^(1/2-1/p)||e^{-tA}(u0_a - u0_b)||_p.
    """
    check_gate(u0_a, gate)
    check_gate(u0_b, gate)
    exterior = config.with_mode(Mode.EXTERIOR)
    outside = ~exterior.obstacle_mask
    traj_a = run(exterior, u0_a)
    traj_b = run(exterior, u0_b)
    linear = stokes_evolve(u0_a - u0_b, exterior)
    power = 0.5 - 1.0 / p
    window = window or ValidWindow.for_grid(config.grid)
    nonlinear_series = scaled_series(
        "stability_nonlinear",
        traj_a.times,
        (traj_a.velocity(i) - traj_b.velocity(i) for i in range(len(traj_a))),
        p,
        power,
        target_exponent=0.0,
        mask=outside,
    )
    linear_series = scaled_series(
        "stability_linear",
        linear.times,
        linear.velocities(),
        p,
        power,
        target_exponent=0.0,
        mask=outside,
    )
    result = StabilityResult(
        nonlinear=window.apply(nonlinear_series) if len(nonlinear_series) else nonlinear_series,
        linear=window.apply(linear_series) if len(linear_series) else linear_series,
    )
    result.nonlinear.flags["co_trending"] = result.co_trending
    return result
