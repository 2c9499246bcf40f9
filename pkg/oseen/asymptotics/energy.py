#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/asymptotics/energy.py                                                        #
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
"""Energy of the difference of two flows."""
from __future__ import annotations

import logging

import numpy as np

from oseen.lorentz.norms import weak_lp_quasinorm
from oseen.lorentz.series import DecaySeries

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
def energy_monitor(traj_u, traj_w, C: float = 1.0, tol: float = 1e-8) -> DecaySeries:
    """||z(t)||_2^2 for z = u - w with a per-step flag on the energy decrement.

    A step from t_{i-1} to t_i is active while C ||w(t_{i-1})||_{2,inf} <= 1; it passes when
    E_i - E_{i-1} <= tol E_{i-1}. step_flags holds 1 (pass), 0 (fail) or -1 (inactive), aligned
    with the emitted samples; samples at t <= 0 are not emitted.
    """
    times = traj_u.times
    if len(times) != len(traj_w.times) or not np.allclose(times, traj_w.times, rtol=1e-12, atol=0):
        msg = "energy_monitor requires trajectories on the same time base."
        logger.error(msg)
        raise ValueError(msg)
    area = traj_u.grid.cell_area
    energies = np.array(
        [
            float(np.sum((traj_u.velocity(i) - traj_w.velocity(i)).magnitude() ** 2) * area)
            for i in range(len(times))
        ]
    )
    flags = np.full(len(times), -1, dtype=np.int8)
    for i in range(1, len(times)):
        if C * weak_lp_quasinorm(traj_w.velocity(i - 1), 2.0) <= 1:
            allowed = tol * max(energies[i - 1], np.finfo(float).tiny)
            flags[i] = 1 if energies[i] - energies[i - 1] <= allowed else 0
    keep = times > 0
    series = DecaySeries("energy", times[keep], energies[keep], step_flags=flags[keep])
    active = series.step_flags[series.step_flags >= 0]
    series.flags["decrements_pass"] = bool(np.all(active == 1))
    return series
