#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/exact/similarity.py                                                          #
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
"""Self-similarity residual of a trajectory."""
from __future__ import annotations

import logging

import numpy as np

from oseen.lorentz.norms import lp_norm
from oseen.lorentz.series import DecaySeries

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
def self_similar_residual(traj, p: float, time_offset: float = 0.0) -> DecaySeries:
    """y_i = s_i^(1/2 - 1/p) ||v(t_i)||_p with s_i = t_i + time_offset; constant when self-similar.

    Snapshots with s_i <= 0 are dropped. For a run started from the mollified vortex at core
    time t_c, time_offset = t_c measures time from the singular initial datum.
    """
    times, values = [], []
    for i, t in enumerate(traj.times):
        s = t + time_offset
        if s <= 0:
            continue
        times.append(s)
        values.append(s ** (0.5 - 1.0 / p) * lp_norm(traj.velocity(i), p))
    if len(times) < len(traj.times):
        logger.debug(f"Dropped {len(traj.times) - len(times)} snapshots at nonpositive time.")
    return DecaySeries(
        name="self_similar",
        times=np.array(times),
        values=np.array(values),
        target_exponent=0.0,
        p=p,
    )
