#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/solver/plane.py                                                              #
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
"""Whole-plane surrogate in vorticity form."""
from __future__ import annotations

from typing import Union

import numpy as np

from oseen.field.fields import ScalarField, VectorField2
from oseen.solver.base import Solver
from oseen.solver.state import SimState


# ------------------------------------------------------------------------------------------------ #
class VorticitySolver(Solver):
    """d_t w + v . grad w = Lap w with v = biot_savart(w). The mean vorticity is preserved."""

    def _field_of(self, state: SimState) -> ScalarField:
        return state.vorticity_field()

    def _to_array(self, field: Union[ScalarField, VectorField2]) -> np.ndarray:
        if isinstance(field, VectorField2):
            field = self._ops.curl(field)
        return np.array(field.values)

    def _make_state(self, values: np.ndarray, time: float, step_count: int) -> SimState:
        return SimState(time, step_count, vorticity=ScalarField(self._config.grid, values))

    def _nonlinear(self, u_hat: np.ndarray) -> np.ndarray:
        rhs = -self._ops.scalar_advection_hat(u_hat)
        rhs[0, 0] = 0.0
        return rhs

    def _max_velocity(self, values: np.ndarray) -> float:
        v = self._ops.ifft(self._ops.velocity_from_vorticity_hat(self._ops.fft(values)))
        return float(np.max(np.hypot(v[0], v[1])))
