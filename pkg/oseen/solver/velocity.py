#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/solver/velocity.py                                                           #
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
"""Velocity form with Brinkman penalization of a disk obstacle."""
from __future__ import annotations

from typing import Union

import numpy as np

from oseen.field.fields import ScalarField, VectorField2
from oseen.solver.base import Solver
from oseen.solver.state import SimState


# ------------------------------------------------------------------------------------------------ #
class VelocitySolver(Solver):
    """d_t u + P((u . grad) u) = Lap u - chi u / eta, chi the obstacle indicator.

    Each step applies the Lawson update, then the implicit penalization u <- u / (1 + chi dt / eta)
    and a re-projection. Both are skipped when the obstacle holds no node, so the solver
    reproduces the plane flow.
    """

    def __init__(self, config, advection: bool = True) -> None:
        super().__init__(config, advection)
        self._mask = config.obstacle_mask
        self._penalized = bool(self._mask.any())

    def _field_of(self, state: SimState) -> VectorField2:
        return state.velocity_field()

    def _to_array(self, field: Union[ScalarField, VectorField2]) -> np.ndarray:
        if isinstance(field, ScalarField):
            field = self._ops.biot_savart(field)
        return field.stack()

    def _make_state(self, values: np.ndarray, time: float, step_count: int) -> SimState:
        velocity = VectorField2.from_arrays(self._config.grid, values[0], values[1])
        return SimState(time, step_count, velocity=velocity)

    def _nonlinear(self, u_hat: np.ndarray) -> np.ndarray:
        rhs = -self._ops.project_hat(self._ops.advection_hat(u_hat))
        rhs[:, 0, 0] = 0.0
        return rhs

    def _max_velocity(self, values: np.ndarray) -> float:
        return float(np.max(np.hypot(values[0], values[1])))

    def penalize(self, values: np.ndarray, dt: float) -> np.ndarray:
        """Implicit Brinkman update, without re-projection."""
        return values / (1.0 + self._mask * dt / self._config.penalization_eta)

    def _after_step(self, values: np.ndarray, dt: float) -> np.ndarray:
        if not self._penalized:
            return values
        return self._ops.ifft(self._ops.project_hat(self._ops.fft(self.penalize(values, dt))))
