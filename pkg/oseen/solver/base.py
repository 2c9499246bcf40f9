#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/solver/base.py                                                               #
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
"""Integrating-factor Runge-Kutta time stepping shared by the plane and velocity solvers."""
from __future__ import annotations

import logging
import os
from abc import ABC, abstractmethod
from dataclasses import replace
from typing import Callable, Union

import numpy as np
from tqdm import tqdm

from oseen.exceptions import CFLViolationError
from oseen.field.fields import ScalarField, VectorField2
from oseen.field.spectral import spectral_operators
from oseen.services.io import IOService
from oseen.services.log import log
from oseen.solver.config import SimConfig
from oseen.solver.state import SimState, Trajectory

# ------------------------------------------------------------------------------------------------ #
# Williamson low-storage RK3 in Butcher form.
RK3_C = (0.0, 1.0 / 3.0, 3.0 / 4.0)
RK3_A = ((), (1.0 / 3.0,), (-3.0 / 16.0, 15.0 / 16.0))
RK3_B = (1.0 / 6.0, 3.0 / 10.0, 8.0 / 15.0)


# ------------------------------------------------------------------------------------------------ #
def lawson_rk3(
    u_hat: np.ndarray,
    dt: float,
    nonlinear: Callable[[np.ndarray], np.ndarray],
    heat: Callable[[float], np.ndarray],
) -> np.ndarray:
    """One Lawson step of du/dt = -|k|^2 u + N(u): the viscous part is integrated exactly."""
    stages = []
    for i, c in enumerate(RK3_C):
        stage = heat(c * dt) * u_hat
        for j, a in enumerate(RK3_A[i]):
            stage = stage + dt * a * heat((c - RK3_C[j]) * dt) * stages[j]
        stages.append(nonlinear(stage))
    result = heat(dt) * u_hat
    for j, b in enumerate(RK3_B):
        result = result + dt * b * heat((1.0 - RK3_C[j]) * dt) * stages[j]
    return result


# ------------------------------------------------------------------------------------------------ #
class Solver(ABC):
    """Advances a SimState with viscosity 1.

    Args:
        config (SimConfig): Run configuration.
        advection (bool): False drops the nonlinear term, giving the Stokes flow.
    """

    def __init__(self, config: SimConfig, advection: bool = True) -> None:
        self._config = config
        self._advection = advection and not config.mode.is_stokes
        self._ops = spectral_operators(config.grid)
        self._cfl_warned = False
        self._logger = logging.getLogger(
            f"{self.__module__}.{self.__class__.__name__}",
        )

    @property
    def config(self) -> SimConfig:
        return self._config

    @property
    def advection(self) -> bool:
        return self._advection

    # -------------------------------------------------------------------------------------------- #
    @abstractmethod
    def _field_of(self, state: SimState) -> Union[ScalarField, VectorField2]:
        """The evolved field of state, converting from the other form if needed."""

    @abstractmethod
    def _to_array(self, field: Union[ScalarField, VectorField2]) -> np.ndarray:
        """Physical values of field; (N, N) or (2, N, N)."""

    @abstractmethod
    def _make_state(self, values: np.ndarray, time: float, step_count: int) -> SimState:
        """SimState from physical values."""

    @abstractmethod
    def _nonlinear(self, u_hat: np.ndarray) -> np.ndarray:
        """Spectrum of the explicit right-hand side."""

    @abstractmethod
    def _max_velocity(self, values: np.ndarray) -> float:
        """max |v| of the physical values."""

    def _after_step(self, values: np.ndarray, dt: float) -> np.ndarray:
        """Hook applied to the physical values after each substep."""
        return values

    # -------------------------------------------------------------------------------------------- #
    def _advance(self, values: np.ndarray, dt: float) -> np.ndarray:
        if self._advection:
            u_hat = lawson_rk3(self._ops.fft(values), dt, self._nonlinear, self._ops.heat)
        else:
            u_hat = self._ops.heat(dt) * self._ops.fft(values)
        return self._after_step(self._ops.ifft(u_hat), dt)

    def _substeps(self, values: np.ndarray, dt: float, time: float) -> int:
        if not self._advection:
            return 1
        speed = self._max_velocity(values)
        limit = self._config.cfl * self._config.grid.dx / speed if speed > 0 else np.inf
        if dt <= limit:
            return 1
        if not self._config.adaptive:
            msg = (
                f"dt = {dt:.4g} violates the CFL bound {limit:.4g} at t = {time:.6g} "
                "and adaptive stepping is disabled."
            )
            self._logger.error(msg)
            raise CFLViolationError(msg)
        count = int(np.ceil(dt / limit))
        if not self._cfl_warned:
            self._logger.warning(
                f"CFL bound {limit:.4g} below dt = {dt:.4g} at t = {time:.6g}; "
                f"taking {count} substeps."
            )
            self._cfl_warned = True
        return count

    def step(self, state: SimState, dt: float = None) -> SimState:
        """Advances state by dt (default config.dt), substepping if the CFL bound requires it."""
        dt = self._config.dt if dt is None else dt
        values = self._to_array(self._field_of(state))
        count = self._substeps(values, dt, state.time)
        for _ in range(count):
            values = self._advance(values, dt / count)
        if not np.all(np.isfinite(values)):
            msg = (
                f"Non-finite values after step {state.step_count + 1} "
                f"at t = {state.time + dt:.6g}."
            )
            self._logger.error(msg)
            raise FloatingPointError(msg)
        return self._make_state(values, state.time + dt, state.step_count + 1)

    def _step_size(self, previous: float, target: float) -> float:
        """config.dt unless the final step is shortened to land on t_end."""
        dt = self._config.dt
        return dt if abs(target - previous - dt) <= 1e-9 * dt else target - previous

    # -------------------------------------------------------------------------------------------- #
    def record(self, state: SimState) -> dict:
        """Diagnostics row for a snapshot."""
        v = state.velocity_field()
        omega = state.vorticity_field()
        area = self._config.grid.cell_area
        mask = self._config.obstacle_mask
        magnitude = v.magnitude()
        return {
            "step": state.step_count,
            "t": state.time,
            "energy": float(np.sum(magnitude**2) * area),
            "enstrophy": float(np.sum(omega.values**2) * area),
            "max_u": float(magnitude.max()),
            "obstacle_leak": float(magnitude[mask].max()) if mask.any() else 0.0,
        }

    def _check_leak(self, trajectory: Trajectory, record: dict) -> None:
        tolerance = self._config.tolerance_penal_factor * record["max_u"]
        if record["obstacle_leak"] > tolerance:
            trajectory.leak_violations += 1
            self._logger.warning(
                f"Obstacle leakage {record['obstacle_leak']:.3e} exceeds tolerance "
                f"{tolerance:.3e} at t = {record['t']:.6g}."
            )

    @log
    def run(
        self,
        initial: Union[SimState, ScalarField, VectorField2],
        output_dir: str = None,
        write_snapshots: bool = True,
    ) -> Trajectory:
        """Steps from initial (a state, or a field at t = 0) to config.t_end.

        With an output_dir, snapshots are written as NSF2 files and the diagnostics as
        diagnostics.csv; the diagnostics are flushed even when the run aborts.
        """
        if isinstance(initial, SimState):
            values = self._to_array(self._field_of(initial))
            state = self._make_state(values, initial.time, initial.step_count)
        else:
            state = self._make_state(self._to_array(initial), 0.0, 0)
        trajectory = Trajectory(self._config)
        n_steps = self._config.steps_between(state.time)
        start, dt = state.time, self._config.dt

        def snapshot(current: SimState) -> None:
            record = self.record(current)
            trajectory.append(current, record)
            self._check_leak(trajectory, record)
            if output_dir and write_snapshots:
                IOService.write(
                    os.path.join(output_dir, "snapshots", f"state_{current.step_count:08d}.nsf2"),
                    current,
                )

        try:
            snapshot(state)
            with tqdm(total=n_steps, disable=not self._config.show_progress) as progress:
                for k in range(1, n_steps + 1):
                    time = self._config.t_end if k == n_steps else start + k * dt
                    state = replace(self.step(state, self._step_size(state.time, time)), time=time)
                    if k % self._config.snapshot_every == 0 or k == n_steps:
                        snapshot(state)
                    progress.update(1)
        finally:
            if output_dir:
                IOService.write(os.path.join(output_dir, "diagnostics.csv"), trajectory.diagnostics)
        return trajectory
