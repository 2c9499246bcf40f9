#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/solver/config.py                                                             #
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
"""Simulation configuration."""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, fields, replace
from enum import Enum
from typing import Optional

import numpy as np

from oseen.field.grid import Grid

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
class Mode(str, Enum):
    PLANE = "plane"
    EXTERIOR = "exterior"
    STOKES_PLANE = "stokes_plane"
    STOKES_EXTERIOR = "stokes_exterior"

    @property
    def is_stokes(self) -> bool:
        return self in (Mode.STOKES_PLANE, Mode.STOKES_EXTERIOR)

    @property
    def has_obstacle(self) -> bool:
        return self in (Mode.EXTERIOR, Mode.STOKES_EXTERIOR)

    @property
    def stokes(self) -> Mode:
        return Mode.STOKES_EXTERIOR if self.has_obstacle else Mode.STOKES_PLANE


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class SimConfig:
    """Run parameters. Viscosity is fixed at 1.

    Args:
        grid (Grid): Periodic grid.
        dt (float): Time step.
        t_end (float): Final time. Runs start at t = 0 unless resumed from a later state.
        snapshot_every (int): Steps between snapshots.
        mode (Mode): plane | exterior | stokes_plane | stokes_exterior.
        penalization_eta (float): Brinkman parameter, default dt / 10, at most dt.
        obstacle_radius (float): Radius of the disk obstacle, default R / 4, below R / 2.
        cfl (float): CFL number used for adaptive substepping.
        adaptive (bool): Substep when the CFL bound is violated; otherwise raise.
        show_progress (bool): Progress bar on stderr.
    """

    grid: Grid
    dt: float
    t_end: float
    snapshot_every: int = 1
    mode: Mode = Mode.PLANE
    penalization_eta: Optional[float] = None
    obstacle_radius: Optional[float] = None
    cfl: float = 0.5
    adaptive: bool = True
    show_progress: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", Mode(self.mode))
        if not np.isfinite(self.dt) or self.dt <= 0:
            self._fail(f"dt must be positive, got {self.dt}.")
        if not np.isfinite(self.t_end) or self.t_end < 0:
            self._fail(f"t_end must be nonnegative, got {self.t_end}.")
        if int(self.snapshot_every) != self.snapshot_every or self.snapshot_every < 1:
            self._fail(f"snapshot_every must be a positive integer, got {self.snapshot_every}.")
        if not 0 < self.cfl <= 1:
            self._fail(f"cfl must lie in (0, 1], got {self.cfl}.")
        if self.penalization_eta is None:
            object.__setattr__(self, "penalization_eta", self.dt / 10)
        if not 0 < self.penalization_eta <= self.dt:
            self._fail(f"penalization_eta must lie in (0, dt], got {self.penalization_eta}.")
        if self.obstacle_radius is None:
            object.__setattr__(self, "obstacle_radius", self.grid.ball_radius / 4)
        if not 0 <= self.obstacle_radius < self.grid.ball_radius / 2:
            self._fail(
                f"obstacle_radius must lie in [0, R/2) = [0, {self.grid.ball_radius / 2}), "
                f"got {self.obstacle_radius}."
            )

    @staticmethod
    def _fail(msg: str) -> None:
        logger.error(msg)
        raise ValueError(msg)

    @property
    def n_steps(self) -> int:
        """Steps from t = 0 to t_end."""
        return self.steps_between(0.0)

    def steps_between(self, start: float) -> int:
        duration = self.t_end - start
        if duration < -1e-12 * max(1.0, self.t_end):
            self._fail(f"Start time {start} lies after t_end {self.t_end}.")
        return max(0, int(np.ceil(duration / self.dt - 1e-9)))

    @property
    def obstacle_mask(self) -> np.ndarray:
        """Obstacle nodes; empty for plane modes or a zero radius."""
        if not self.mode.has_obstacle:
            return np.zeros(self.grid.shape, dtype=bool)
        return self.grid.ball_mask(self.obstacle_radius)

    @property
    def tolerance_penal_factor(self) -> float:
        return 10 * np.sqrt(self.penalization_eta)

    def with_mode(self, mode: Mode) -> SimConfig:
        return replace(self, mode=Mode(mode))

    def with_t_end(self, t_end: float) -> SimConfig:
        return replace(self, t_end=t_end)

    def as_dict(self) -> dict:
        result = asdict(self)
        result["grid"] = self.grid.as_dict()
        result["mode"] = self.mode.value
        return result

    @classmethod
    def from_dict(cls, data: dict) -> SimConfig:
        """Inverse of as_dict. Unknown keys raise KeyError naming the key."""
        allowed = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - allowed)
        if unknown:
            msg = f"Unknown SimConfig key: {unknown[0]}."
            logger.error(msg)
            raise KeyError(unknown[0])
        values = dict(data)
        grid = values.get("grid")
        if isinstance(grid, dict):
            values["grid"] = Grid(**grid)
        return cls(**values)
