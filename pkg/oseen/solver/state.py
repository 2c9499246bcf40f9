#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/solver/state.py                                                              #
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
"""Solver state and trajectories."""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Iterator, List, Optional, Union

import numpy as np
import pandas as pd

from oseen.field.fields import ScalarField, VectorField2
from oseen.field.spectral import spectral_operators

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class SimState:
    """Time, step count and exactly one of vorticity (plane form) or velocity (velocity form)."""

    time: float
    step_count: int = 0
    vorticity: Optional[ScalarField] = None
    velocity: Optional[VectorField2] = None

    def __post_init__(self) -> None:
        if (self.vorticity is None) == (self.velocity is None):
            msg = "A SimState holds exactly one of vorticity or velocity."
            logger.error(msg)
            raise ValueError(msg)

    @property
    def grid(self):
        return self.field.grid

    @property
    def field(self) -> Union[ScalarField, VectorField2]:
        return self.vorticity if self.vorticity is not None else self.velocity

    def velocity_field(self) -> VectorField2:
        if self.velocity is not None:
            return self.velocity
        return spectral_operators(self.grid).biot_savart(self.vorticity)

    def vorticity_field(self) -> ScalarField:
        if self.vorticity is not None:
            return self.vorticity
        return spectral_operators(self.grid).curl(self.velocity)

    def scaled(self, factor: float) -> SimState:
        if self.vorticity is not None:
            return replace(self, vorticity=self.vorticity * factor)
        return replace(self, velocity=self.velocity * factor)


# ------------------------------------------------------------------------------------------------ #
class Trajectory:
    """Snapshots in strictly increasing time with the diagnostics recorded alongside.

    Args:
        config (SimConfig): The configuration that produced the snapshots.
        snapshots (list): Initial SimStates, if any.
    """

    def __init__(self, config, snapshots: List[SimState] = None) -> None:
        self._config = config
        self._snapshots: List[SimState] = []
        self._records: List[dict] = []
        self._velocities = {}
        self.leak_violations = 0
        self._logger = logging.getLogger(
            f"{self.__module__}.{self.__class__.__name__}",
        )
        for state in snapshots or []:
            self.append(state)

    def __len__(self) -> int:
        return len(self._snapshots)

    def __getitem__(self, index: int) -> SimState:
        return self._snapshots[index]

    def __iter__(self) -> Iterator[SimState]:
        return iter(self._snapshots)

    @property
    def config(self):
        return self._config

    @property
    def grid(self):
        return self._config.grid

    @property
    def times(self) -> np.ndarray:
        return np.array([state.time for state in self._snapshots])

    @property
    def final(self) -> SimState:
        return self._snapshots[-1]

    def append(self, state: SimState, record: dict = None) -> None:
        if self._snapshots and not state.time > self._snapshots[-1].time:
            msg = (
                f"Snapshot time {state.time} does not exceed the previous time "
                f"{self._snapshots[-1].time}."
            )
            self._logger.error(msg)
            raise ValueError(msg)
        self._snapshots.append(state)
        if record is not None:
            self._records.append(record)

    def velocity(self, index: int) -> VectorField2:
        """Velocity of snapshot index, converted from vorticity once and cached."""
        index = index % len(self._snapshots)
        if index not in self._velocities:
            self._velocities[index] = self._snapshots[index].velocity_field()
        return self._velocities[index]

    def velocities(self) -> Iterator[VectorField2]:
        return (self.velocity(i) for i in range(len(self._snapshots)))

    @property
    def diagnostics(self) -> pd.DataFrame:
        columns = ["step", "t", "energy", "enstrophy", "max_u", "obstacle_leak"]
        return pd.DataFrame(self._records, columns=columns)
