#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/field/grid.py                                                                #
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
"""Uniform periodic grid on the box [-L, L)^2 used as a surrogate for the plane."""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from functools import cached_property

import numpy as np

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class Grid:
    """Uniform N x N sampling of the periodic box [-L, L)^2.

    Node (i, j) sits at x1 = -L + i*dx, x2 = -L + j*dx, so arrays are indexed [x1, x2]. The
    origin is the node (N/2, N/2).

    Args:
        n_points (int): Points per side. Even and at least 32.
        half_width (float): L, the half side of the box.
        ball_radius (float): R, the radius of the ball B_R containing the cut-off transition.
            The obstacle lives inside B_{R/2}.
    """

    n_points: int
    half_width: float
    ball_radius: float

    def __post_init__(self) -> None:
        if isinstance(self.n_points, bool) or int(self.n_points) != self.n_points:
            msg = f"n_points must be an integer, got {self.n_points}."
            logger.error(msg)
            raise TypeError(msg)
        if self.n_points < 32 or self.n_points % 2 != 0:
            msg = f"n_points must be even and at least 32, got {self.n_points}."
            logger.error(msg)
            raise ValueError(msg)
        if not np.isfinite(self.half_width) or self.half_width <= 0:
            msg = f"half_width must be a positive length, got {self.half_width}."
            logger.error(msg)
            raise ValueError(msg)
        if not np.isfinite(self.ball_radius) or self.ball_radius <= 0:
            msg = f"ball_radius must be a positive length, got {self.ball_radius}."
            logger.error(msg)
            raise ValueError(msg)
        if 4 * self.ball_radius > self.half_width * (1 + 1e-12):
            msg = (
                f"half_width {self.half_width} must be at least 4 * ball_radius "
                f"({4 * self.ball_radius})."
            )
            logger.error(msg)
            raise ValueError(msg)

    @property
    def dx(self) -> float:
        return 2 * self.half_width / self.n_points

    @property
    def cell_area(self) -> float:
        return self.dx**2

    @property
    def shape(self) -> tuple:
        return (self.n_points, self.n_points)

    @cached_property
    def nodes(self) -> np.ndarray:
        """One dimensional node coordinates -L + j*dx."""
        return -self.half_width + self.dx * np.arange(self.n_points)

    @cached_property
    def mesh(self) -> tuple:
        """Coordinate arrays (x1, x2) with indexing [x1, x2]."""
        x1, x2 = np.meshgrid(self.nodes, self.nodes, indexing="ij")
        x1.setflags(write=False)
        x2.setflags(write=False)
        return x1, x2

    @cached_property
    def radius(self) -> np.ndarray:
        x1, x2 = self.mesh
        r = np.hypot(x1, x2)
        r.setflags(write=False)
        return r

    @cached_property
    def edge_mask(self) -> np.ndarray:
        """Nodes on the outermost ring of the box."""
        mask = np.zeros(self.shape, dtype=bool)
        mask[0, :] = mask[-1, :] = mask[:, 0] = mask[:, -1] = True
        return mask

    def ball_mask(self, radius: float = None) -> np.ndarray:
        """Nodes strictly inside the disk of the given radius (default R), by node center."""
        radius = self.ball_radius if radius is None else radius
        return self.radius < radius

    def index_of(self, coordinate: float, nearest: bool = False) -> int:
        """Returns the node index of a coordinate lying on the grid, or of the closest node."""
        index = (coordinate + self.half_width) / self.dx
        rounded = int(round(index))
        off_node = abs(index - rounded) > 1e-9 and not nearest
        if off_node or not 0 <= rounded < self.n_points:
            msg = f"Coordinate {coordinate} is not a node of the grid."
            logger.error(msg)
            raise ValueError(msg)
        return rounded

    def as_dict(self) -> dict:
        return asdict(self)
