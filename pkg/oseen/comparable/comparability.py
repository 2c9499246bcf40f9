#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/comparable/comparability.py                                                  #
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
"""Comparability at infinity, height splitting and the exterior restriction projection."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from oseen.field.fields import VectorField2
from oseen.field.spectral import spectral_operators
from oseen.lorentz.norms import lp_norm, weak_lp_quasinorm

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
class ComparabilityReport(NamedTuple):
    norm: float
    compactly_supported_difference: bool


def comparability_report(
    u0: VectorField2,
    v0: VectorField2,
    q: float,
    obstacle_radius: float = None,
    rtol: float = 1e-8,
) -> ComparabilityReport:
    """||(u0 - v0) 1_{|x| > R_obs}||_q and whether u0 - v0 vanishes outside B_R."""
    if u0.grid != v0.grid:
        msg = "comparability_report received fields on different grids."
        logger.error(msg)
        raise ValueError(msg)
    if not 1 < q <= 2:
        msg = f"The comparability exponent must lie in (1, 2], got {q}."
        logger.error(msg)
        raise ValueError(msg)
    grid = u0.grid
    if obstacle_radius is None:
        obstacle_radius = grid.ball_radius / 4
    difference = u0 - v0
    exterior = grid.radius >= obstacle_radius
    norm = lp_norm(difference, q, mask=exterior)
    outside = ~grid.ball_mask()
    scale = max(u0.max_abs(), v0.max_abs(), np.finfo(float).tiny)
    residual = float(np.max(difference.magnitude()[outside]))
    return ComparabilityReport(norm, residual <= rtol * scale)


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class SplitResult:
    """u0 = large_part + small_part up to a discrete gradient."""

    large_part: VectorField2
    small_part: VectorField2
    threshold: float
    weak_norm_of_small: float
    large_mask: np.ndarray


def split_by_height(u0: VectorField2, threshold: float, p: float = 2.0) -> SplitResult:
    """Nodes with |u0| > threshold go to the large part; both parts are then Leray-projected."""
    if threshold <= 0:
        msg = f"The splitting threshold must be positive, got {threshold}."
        logger.error(msg)
        raise ValueError(msg)
    ops = spectral_operators(u0.grid)
    large_mask = u0.magnitude() > threshold
    large = ops.leray_project(u0.restrict(large_mask))
    small = ops.leray_project(u0.restrict(~large_mask))
    return SplitResult(
        large_part=large,
        small_part=small,
        threshold=float(threshold),
        weak_norm_of_small=weak_lp_quasinorm(small, p),
        large_mask=large_mask,
    )


# ------------------------------------------------------------------------------------------------ #
def project_restriction(
    v: VectorField2, obstacle_radius: float = None, iterations: int = 50
) -> VectorField2:
    """Divergence-free field close to v on the exterior and small inside the obstacle.

    Alternates zeroing inside the obstacle with the whole-box Leray projection.
    """
    grid = v.grid
    if obstacle_radius is None:
        obstacle_radius = grid.ball_radius / 4
    ops = spectral_operators(grid)
    exterior = grid.radius >= obstacle_radius
    field = ops.leray_project(v)
    for _ in range(iterations):
        field = ops.leray_project(field.restrict(exterior))
    leak = float(np.max(field.magnitude()[~exterior])) if np.any(~exterior) else 0.0
    logger.debug(f"project_restriction: {iterations} iterations, obstacle leak {leak:.3e}.")
    return field
