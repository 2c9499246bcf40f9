#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/lorentz/norms.py                                                             #
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
"""Strong and weak Lebesgue norms, the small-value tail functional and space-time norms."""
from __future__ import annotations

import logging
from typing import Iterable, Sequence, Union

import numpy as np

from oseen.field.fields import ScalarField, VectorField2

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
Field = Union[ScalarField, VectorField2]
POINTS_PER_OCTAVE = 8


# ------------------------------------------------------------------------------------------------ #
def magnitude(f: Field, mask: np.ndarray = None) -> np.ndarray:
    """Pointwise |f| (Euclidean for vector fields), flattened, optionally restricted to mask."""
    values = f.magnitude() if isinstance(f, VectorField2) else f.abs()
    return values[mask] if mask is not None else values.ravel()


def lp_norm(f: Field, p: float, mask: np.ndarray = None) -> float:
    """(sum |f|^p dx^2)^(1/p) over the grid or over the nodes in mask."""
    if not 1 <= p < np.inf:
        msg = f"lp_norm requires 1 <= p < inf, got {p}."
        logger.error(msg)
        raise ValueError(msg)
    values = magnitude(f, mask)
    peak = values.max() if values.size else 0.0
    if peak == 0:
        return 0.0
    # Scale by the peak so |f|^p stays representable for large p.
    return float(peak * (np.sum((values / peak) ** p) * f.grid.cell_area) ** (1.0 / p))


def distribution_function(f: Field, level: float, mask: np.ndarray = None) -> float:
    """Area of {|f| > level}: dx^2 times the node count."""
    if level <= 0:
        msg = f"distribution_function requires a positive level, got {level}."
        logger.error(msg)
        raise ValueError(msg)
    return float(np.count_nonzero(magnitude(f, mask) > level) * f.grid.cell_area)


def weak_lp_quasinorm(f: Field, p: float, mask: np.ndarray = None) -> float:
    """max_k |f|_(k) (k dx^2)^(1/p) over the decreasing rearrangement of the samples.

    Without a mask the samples are those of the inscribed disk |x| < L, where the level sets of
    a decaying field are not clipped by the box.
    """
    if p <= 1:
        msg = f"weak_lp_quasinorm requires p > 1, got {p}."
        logger.error(msg)
        raise ValueError(msg)
    if mask is None:
        mask = f.grid.ball_mask(f.grid.half_width)
    values = np.sort(magnitude(f, mask))[::-1]
    if values.size == 0 or values[0] == 0:
        return 0.0
    areas = np.arange(1, values.size + 1) * f.grid.cell_area
    return float(np.max(values * areas ** (1.0 / p)))


def lambda_grid(
    lambda_min: float, lambda_max: float, points_per_octave: int = POINTS_PER_OCTAVE
) -> np.ndarray:
    """Dyadic levels lambda_min * 2^(j / points_per_octave) up to lambda_max."""
    if not 0 < lambda_min < lambda_max:
        msg = f"Expected 0 < lambda_min < lambda_max, got {lambda_min} and {lambda_max}."
        logger.error(msg)
        raise ValueError(msg)
    count = int(np.floor(points_per_octave * np.log2(lambda_max / lambda_min) + 1e-9)) + 1
    return lambda_min * 2.0 ** (np.arange(count) / points_per_octave)


def far_field_floor(f: Field) -> float:
    """max |f| on the box edge, below which level sets are truncated by the box."""
    return float(np.max(magnitude(f, f.grid.edge_mask)))


def small_value_tail(
    f: Field,
    p: float,
    lambda_min: float,
    lambda_max: float,
    points_per_octave: int = POINTS_PER_OCTAVE,
    mask: np.ndarray = None,
) -> float:
    """max over the dyadic lambda grid of lambda * distribution_function(f, lambda)^(1/p).

    The small-lambda limit has no finite-box analogue: level sets below the far-field floor
    fill the box, so the scan starts at lambda_min and a warning is logged when lambda_min
    does not exceed the floor.
    """
    levels = lambda_grid(lambda_min, lambda_max, points_per_octave)
    floor = far_field_floor(f)
    if floor > 0 and lambda_min <= floor:
        logger.warning(
            f"lambda_min {lambda_min:.3e} does not exceed the far-field floor {floor:.3e}; "
            "the scan is truncated by the box."
        )
    values = magnitude(f, mask)
    counts = np.array([np.count_nonzero(values > level) for level in levels])
    return float(np.max(levels * (counts * f.grid.cell_area) ** (1.0 / p)))


# ------------------------------------------------------------------------------------------------ #
def spacetime_norm(times: Sequence[float], fields: Iterable[Field], p: float = 4.0) -> float:
    """(sum_i w_i dt ||f_i||_p^p)^(1/p) with trapezoidal weights on equally spaced times."""
    times = np.asarray(times, dtype=float)
    if times.size < 2:
        msg = "A space-time norm needs at least two snapshots."
        logger.error(msg)
        raise ValueError(msg)
    steps = np.diff(times)
    if np.any(steps <= 0) or not np.allclose(steps, steps[0], rtol=1e-6, atol=0.0):
        msg = "Snapshots must be equally spaced in time."
        logger.error(msg)
        raise ValueError(msg)
    weights = np.full(times.size, steps[0])
    weights[0] = weights[-1] = steps[0] / 2
    powers = np.array([lp_norm(f, p) ** p for f in fields])
    if powers.size != times.size:
        msg = f"Got {powers.size} fields for {times.size} times."
        logger.error(msg)
        raise ValueError(msg)
    return float(np.sum(weights * powers) ** (1.0 / p))


def spacetime_l4_norm(trajectory) -> float:
    """L4 norm over (t_0, t_end) x box of the trajectory velocity."""
    return spacetime_norm(trajectory.times, trajectory.velocities(), p=4.0)
