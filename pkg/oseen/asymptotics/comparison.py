#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/asymptotics/comparison.py                                                    #
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
"""Comparison of the exterior flow of truncated data with the whole-plane flow."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Sequence

from oseen.asymptotics.bounds import decay_bounds, scaled_series
from oseen.asymptotics.window import ValidWindow, trend_flags
from oseen.comparable.cutoff import TRANSITION_POINTS, make_cutoff
from oseen.comparable.truncation import truncate_field
from oseen.field.fields import VectorField2
from oseen.lorentz.norms import weak_lp_quasinorm
from oseen.lorentz.series import DecaySeries
from oseen.services.log import log
from oseen.solver.api import run
from oseen.solver.config import Mode, SimConfig
from oseen.solver.state import Trajectory

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
SMALLNESS_GATE = 0.5


# ------------------------------------------------------------------------------------------------ #
@dataclass
class ComparisonResult:
    """h_p(t) = t^(1/2-1/p)||u - v||_p and the perturbation series for w = u - v_bar."""

    difference: Dict[float, DecaySeries]
    perturbation: Dict[float, DecaySeries]
    bounds: Dict[str, DecaySeries] = field(default_factory=dict)
    weak_norm_v0: float = 0.0
    plane: Trajectory = field(default=None, repr=False)
    exterior: Trajectory = field(default=None, repr=False)

    def all_series(self) -> list:
        return [*self.difference.values(), *self.perturbation.values(), *self.bounds.values()]


def check_gate(v0: VectorField2, gate: float) -> float:
    weak = weak_lp_quasinorm(v0, 2.0)
    if weak > gate:
        msg = f"Initial data weak-L2 quasinorm {weak:.4g} exceeds the smallness gate {gate:.4g}."
        logger.error(msg)
        raise ValueError(msg)
    return weak


@log
def comparison_experiment(
    v0: VectorField2,
    config: SimConfig,
    p_list: Sequence[float] = (4.0, 8.0),
    gate: float = SMALLNESS_GATE,
    window: ValidWindow = None,
    transition_points: int = TRANSITION_POINTS,
    with_bounds: bool = True,
) -> ComparisonResult:
    """Runs the plane flow of v0 and the exterior flow of truncate_field(v0).

    Norms are taken over the common exterior region, obstacle nodes excluded.
    """
    weak = check_gate(v0, gate)
    cutoff = make_cutoff(v0.grid, transition_points)
    u0 = truncate_field(v0, cutoff)
    plane = run(config.with_mode(Mode.PLANE), v0)
    exterior_config = config.with_mode(Mode.EXTERIOR)
    exterior = run(exterior_config, u0)
    window = window or ValidWindow.for_grid(v0.grid)
    outside = ~exterior_config.obstacle_mask

    difference, perturbation = {}, {}
    for p in p_list:
        h = scaled_series(
            "h",
            plane.times,
            (exterior.velocity(i) - plane.velocity(i) for i in range(len(plane))),
            p,
            0.5 - 1.0 / p,
            target_exponent=0.0,
            mask=outside,
        )
        w = scaled_series(
            "w",
            plane.times,
            (
                exterior.velocity(i) - truncate_field(plane.velocity(i), cutoff)
                for i in range(len(plane))
            ),
            p,
            0.5 - 1.0 / p,
            target_exponent=0.0,
            mask=outside,
        )
        difference[p] = trend_flags(window.apply(h)) if len(h) else h
        perturbation[p] = window.apply(w) if len(w) else w
    bounds = {}
    if with_bounds:
        bounds = {
            name: window.apply(series) if len(series) else series
            for p in p_list
            for name, series in _named_bounds(plane, p).items()
        }
    return ComparisonResult(difference, perturbation, bounds, weak, plane, exterior)


def _named_bounds(plane: Trajectory, p: float) -> Dict[str, DecaySeries]:
    return {f"{name}_p{p:g}": series for name, series in decay_bounds(plane, p).items()}
