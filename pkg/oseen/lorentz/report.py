#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/lorentz/report.py                                                            #
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
"""Lorentz report: strong norm, weak quasinorm and small-value tail of one field."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from oseen.lorentz.norms import (
    POINTS_PER_OCTAVE,
    Field,
    far_field_floor,
    lambda_grid,
    lp_norm,
    small_value_tail,
    weak_lp_quasinorm,
)

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
@dataclass
class LorentzReport:
    """Norms of a single field at exponent p.

    weak_quasinorm <= strong_norm holds with constant 1 (Chebyshev). tail_functional is the
    finite-box surrogate of the small-lambda limsup; floor_truncated is set when lambda_min
    does not exceed the far-field floor.
    """

    p: float
    strong_norm: float
    weak_quasinorm: float
    tail_functional: float
    lambda_min: float
    lambda_max: float
    far_field_floor: float
    floor_truncated: bool
    lambda_grid: np.ndarray = field(repr=False)

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "strong_norm": self.strong_norm,
            "weak_quasinorm": self.weak_quasinorm,
            "tail_functional": self.tail_functional,
            "lambda_min": self.lambda_min,
            "lambda_max": self.lambda_max,
            "lambda_count": int(self.lambda_grid.size),
            "far_field_floor": self.far_field_floor,
            "floor_truncated": self.floor_truncated,
        }

    def to_text(self) -> str:
        """Flat key=value lines."""
        return "".join(f"{key}={value}\n" for key, value in self.as_dict().items())


# ------------------------------------------------------------------------------------------------ #
def lorentz_report(
    f: Field,
    p: float,
    lambda_min: float = None,
    lambda_max: float = None,
    points_per_octave: int = POINTS_PER_OCTAVE,
) -> LorentzReport:
    """Builds a LorentzReport. The lambda range defaults to [2 x floor, max|f|]."""
    floor = far_field_floor(f)
    peak = f.max_abs()
    if lambda_max is None:
        lambda_max = peak
    if lambda_min is None:
        lambda_min = 2 * floor if floor > 0 else lambda_max * 1e-3
    if peak == 0 or lambda_max <= lambda_min:
        levels = np.empty(0)
        tail = 0.0
        if peak > 0:
            logger.warning(
                f"Empty lambda range [{lambda_min:.3e}, {lambda_max:.3e}]; tail reported as 0."
            )
    else:
        levels = lambda_grid(lambda_min, lambda_max, points_per_octave)
        tail = small_value_tail(f, p, lambda_min, lambda_max, points_per_octave)
    return LorentzReport(
        p=float(p),
        strong_norm=lp_norm(f, p),
        weak_quasinorm=weak_lp_quasinorm(f, p),
        tail_functional=tail,
        lambda_min=float(lambda_min),
        lambda_max=float(lambda_max),
        far_field_floor=floor,
        floor_truncated=bool(floor > 0 and lambda_min <= floor),
        lambda_grid=levels,
    )
