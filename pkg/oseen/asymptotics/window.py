#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/asymptotics/window.py                                                        #
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
"""Valid time window of the periodic-box surrogate."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from oseen.field.grid import Grid
from oseen.lorentz.series import MIN_FIT_SAMPLES, DecaySeries, fit_decay

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class ValidWindow:
    """[10 t_c, (L/4)^2]: after the mollified core has spread, before the periodic images arrive."""

    t_min: float
    t_max: float

    @classmethod
    def for_grid(cls, grid: Grid, core_time: float = None) -> ValidWindow:
        core_time = 4 * grid.dx**2 if core_time is None else core_time
        return cls(t_min=10 * core_time, t_max=(grid.half_width / 4) ** 2)

    @property
    def decades(self) -> float:
        if self.t_max <= self.t_min:
            return 0.0
        return float(np.log10(self.t_max / self.t_min))

    def clipped(self, t_last: float) -> ValidWindow:
        """The window intersected with (0, t_last]."""
        return ValidWindow(self.t_min, min(self.t_max, t_last))

    def apply(self, series: DecaySeries) -> DecaySeries:
        """Fits series on the window when possible and sets the short_window flag."""
        window = self.clipped(series.times[-1]) if len(series) else self
        series.flags["short_window"] = window.decades < 1.0
        if series.flags["short_window"]:
            logger.warning(
                f"Series {series.name}: window [{window.t_min:.4g}, {window.t_max:.4g}] spans "
                f"{window.decades:.2f} decades, less than one."
            )
        inside = series.window(window.t_min, window.t_max)
        if len(inside) >= MIN_FIT_SAMPLES and np.all(inside.values > 0):
            return fit_decay(series, (window.t_min, window.t_max))
        return series


# ------------------------------------------------------------------------------------------------ #
def trend_flags(
    series: DecaySeries, ratio_threshold: float = 0.3, min_quality: float = 0.9
) -> DecaySeries:
    """Desk surrogates of a limit 0: negative fitted slope with a good fit, small end ratio.

    An identically zero series passes both.
    """
    if series.is_zero():
        series.flags.update(trend_decreasing=True, ratio_small=True)
        return series
    decreasing = (
        series.fitted
        and series.fitted_exponent < 0
        and series.fit_quality is not None
        and series.fit_quality > min_quality
    )
    ratio = series.ratio()
    series.flags["trend_decreasing"] = bool(decreasing)
    series.flags["ratio_small"] = bool(np.isfinite(ratio) and ratio < ratio_threshold)
    return series
