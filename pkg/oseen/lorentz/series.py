#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/lorentz/series.py                                                            #
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
"""Decay series and power-law fitting."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, Optional, Tuple

import numpy as np
import pandas as pd
from scipy import stats

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
MIN_FIT_SAMPLES = 5


# ------------------------------------------------------------------------------------------------ #
@dataclass
class DecaySeries:
    """Samples (t_i, y_i) of a decay diagnostic with an optional power-law fit.

    Args:
        name (str): Series name, used in file names.
        times (np.ndarray): Strictly increasing positive times.
        values (np.ndarray): Finite nonnegative values.
        target_exponent (float): Predicted exponent, None when no rate is asserted.
        p (float): Lebesgue exponent of the underlying norm, if any.
    """

    name: str
    times: np.ndarray
    values: np.ndarray
    target_exponent: Optional[float] = None
    p: Optional[float] = None
    fitted_exponent: Optional[float] = None
    fitted_constant: Optional[float] = None
    fit_quality: Optional[float] = None
    fit_window: Optional[Tuple[float, float]] = None
    flags: Dict[str, bool] = field(default_factory=dict)
    step_flags: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        self.times = np.asarray(self.times, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.times.shape != self.values.shape or self.times.ndim != 1:
            msg = f"Series {self.name}: times and values must be 1-D arrays of equal length."
            logger.error(msg)
            raise ValueError(msg)
        if np.any(self.times <= 0) or np.any(np.diff(self.times) <= 0):
            msg = f"Series {self.name}: times must be positive and strictly increasing."
            logger.error(msg)
            raise ValueError(msg)
        if not np.all(np.isfinite(self.values)) or np.any(self.values < 0):
            msg = f"Series {self.name}: values must be finite and nonnegative."
            logger.error(msg)
            raise ValueError(msg)

    def __len__(self) -> int:
        return self.times.size

    @property
    def fitted(self) -> bool:
        return self.fitted_exponent is not None

    @property
    def filename(self) -> str:
        suffix = f"_p{self.p:g}" if self.p is not None else ""
        return f"series_{self.name}{suffix}.csv"

    def is_zero(self) -> bool:
        return bool(np.all(self.values == 0))

    def ratio(self) -> float:
        """Final over initial value; nan when the initial value is zero."""
        if len(self) == 0 or self.values[0] == 0:
            return float("nan")
        return float(self.values[-1] / self.values[0])

    def window(self, t_min: float, t_max: float) -> DecaySeries:
        keep = (self.times >= t_min) & (self.times <= t_max)
        step_flags = self.step_flags[keep] if self.step_flags is not None else None
        return replace(
            self, times=self.times[keep], values=self.values[keep], step_flags=step_flags
        )

    def is_nonincreasing(self, rtol: float = 1e-10) -> bool:
        steps = np.diff(self.values)
        return bool(np.all(steps <= rtol * np.maximum(self.values[:-1], np.finfo(float).tiny)))

    def relative_variation(self) -> float:
        """(max - min) / mean of the values."""
        mean = float(np.mean(self.values)) if len(self) else 0.0
        if mean == 0:
            return 0.0
        return float((self.values.max() - self.values.min()) / mean)

    def to_frame(self) -> pd.DataFrame:
        target = np.nan if self.target_exponent is None else self.target_exponent
        return pd.DataFrame(
            {"t": self.times, "value": self.values, "target_exponent": target}
        )

    @classmethod
    def from_frame(cls, name: str, data: pd.DataFrame, p: float = None) -> DecaySeries:
        target = data["target_exponent"].iloc[0] if len(data) else np.nan
        target = None if pd.isna(target) else float(target)
        return cls(
            name=name,
            times=data["t"].to_numpy(),
            values=data["value"].to_numpy(),
            target_exponent=target,
            p=p,
        )

    def summary(self) -> dict:
        """Flat scalar summary for reports."""
        prefix = self.filename[len("series_") : -len(".csv")]
        result = {
            f"{prefix}.samples": len(self),
            f"{prefix}.ratio": self.ratio(),
            f"{prefix}.target_exponent": self.target_exponent,
            f"{prefix}.fitted_exponent": self.fitted_exponent,
            f"{prefix}.fitted_constant": self.fitted_constant,
            f"{prefix}.fit_quality": self.fit_quality,
        }
        result.update({f"{prefix}.{key}": value for key, value in self.flags.items()})
        return result


# ------------------------------------------------------------------------------------------------ #
def fit_decay(series: DecaySeries, window: Tuple[float, float] = None) -> DecaySeries:
    """Least-squares line through (log t, log y) on the window.

    Returns a copy with fitted_exponent (slope), fitted_constant (exp of the intercept) and
    fit_quality (coefficient of determination, 1 for an exact fit) populated.
    """
    if window is None and len(series) == 0:
        msg = f"Series {series.name} is empty; there is nothing to fit."
        logger.error(msg)
        raise ValueError(msg)
    t_min, t_max = window if window is not None else (series.times[0], series.times[-1])
    keep = (series.times >= t_min) & (series.times <= t_max)
    times, values = series.times[keep], series.values[keep]
    if times.size < MIN_FIT_SAMPLES:
        msg = (
            f"Series {series.name}: {times.size} samples in window [{t_min:.4g}, {t_max:.4g}]; "
            f"at least {MIN_FIT_SAMPLES} are required."
        )
        logger.error(msg)
        raise ValueError(msg)
    if np.any(values <= 0):
        msg = f"Series {series.name}: nonpositive values in the fit window."
        logger.error(msg)
        raise ValueError(msg)

    x, y = np.log(times), np.log(values)
    regression = stats.linregress(x, y)
    residual = y - (regression.intercept + regression.slope * x)
    total = float(np.sum((y - y.mean()) ** 2))
    ss_res = float(np.sum(residual**2))
    quality = 1.0 if total == 0 or ss_res == 0 else float(np.clip(1 - ss_res / total, 0, 1))
    return replace(
        series,
        fitted_exponent=float(regression.slope),
        fitted_constant=float(np.exp(regression.intercept)),
        fit_quality=quality,
        fit_window=(float(t_min), float(t_max)),
    )
