#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/field/sampling.py                                                            #
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
"""Random band-limited corpora, grid rotations and debugging slices."""
from __future__ import annotations

import logging
from typing import Union

import numpy as np
import pandas as pd

from oseen.field.fields import ScalarField, VectorField2
from oseen.field.grid import Grid
from oseen.field.spectral import spectral_operators
from oseen.services.io import IOService

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
def _band_limited(grid: Grid, rng: np.random.Generator, n_modes: int) -> np.ndarray:
    if n_modes < 1 or n_modes >= grid.n_points // 3:
        msg = f"n_modes must lie in [1, {grid.n_points // 3}), got {n_modes}."
        logger.error(msg)
        raise ValueError(msg)
    n = grid.n_points
    m = np.fft.fftfreq(n, d=1.0 / n)
    m1, m2 = np.meshgrid(m, m, indexing="ij")
    band = (np.abs(m1) <= n_modes) & (np.abs(m2) <= n_modes)
    envelope = np.exp(-(m1**2 + m2**2) / n_modes**2)
    coefficients = (rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape))
    coefficients *= band * envelope
    coefficients[0, 0] = 0.0
    return np.fft.ifft2(coefficients).real


def random_scalar_field(
    grid: Grid, rng: np.random.Generator, n_modes: int = 6, amplitude: float = 1.0
) -> ScalarField:
    """Mean-zero smooth random field with modes |m| <= n_modes, scaled to max |f| = amplitude."""
    values = _band_limited(grid, rng, n_modes)
    values -= values.mean()
    return ScalarField(grid, amplitude * values / np.max(np.abs(values)))


def random_solenoidal_field(
    grid: Grid, rng: np.random.Generator, n_modes: int = 6, amplitude: float = 1.0
) -> VectorField2:
    """Divergence-free smooth random field grad_perp(g), scaled to max |v| = amplitude."""
    stream = ScalarField(grid, _band_limited(grid, rng, n_modes))
    v = spectral_operators(grid).perp_gradient(stream)
    return v * (amplitude / v.max_abs())


# ------------------------------------------------------------------------------------------------ #
def _rotate_array(values: np.ndarray) -> np.ndarray:
    n = values.shape[0]
    index = (n - np.arange(n)) % n
    return values.T[index, :]


def rotate_quarter(
    field: Union[ScalarField, VectorField2]
) -> Union[ScalarField, VectorField2]:
    """Counterclockwise rotation by pi/2 about the origin: (Rf)(x) = R f(R^-1 x).

    The square grid is mapped onto itself, so the rotation is exact.
    """
    if isinstance(field, ScalarField):
        return ScalarField(field.grid, _rotate_array(field.values))
    v1 = _rotate_array(field.u1.values)
    v2 = _rotate_array(field.u2.values)
    return VectorField2.from_arrays(field.grid, -v2, v1)


# ------------------------------------------------------------------------------------------------ #
def slice_frame(
    field: Union[ScalarField, VectorField2], axis: int = 1, coordinate: float = 0.0
) -> pd.DataFrame:
    """One dimensional slice along x_axis through the node line nearest x_other = coordinate."""
    grid = field.grid
    index = grid.index_of(coordinate, nearest=True)
    columns = {"x": grid.nodes}
    arrays = (
        {"value": field.values}
        if isinstance(field, ScalarField)
        else {"u1": field.u1.values, "u2": field.u2.values}
    )
    for name, values in arrays.items():
        columns[name] = values[:, index] if axis == 1 else values[index, :]
    return pd.DataFrame(columns)


def write_slice_csv(
    field: Union[ScalarField, VectorField2], path: str, axis: int = 1, coordinate: float = 0.0
) -> pd.DataFrame:
    """Writes slice_frame(field, axis, coordinate) to a CSV file and returns it."""
    frame = slice_frame(field, axis, coordinate)
    IOService.write(path, frame)
    return frame
