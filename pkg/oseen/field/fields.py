#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/field/fields.py                                                              #
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
"""Scalar, vector and spectral fields sampled on a Grid."""
from __future__ import annotations

import logging
from typing import Callable, Union

import numpy as np

from oseen.field.grid import Grid

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
Number = Union[int, float]


# ------------------------------------------------------------------------------------------------ #
def _frozen_array(grid: Grid, values: np.ndarray, name: str) -> np.ndarray:
    array = np.array(values, dtype=np.float64)
    if array.size == grid.n_points**2 and array.shape != grid.shape:
        array = array.reshape(grid.shape)
    if array.shape != grid.shape:
        msg = f"{name} has shape {array.shape}; the grid requires {grid.shape}."
        logger.error(msg)
        raise ValueError(msg)
    if not np.all(np.isfinite(array)):
        msg = f"{name} contains non-finite values."
        logger.error(msg)
        raise ValueError(msg)
    array.setflags(write=False)
    return array


# ------------------------------------------------------------------------------------------------ #
class ScalarField:
    """Real samples, one per grid node. Immutable.

    Args:
        grid (Grid): The sampling grid.
        values (np.ndarray): N x N array (or N^2 row-major samples) indexed [x1, x2].
    """

    __array_ufunc__ = None

    def __init__(self, grid: Grid, values: np.ndarray) -> None:
        self._grid = grid
        self._values = _frozen_array(grid, values, "ScalarField values")

    @classmethod
    def zeros(cls, grid: Grid) -> ScalarField:
        return cls(grid, np.zeros(grid.shape))

    @classmethod
    def from_function(cls, grid: Grid, func: Callable) -> ScalarField:
        """Samples func(x1, x2) at the nodes."""
        x1, x2 = grid.mesh
        return cls(grid, func(x1, x2))

    @property
    def grid(self) -> Grid:
        return self._grid

    @property
    def values(self) -> np.ndarray:
        return self._values

    def abs(self) -> np.ndarray:
        return np.abs(self._values)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self._values)))

    def mean(self) -> float:
        return float(np.mean(self._values))

    def integral(self) -> float:
        return float(np.sum(self._values) * self._grid.cell_area)

    def restrict(self, mask: np.ndarray) -> ScalarField:
        """Zero outside mask."""
        return ScalarField(self._grid, np.where(mask, self._values, 0.0))

    def _check(self, other: ScalarField) -> None:
        if other.grid != self._grid:
            msg = "Fields live on different grids."
            logger.error(msg)
            raise ValueError(msg)

    def __add__(self, other: ScalarField) -> ScalarField:
        self._check(other)
        return ScalarField(self._grid, self._values + other.values)

    def __sub__(self, other: ScalarField) -> ScalarField:
        self._check(other)
        return ScalarField(self._grid, self._values - other.values)

    def __mul__(self, other: Union[Number, ScalarField]) -> ScalarField:
        if isinstance(other, ScalarField):
            self._check(other)
            return ScalarField(self._grid, self._values * other.values)
        if not isinstance(other, (int, float, np.number)):
            return NotImplemented
        return ScalarField(self._grid, self._values * other)

    __rmul__ = __mul__

    def __neg__(self) -> ScalarField:
        return ScalarField(self._grid, -self._values)

    def __repr__(self) -> str:
        return f"ScalarField(n_points={self._grid.n_points}, max_abs={self.max_abs():.6g})"


# ------------------------------------------------------------------------------------------------ #
class VectorField2:
    """Planar vector field given by two ScalarFields on the same grid.

    Args:
        u1 (ScalarField): First component.
        u2 (ScalarField): Second component.
    """

    __array_ufunc__ = None

    def __init__(self, u1: ScalarField, u2: ScalarField) -> None:
        if u1.grid != u2.grid:
            msg = "Vector components must share the same grid."
            logger.error(msg)
            raise ValueError(msg)
        self._u1 = u1
        self._u2 = u2

    @classmethod
    def zeros(cls, grid: Grid) -> VectorField2:
        return cls(ScalarField.zeros(grid), ScalarField.zeros(grid))

    @classmethod
    def from_arrays(cls, grid: Grid, a1: np.ndarray, a2: np.ndarray) -> VectorField2:
        return cls(ScalarField(grid, a1), ScalarField(grid, a2))

    @classmethod
    def from_function(cls, grid: Grid, func: Callable) -> VectorField2:
        """Samples func(x1, x2) -> (v1, v2) at the nodes."""
        x1, x2 = grid.mesh
        a1, a2 = func(x1, x2)
        return cls.from_arrays(grid, a1, a2)

    @property
    def grid(self) -> Grid:
        return self._u1.grid

    @property
    def u1(self) -> ScalarField:
        return self._u1

    @property
    def u2(self) -> ScalarField:
        return self._u2

    @property
    def components(self) -> tuple:
        return (self._u1, self._u2)

    def stack(self) -> np.ndarray:
        """Component values as a (2, N, N) array."""
        return np.stack([self._u1.values, self._u2.values])

    def magnitude(self) -> np.ndarray:
        return np.hypot(self._u1.values, self._u2.values)

    def max_abs(self) -> float:
        return float(np.max(self.magnitude()))

    def dot(self, other: VectorField2) -> ScalarField:
        return self._u1 * other.u1 + self._u2 * other.u2

    def inner(self, other: VectorField2) -> float:
        """Discrete L2 inner product sum(u . v) dx^2."""
        return self.dot(other).integral()

    def restrict(self, mask: np.ndarray) -> VectorField2:
        return VectorField2(self._u1.restrict(mask), self._u2.restrict(mask))

    def __add__(self, other: VectorField2) -> VectorField2:
        return VectorField2(self._u1 + other.u1, self._u2 + other.u2)

    def __sub__(self, other: VectorField2) -> VectorField2:
        return VectorField2(self._u1 - other.u1, self._u2 - other.u2)

    def __mul__(self, other: Union[Number, ScalarField]) -> VectorField2:
        return VectorField2(self._u1 * other, self._u2 * other)

    __rmul__ = __mul__

    def __neg__(self) -> VectorField2:
        return VectorField2(-self._u1, -self._u2)

    def __repr__(self) -> str:
        return f"VectorField2(n_points={self.grid.n_points}, max_abs={self.max_abs():.6g})"


# ------------------------------------------------------------------------------------------------ #
class SpectralField:
    """Unnormalized discrete Fourier coefficients of a real field.

    The forward transform is unnormalized and the inverse divides by N^2, so a constant c
    carries the single coefficient c * N^2 at k = 0. Coefficients are stored in FFT order;
    index m along an axis corresponds to the wavenumber pi * m / L.
    """

    def __init__(self, grid: Grid, coefficients: np.ndarray) -> None:
        coefficients = np.array(coefficients, dtype=np.complex128)
        if coefficients.shape != grid.shape:
            msg = f"Coefficients have shape {coefficients.shape}; the grid requires {grid.shape}."
            logger.error(msg)
            raise ValueError(msg)
        coefficients.setflags(write=False)
        self._grid = grid
        self._coefficients = coefficients

    @property
    def grid(self) -> Grid:
        return self._grid

    @property
    def coefficients(self) -> np.ndarray:
        return self._coefficients

    def hermitian_defect(self) -> float:
        """max |F(-k) - conj F(k)| relative to max |F|."""
        c = self._coefficients
        mirrored = np.roll(np.flip(c, axis=(0, 1)), shift=1, axis=(0, 1))
        scale = max(float(np.max(np.abs(c))), np.finfo(float).tiny)
        return float(np.max(np.abs(mirrored - np.conj(c))) / scale)

    def nonzero_modes(self, rtol: float = 1e-12) -> int:
        c = np.abs(self._coefficients)
        if c.max() == 0:
            return 0
        return int(np.count_nonzero(c > rtol * c.max()))
