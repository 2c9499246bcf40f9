#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/field/spectral.py                                                            #
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
"""Spectral transforms and differential operators on the periodic box.

Conventions:
    * Forward transform unnormalized, inverse divides by N^2 (scipy.fft defaults).
    * Wavenumbers k = pi * m / L; the Nyquist wavenumber is zeroed in every derivative symbol
      so that the Laplacian equals div(grad) exactly on the grid.
    * x_perp = (x2, -x1), grad_perp = (d2, -d1) and curl u = d2 u1 - d1 u2. With this choice
      the Biot-Savart velocity of a positive vortex is grad_perp of the stream function and
      curl(biot_savart(w)) = w - mean(w).
    * Dealiasing keeps modes with |m1| < N/3 and |m2| < N/3.
"""
from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np
import scipy.fft as sfft

from oseen.field.fields import ScalarField, SpectralField, VectorField2
from oseen.field.grid import Grid

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
class SpectralOperators:
    """Fourier symbols of a Grid and the operators built on them.

    Args:
        grid (Grid): The periodic grid.
    """

    def __init__(self, grid: Grid) -> None:
        self._grid = grid
        n = grid.n_points
        m = sfft.fftfreq(n, d=1.0 / n)
        k = m * np.pi / grid.half_width
        k[n // 2] = 0.0
        self._k1, self._k2 = np.meshgrid(k, k, indexing="ij")
        self._k_squared = self._k1**2 + self._k2**2
        with np.errstate(divide="ignore"):
            self._inverse_k_squared = np.where(
                self._k_squared > 0, 1.0 / self._k_squared, 0.0
            )
        m1, m2 = np.meshgrid(m, m, indexing="ij")
        self._dealias = (np.abs(m1) < n / 3) & (np.abs(m2) < n / 3)
        self._logger = logging.getLogger(
            f"{self.__module__}.{self.__class__.__name__}",
        )

    @property
    def grid(self) -> Grid:
        return self._grid

    @property
    def k1(self) -> np.ndarray:
        return self._k1

    @property
    def k2(self) -> np.ndarray:
        return self._k2

    @property
    def k_squared(self) -> np.ndarray:
        return self._k_squared

    @property
    def inverse_k_squared(self) -> np.ndarray:
        return self._inverse_k_squared

    @property
    def dealias_mask(self) -> np.ndarray:
        return self._dealias

    # -------------------------------------------------------------------------------------------- #
    #                                      RAW ARRAYS                                              #
    # -------------------------------------------------------------------------------------------- #
    def fft(self, values: np.ndarray) -> np.ndarray:
        """Forward transform over the last two axes."""
        return sfft.fft2(values)

    def ifft(self, coefficients: np.ndarray) -> np.ndarray:
        """Inverse transform over the last two axes, real part."""
        return sfft.ifft2(coefficients).real

    def heat(self, tau: float) -> np.ndarray:
        """Heat semigroup symbol exp(-|k|^2 tau)."""
        return np.exp(-self._k_squared * tau)

    def velocity_from_vorticity_hat(self, omega_hat: np.ndarray) -> np.ndarray:
        """Spectral Biot-Savart law; the k=0 mode of omega is ignored."""
        psi_hat = -omega_hat * self._inverse_k_squared
        return np.stack([1j * self._k2 * psi_hat, -1j * self._k1 * psi_hat])

    def project_hat(self, u_hat: np.ndarray) -> np.ndarray:
        """Leray projection of stacked spectral components."""
        k_dot_u = (self._k1 * u_hat[0] + self._k2 * u_hat[1]) * self._inverse_k_squared
        return np.stack([u_hat[0] - self._k1 * k_dot_u, u_hat[1] - self._k2 * k_dot_u])

    def advection_hat(self, u_hat: np.ndarray) -> np.ndarray:
        """Spectrum of the dealiased product (w . grad) w with w the truncated velocity."""
        w_hat = u_hat * self._dealias
        w = self.ifft(w_hat)
        d1 = self.ifft(1j * self._k1 * w_hat)
        d2 = self.ifft(1j * self._k2 * w_hat)
        product = w[0] * d1 + w[1] * d2
        return self.fft(product) * self._dealias

    def scalar_advection_hat(self, omega_hat: np.ndarray) -> np.ndarray:
        """Spectrum of the dealiased product v . grad(omega), v the Biot-Savart velocity."""
        w_hat = omega_hat * self._dealias
        v = self.ifft(self.velocity_from_vorticity_hat(w_hat))
        d1 = self.ifft(1j * self._k1 * w_hat)
        d2 = self.ifft(1j * self._k2 * w_hat)
        return self.fft(v[0] * d1 + v[1] * d2) * self._dealias

    # -------------------------------------------------------------------------------------------- #
    #                                      FIELDS                                                  #
    # -------------------------------------------------------------------------------------------- #
    def to_spectral(self, f: ScalarField) -> SpectralField:
        return SpectralField(self._grid, self.fft(f.values))

    def to_physical(self, spectrum: SpectralField) -> ScalarField:
        values = sfft.ifft2(spectrum.coefficients)
        scale = max(float(np.max(np.abs(values.real))), np.finfo(float).tiny)
        imaginary = float(np.max(np.abs(values.imag)))
        if imaginary > 1e-8 * scale:
            self._logger.warning(
                f"Inverse transform has imaginary part {imaginary:.3e}; the spectrum is not "
                "Hermitian. The real part is kept."
            )
        return ScalarField(self._grid, values.real)

    def derivative(self, f: ScalarField, axis: int) -> ScalarField:
        if axis not in (1, 2):
            msg = f"axis must be 1 or 2, got {axis}."
            self._logger.error(msg)
            raise ValueError(msg)
        k = self._k1 if axis == 1 else self._k2
        return ScalarField(self._grid, self.ifft(1j * k * self.fft(f.values)))

    def laplacian(self, f: ScalarField) -> ScalarField:
        return ScalarField(self._grid, self.ifft(-self._k_squared * self.fft(f.values)))

    def inverse_laplacian(self, f: ScalarField, rtol: float = 1e-10) -> ScalarField:
        """Solves Lap(g) = f for mean-zero g. f must have zero mean."""
        f_hat = self.fft(f.values)
        mean = abs(f_hat[0, 0]) / self._grid.n_points**2
        if mean > rtol * max(f.max_abs(), np.finfo(float).tiny):
            msg = (
                f"inverse_laplacian requires a mean-zero field; mean is {mean:.3e}. "
                "Subtract the mean first."
            )
            self._logger.error(msg)
            raise ValueError(msg)
        return ScalarField(self._grid, self.ifft(-f_hat * self._inverse_k_squared))

    def gradient(self, f: ScalarField) -> VectorField2:
        f_hat = self.fft(f.values)
        return VectorField2.from_arrays(
            self._grid, self.ifft(1j * self._k1 * f_hat), self.ifft(1j * self._k2 * f_hat)
        )

    def perp_gradient(self, f: ScalarField) -> VectorField2:
        """(d2 f, -d1 f)."""
        f_hat = self.fft(f.values)
        return VectorField2.from_arrays(
            self._grid, self.ifft(1j * self._k2 * f_hat), self.ifft(-1j * self._k1 * f_hat)
        )

    def divergence(self, v: VectorField2) -> ScalarField:
        u_hat = self.fft(v.stack())
        return ScalarField(self._grid, self.ifft(1j * (self._k1 * u_hat[0] + self._k2 * u_hat[1])))

    def curl(self, v: VectorField2) -> ScalarField:
        """d2 v1 - d1 v2."""
        u_hat = self.fft(v.stack())
        return ScalarField(self._grid, self.ifft(1j * (self._k2 * u_hat[0] - self._k1 * u_hat[1])))

    def leray_project(self, v: VectorField2) -> VectorField2:
        projected = self.ifft(self.project_hat(self.fft(v.stack())))
        return VectorField2.from_arrays(self._grid, projected[0], projected[1])

    def biot_savart(self, omega: ScalarField) -> VectorField2:
        """Velocity grad_perp(Lap^-1 (omega - mean)), the periodic surrogate of the plane law."""
        v = self.ifft(self.velocity_from_vorticity_hat(self.fft(omega.values)))
        return VectorField2.from_arrays(self._grid, v[0], v[1])

    def nonlinear_term(self, v: VectorField2) -> VectorField2:
        """Dealiased advection term (v . grad) v."""
        u_hat = self.fft(v.stack())
        divergence = np.max(np.abs(self.ifft(1j * (self._k1 * u_hat[0] + self._k2 * u_hat[1]))))
        if divergence > 1e-8 * max(v.max_abs(), np.finfo(float).tiny):
            self._logger.warning(
                f"nonlinear_term received a field with divergence {divergence:.3e}; the "
                "energy identity does not apply."
            )
        advection = self.ifft(self.advection_hat(u_hat))
        return VectorField2.from_arrays(self._grid, advection[0], advection[1])

    def pressure_from_velocity(self, v: VectorField2) -> ScalarField:
        """p = -sum_ij d_i d_j Lap^-1 (v_i v_j), built from dealiased products. Mean zero."""
        w = self.ifft(self.fft(v.stack()) * self._dealias)
        q11 = self.fft(w[0] * w[0]) * self._dealias
        q12 = self.fft(w[0] * w[1]) * self._dealias
        q22 = self.fft(w[1] * w[1]) * self._dealias
        symbol = self._k1**2 * q11 + 2 * self._k1 * self._k2 * q12 + self._k2**2 * q22
        return ScalarField(self._grid, self.ifft(-symbol * self._inverse_k_squared))


# ------------------------------------------------------------------------------------------------ #
@lru_cache(maxsize=16)
def spectral_operators(grid: Grid) -> SpectralOperators:
    """Shared operator instance per grid."""
    return SpectralOperators(grid)


# ------------------------------------------------------------------------------------------------ #
def to_spectral(f: ScalarField) -> SpectralField:
    return spectral_operators(f.grid).to_spectral(f)


def to_physical(spectrum: SpectralField) -> ScalarField:
    return spectral_operators(spectrum.grid).to_physical(spectrum)


def derivative(f: ScalarField, axis: int) -> ScalarField:
    return spectral_operators(f.grid).derivative(f, axis)


def laplacian(f: ScalarField) -> ScalarField:
    return spectral_operators(f.grid).laplacian(f)


def inverse_laplacian(f: ScalarField) -> ScalarField:
    return spectral_operators(f.grid).inverse_laplacian(f)


def gradient(f: ScalarField) -> VectorField2:
    return spectral_operators(f.grid).gradient(f)


def perp_gradient(f: ScalarField) -> VectorField2:
    return spectral_operators(f.grid).perp_gradient(f)


def divergence(v: VectorField2) -> ScalarField:
    return spectral_operators(v.grid).divergence(v)


def curl(v: VectorField2) -> ScalarField:
    return spectral_operators(v.grid).curl(v)


def leray_project(v: VectorField2) -> VectorField2:
    return spectral_operators(v.grid).leray_project(v)


def biot_savart(omega: ScalarField) -> VectorField2:
    return spectral_operators(omega.grid).biot_savart(omega)


def nonlinear_term(v: VectorField2) -> VectorField2:
    return spectral_operators(v.grid).nonlinear_term(v)


def pressure_from_velocity(v: VectorField2) -> ScalarField:
    return spectral_operators(v.grid).pressure_from_velocity(v)
