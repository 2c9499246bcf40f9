#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/asymptotics/smallness.py                                                     #
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
"""Large-data smallness condition in two dimensions."""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from oseen.field.fields import VectorField2
from oseen.lorentz.norms import lp_norm, spacetime_l4_norm, weak_lp_quasinorm
from oseen.services.log import log
from oseen.solver.api import run, stokes_evolve
from oseen.solver.config import Mode, SimConfig

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
DEFAULT_K = 10.0
DEFAULT_C1 = 1.0
EXPLICIT_EXPONENT = 4.0


# ------------------------------------------------------------------------------------------------ #
@dataclass
class SmallnessReport:
    """Both sides of ||e^{-tA} w0||_{L4((0,T_eps) x Omega)} <= 1 / (K U e^{K U^4}).

    U = ||u_tilde0||_2.

    T_eps is the first snapshot time at which the weak-L2 quasinorm of the exterior flow of
    u_tilde0 drops below eps/3, and None when not reached (inconclusive). When u_tilde0 = 0
    (small_data_regime) T_eps is the first positive snapshot time.
    """

    T_eps: Optional[float]
    eps: float
    spacetime_l4: float
    bound_rhs: float
    K_used: float
    condition_met: bool
    small_data_regime: bool = False
    inconclusive: bool = False
    explicit_bound: Optional[float] = None
    explicit_condition_met: Optional[bool] = None
    gronwall_lhs: Optional[float] = None
    gronwall_rhs: Optional[float] = None
    gronwall_holds: Optional[bool] = None

    def as_dict(self) -> dict:
        return asdict(self)


def smallness_bound(u_norm: float, K: float) -> float:
    """1 / (K U exp(K U^4)), evaluated in log form; infinite for U = 0."""
    if u_norm == 0:
        return float("inf")
    return float(np.exp(-np.log(K * u_norm) - K * u_norm**4))


@log
def dim2_smallness_check(
    u_tilde0: VectorField2,
    w0: VectorField2,
    eps: float,
    K: float,
    config: SimConfig,
    C1: float = DEFAULT_C1,
    a: float = EXPLICIT_EXPONENT,
    gronwall: bool = True,
) -> SmallnessReport:
    if eps <= 0 or K <= 0:
        msg = f"eps and K must be positive, got eps = {eps}, K = {K}."
        logger.error(msg)
        raise ValueError(msg)
    exterior = config.with_mode(Mode.EXTERIOR)
    u_norm = lp_norm(u_tilde0, 2.0)
    rhs = smallness_bound(u_norm, K)

    if u_norm == 0:
        t_first = min(exterior.dt * exterior.snapshot_every, exterior.t_end)
        logger.info(
            f"u_tilde0 vanishes: small-data regime, T_eps taken as the first snapshot "
            f"{t_first:.4g}."
        )
        linear = stokes_evolve(w0, exterior.with_t_end(t_first))
        return SmallnessReport(
            T_eps=t_first,
            eps=eps,
            spacetime_l4=spacetime_l4_norm(linear),
            bound_rhs=rhs,
            K_used=K,
            condition_met=True,
            small_data_regime=True,
        )

    large = run(exterior, u_tilde0)
    t_eps = next(
        (
            float(t)
            for i, t in enumerate(large.times)
            if t > 0 and weak_lp_quasinorm(large.velocity(i), 2.0) < eps / 3
        ),
        None,
    )
    if t_eps is None:
        logger.warning(
            f"The weak-L2 quasinorm of the flow did not drop below eps/3 = {eps / 3:.4g} by "
            f"t_end = {config.t_end:.4g}; the check is inconclusive."
        )
        return SmallnessReport(
            T_eps=None,
            eps=eps,
            spacetime_l4=float("nan"),
            bound_rhs=rhs,
            K_used=K,
            condition_met=False,
            inconclusive=True,
        )

    short = exterior.with_t_end(t_eps)
    linear = stokes_evolve(w0, short)
    w_norm = spacetime_l4_norm(linear)
    explicit = lp_norm(w0, a) * t_eps ** (0.5 - 1.0 / a)
    report = SmallnessReport(
        T_eps=t_eps,
        eps=eps,
        spacetime_l4=w_norm,
        bound_rhs=rhs,
        K_used=K,
        condition_met=bool(w_norm <= rhs),
        explicit_bound=explicit,
        explicit_condition_met=bool(explicit <= rhs),
    )
    if gronwall:
        _gronwall_audit(report, u_tilde0, w0, short, large, linear, u_norm, w_norm, C1)
    return report


def _gronwall_audit(report, u_tilde0, w0, config, large, linear, u_norm, w_norm, C1) -> None:
    """||z(T)||^2 <= C1 W^2 (W^2 + U^2) exp(C1 (W^4 + U^4)), z = u - u_tilde - e^{-tA} w0."""
    full = run(config, u_tilde0 + w0)
    count = min(len(full), len(linear))
    final = count - 1
    z = full.velocity(final) - large.velocity(final) - linear.velocity(final)
    lhs = lp_norm(z, 2.0) ** 2
    rhs = C1 * w_norm**2 * (w_norm**2 + u_norm**2) * np.exp(C1 * (w_norm**4 + u_norm**4))
    report.gronwall_lhs = float(lhs)
    report.gronwall_rhs = float(rhs)
    report.gronwall_holds = bool(lhs <= rhs)
