#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/experiment/experiments.py                                                    #
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
"""Experiment classes, one per experiment kind."""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from datetime import datetime
from typing import Dict, List

import numpy as np

from oseen.asymptotics.comparison import comparison_experiment
from oseen.asymptotics.forcing import forcing_decomposition, forcing_series
from oseen.asymptotics.linear import lamb_oseen_convergence, stokes_decay_report
from oseen.asymptotics.smallness import dim2_smallness_check
from oseen.asymptotics.stability import stability_check
from oseen.asymptotics.window import ValidWindow
from oseen.comparable.cutoff import make_cutoff
from oseen.comparable.truncation import truncate_field
from oseen.exact.similarity import self_similar_residual
from oseen.experiment.generators import default_core_time, gaussian_vortex, lamb_oseen
from oseen.experiment.spec import ExperimentSpec
from oseen.field.sampling import rotate_quarter
from oseen.lorentz.series import DecaySeries
from oseen.services.datetime import Timer
from oseen.solver.api import run
from oseen.solver.config import Mode


# ------------------------------------------------------------------------------------------------ #
@dataclass
class ExperimentResult:
    """Series to persist, scalar results, and the flags whose failure fails the run."""

    series: List[DecaySeries] = field(default_factory=list)
    scalars: Dict[str, object] = field(default_factory=dict)
    asserted: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.asserted.values())

    def flat(self) -> dict:
        result = {}
        for series in self.series:
            result.update(series.summary())
        result.update(self.scalars)
        result.update({f"asserted.{key}": value for key, value in self.asserted.items()})
        return result


# ------------------------------------------------------------------------------------------------ #
class Experiment(ABC):
    """Runs one experiment kind from an ExperimentSpec.

    Args:
        spec (ExperimentSpec): The validated specification.
        seed (int): Seed of the random generator used by randomized initial data.
    """

    kind = None
    desc = None

    def __init__(self, spec: ExperimentSpec, seed: int = 0) -> None:
        self._spec = spec
        self._seed = seed
        self._rng = np.random.default_rng(seed)
        self._timer = Timer()
        self._state = "created"
        self._logger = logging.getLogger(
            f"{self.__module__}.{self.__class__.__name__}",
        )

    @property
    def name(self) -> str:
        return self._spec.id

    @property
    def spec(self) -> ExperimentSpec:
        return self._spec

    @property
    def started(self) -> datetime:
        return self._timer.started

    @property
    def ended(self) -> datetime:
        return self._timer.stopped

    @property
    def duration(self) -> float:
        return self._timer.duration.total_seconds if self._timer.started else None

    @property
    def state(self) -> str:
        return self._state

    @property
    def core_time(self) -> float:
        core = self._spec.data.core_time
        return core if core is not None else default_core_time(self._spec.sim.grid)

    @property
    def window(self) -> ValidWindow:
        return ValidWindow.for_grid(self._spec.sim.grid, self.core_time)

    def initial_data(self):
        return self._spec.data.build(self._spec.sim.grid, self._rng)

    def run(self) -> ExperimentResult:
        self._setup()
        try:
            result = self._execute()
        except Exception:
            self._state = "failed"
            self._timer.stop()
            raise
        self._setdown()
        return result

    def _setup(self) -> None:
        self._logger.info(f"Started experiment {self.name} ({self.kind}).")
        self._timer.start()
        self._state = "running"

    def _setdown(self) -> None:
        self._timer.stop()
        self._state = "success"
        self._logger.info(
            f"Completed experiment {self.name}. Duration: {self._timer.duration.as_string()}."
        )

    def _trend(self, flags: Dict[str, bool]) -> Dict[str, bool]:
        return flags if self._spec.assert_trends else {}

    @abstractmethod
    def _execute(self) -> ExperimentResult:
        """Runs the experiment."""


# ------------------------------------------------------------------------------------------------ #
class CompareExperiment(Experiment):
    kind = "compare"
    desc = "Exterior flow of truncated data against the plane flow."

    def _execute(self) -> ExperimentResult:
        params = self._spec.params
        result = comparison_experiment(
            self.initial_data(),
            self._spec.sim,
            p_list=self._spec.p_list,
            gate=params["gate"],
            window=self.window,
            transition_points=params["transition_points"],
            with_bounds=params["with_bounds"],
        )
        asserted = {}
        for p, series in result.difference.items():
            for flag in ("trend_decreasing", "ratio_small"):
                if flag in series.flags:
                    asserted[f"h_p{p:g}.{flag}"] = series.flags[flag]
        scalars = {
            "weak_norm_v0": result.weak_norm_v0,
            "leak_violations": result.exterior.leak_violations,
        }
        return ExperimentResult(result.all_series(), scalars, self._trend(asserted))


class StokesDecayExperiment(Experiment):
    kind = "stokes-decay"
    desc = "Decay exponents of the exterior Stokes flow."

    def _execute(self) -> ExperimentResult:
        q = self._spec.params["q"]
        v0 = self.initial_data()
        series, asserted = [], {}
        for p in self._spec.p_list:
            if p < q:
                continue
            item = stokes_decay_report(q, p, v0, self._spec.sim, self.window)
            series.append(item)
            for flag in ("rate_bound_holds", "tail_nonincreasing"):
                if flag in item.flags:
                    asserted[f"stokes_p{p:g}.{flag}"] = item.flags[flag]
        if q in (2.0, 2):
            item = stokes_decay_report(q, q, v0, self._spec.sim, self.window)
            series.append(item)
            if "tail_nonincreasing" in item.flags:
                asserted["stokes_p2.tail_nonincreasing"] = item.flags["tail_nonincreasing"]
        return ExperimentResult(series, {"q": q}, self._trend(asserted))


class LambOseenExperiment(Experiment):
    kind = "lamb-oseen"
    desc = "Convergence to the Lamb-Oseen vortex, with a mismatched circulation control."

    def _execute(self) -> ExperimentResult:
        params = self._spec.params
        config = self._spec.sim.with_mode(Mode(params["mode"]))
        v0 = self.initial_data()
        if config.mode.has_obstacle:
            v0 = truncate_field(v0, make_cutoff(v0.grid, params["transition_points"]))
        traj = run(config, v0)
        series, asserted = [], {}
        alpha = params["alpha"]
        for p in self._spec.p_list:
            main = lamb_oseen_convergence(
                traj, alpha, p, self.core_time, params["reference"], self.window
            )
            control = lamb_oseen_convergence(
                traj,
                params["control_factor"] * alpha,
                p,
                self.core_time,
                params["reference"],
                self.window,
            )
            control = replace(control, name="lamb_oseen_control")
            control.flags["plateau"] = bool(len(control) and control.ratio() > 0.5)
            series.extend([main, control])
            for flag in ("trend_decreasing", "ratio_small"):
                if flag in main.flags:
                    asserted[f"lamb_oseen_p{p:g}.{flag}"] = main.flags[flag]
            if len(control):
                asserted[f"lamb_oseen_control_p{p:g}.plateau"] = control.flags["plateau"]
        scalars = {"leak_violations": traj.leak_violations, "core_time": self.core_time}
        return ExperimentResult(series, scalars, self._trend(asserted))


class StabilityExperiment(Experiment):
    kind = "stability"
    desc = "Co-trending of the nonlinear and linear differences of two flows."

    def _execute(self) -> ExperimentResult:
        params = self._spec.params
        u0_a = self.initial_data()
        grid = u0_a.grid
        if params["variant"] == "rotation":
            u0_b = rotate_quarter(u0_a)
        elif params["variant"] == "bump":
            sigma = grid.ball_radius / 4
            bump = gaussian_vortex(grid, self._rng, 1.0, sigma, (grid.ball_radius, 0.0))
            bump = bump - gaussian_vortex(grid, self._rng, 1.0, sigma, (-grid.ball_radius, 0.0))
            u0_b = u0_a + bump * (params["bump_amplitude"] / max(bump.max_abs(), 1e-300))
        else:
            msg = f"{params['variant']} is not a valid stability variant; use rotation or bump."
            self._logger.error(msg)
            raise ValueError(msg)
        series, asserted = [], {}
        for p in self._spec.p_list:
            result = stability_check(u0_a, u0_b, self._spec.sim, p, params["gate"], self.window)
            series.extend([result.nonlinear, result.linear])
            asserted[f"stability_p{p:g}.co_trending"] = result.co_trending
        return ExperimentResult(series, {"variant": params["variant"]}, self._trend(asserted))


class SmallnessExperiment(Experiment):
    kind = "dim2-smallness"
    desc = "Large-data smallness condition with a small truncated vortex perturbation."

    def _execute(self) -> ExperimentResult:
        params = self._spec.params
        u_tilde0 = self.initial_data()
        grid = u_tilde0.grid
        w0 = truncate_field(
            lamb_oseen(grid, self._rng, params["w_alpha"], self.core_time),
            make_cutoff(grid, params["transition_points"]),
        )
        report = dim2_smallness_check(
            u_tilde0, w0, params["eps"], params["K"], self._spec.sim, C1=params["C1"]
        )
        scalars = {f"smallness.{key}": value for key, value in report.as_dict().items()}
        asserted = {"smallness.condition_met": report.condition_met}
        if report.gronwall_holds is not None:
            asserted["smallness.gronwall_holds"] = report.gronwall_holds
        return ExperimentResult([], scalars, self._trend(asserted))


class ForcingExperiment(Experiment):
    kind = "forcing"
    desc = "Forcing terms of the perturbation equation and their support."

    def _execute(self) -> ExperimentResult:
        v0 = self.initial_data()
        traj = run(self._spec.sim.with_mode(Mode.PLANE), v0)
        if len(traj) < 3:
            self._logger.warning("Fewer than 3 snapshots; no forcing terms computed.")
            return ExperimentResult([], {"snapshots": len(traj)}, {})
        cutoff = make_cutoff(v0.grid, self._spec.params["transition_points"])
        forcing = forcing_decomposition(traj, cutoff)
        series = forcing_series(forcing, p=2.0, time_offset=self.core_time)
        window = ValidWindow.for_grid(v0.grid, self.core_time)
        series = {
            name: window.apply(item) if item.target_exponent is not None and len(item) else item
            for name, item in series.items()
        }
        worst = max(f.support_violation / max(f.scale, 1e-300) for f in forcing)
        asserted = {"forcing.supported_in_ball": all(f.supported_in_ball() for f in forcing)}
        return ExperimentResult(list(series.values()), {"max_relative_violation": worst}, asserted)


class SelfSimilarExperiment(Experiment):
    kind = "self-similar"
    desc = "Self-similarity of the plane flow from the mollified vortex."

    def _execute(self) -> ExperimentResult:
        traj = run(self._spec.sim.with_mode(Mode.PLANE), self.initial_data())
        series, asserted = [], {}
        tolerance = self._spec.params["tolerance"]
        for p in self._spec.p_list:
            item = self_similar_residual(traj, p, time_offset=self.core_time)
            inside = item.window(self.window.t_min, self.window.t_max)
            if len(inside) < 2:
                self._logger.warning(
                    f"{len(inside)} samples of {item.name} inside the valid window; not constant."
                )
                item.flags["short_window"] = True
            variation = inside.relative_variation()
            item.flags["constant"] = bool(len(inside) >= 2 and variation < tolerance)
            series.append(item)
            asserted[f"self_similar_p{p:g}.constant"] = item.flags["constant"]
        return ExperimentResult(series, {}, self._trend(asserted))
