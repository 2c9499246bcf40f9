#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/experiment/spec.py                                                           #
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
"""Experiment specifications and their strict JSON parser."""
from __future__ import annotations

import inspect
import json
import logging
import os
import re
from dataclasses import dataclass, field, fields
from typing import Any, Dict, List, Optional

import numpy as np

from oseen.exceptions import ConfigError
from oseen.experiment.generators import GENERATORS
from oseen.field.grid import Grid
from oseen.solver.config import Mode, SimConfig

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
OUTPUT_ROOT_ENVVAR = "OSEEN_OUTPUT_ROOT"
DEFAULT_OUTPUT_ROOT = "runs"
ID_PATTERN = re.compile(r"^[A-Za-z0-9_.-]+$")
P_MIN, P_MAX = 2.0, 16.0

KIND_PARAMS: Dict[str, Dict[str, Any]] = {
    "compare": {"gate": 0.5, "transition_points": 8, "with_bounds": True},
    "stokes-decay": {"q": 2.0},
    "lamb-oseen": {
        "alpha": 0.1,
        "mode": "exterior",
        "reference": "box",
        "control_factor": 2.0,
        "transition_points": 8,
    },
    "stability": {"variant": "rotation", "bump_amplitude": 0.01, "gate": 0.5},
    "dim2-smallness": {"eps": 0.1, "K": 10.0, "C1": 1.0, "w_alpha": 0.01, "transition_points": 8},
    "forcing": {"transition_points": 8},
    "self-similar": {"tolerance": 0.02},
}
TOP_LEVEL = {"id", "kind", "sim", "data", "p_list", "output_dir", "params", "assert_trends"}
REQUIRED = ("id", "kind", "sim", "data")
GRID_KEYS = {"n_points", "half_width", "ball_radius"}


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class DataSpec:
    """A named generator with its parameters. The snapshot generator takes a path."""

    generator: str
    params: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"generator": self.generator, "params": dict(self.params)}

    def build(self, grid: Grid, rng: np.random.Generator):
        return GENERATORS[self.generator](grid, rng, **self.params)

    @property
    def core_time(self) -> Optional[float]:
        return self.params.get("core_time") if self.generator == "lamb_oseen" else None


@dataclass(frozen=True)
class ExperimentSpec:
    id: str
    kind: str
    sim: SimConfig
    data: DataSpec
    p_list: List[float] = field(default_factory=lambda: [4.0, 8.0])
    output_dir: str = ""
    params: Dict[str, Any] = field(default_factory=dict)
    assert_trends: bool = True

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "sim": self.sim.as_dict(),
            "data": self.data.as_dict(),
            "p_list": list(self.p_list),
            "output_dir": self.output_dir,
            "params": dict(self.params),
            "assert_trends": self.assert_trends,
        }


# ------------------------------------------------------------------------------------------------ #
class _Parser:
    """Walks a decoded document, collecting validated values with key paths for errors."""

    def __init__(self, strict: bool) -> None:
        self._strict = strict

    def fail(self, msg: str, key_path: str) -> None:
        logger.error(f"{key_path}: {msg}")
        raise ConfigError(msg, key_path)

    def mapping(self, value: Any, key_path: str, allowed: set, required=()) -> dict:
        if not isinstance(value, dict):
            self.fail(f"expected an object, got {type(value).__name__}", key_path)
        for key in required:
            if key not in value:
                self.fail("required key is missing", _join(key_path, key))
        result = {}
        for key, item in value.items():
            if key in allowed:
                result[key] = item
            elif self._strict:
                self.fail("unknown key", _join(key_path, key))
            else:
                logger.warning(f"Ignoring unknown key {_join(key_path, key)}.")
        return result

    def number(self, value: Any, key_path: str) -> float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            self.fail(f"expected a number, got {value!r}", key_path)
        return value


def _join(prefix: str, key: str) -> str:
    return f"{prefix}.{key}" if prefix else key


def parse_config(text: str, strict: bool = True, output_root: str = None) -> ExperimentSpec:
    """Validated ExperimentSpec from a JSON document.

    Raises:
        ConfigError: Malformed document, unknown key (strict) or invalid value, naming the key path.
    """
    parser = _Parser(strict)
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        msg = f"malformed JSON document: {e}"
        logger.error(msg)
        raise ConfigError(msg) from e
    top = parser.mapping(document, "", TOP_LEVEL, REQUIRED)

    experiment_id = top["id"]
    if not isinstance(experiment_id, str) or not ID_PATTERN.match(experiment_id):
        parser.fail(f"id must be a nonempty filesystem-safe string, got {experiment_id!r}", "id")
    kind = top["kind"]
    if kind not in KIND_PARAMS:
        parser.fail(f"unknown kind {kind!r}; expected one of {sorted(KIND_PARAMS)}", "kind")

    sim = _parse_sim(parser, top["sim"])
    data = _parse_data(parser, top["data"])
    p_list = _parse_p_list(parser, top.get("p_list", [4.0, 8.0]))

    params = dict(KIND_PARAMS[kind])
    params.update(parser.mapping(top.get("params", {}), "params", set(KIND_PARAMS[kind])))

    assert_trends = top.get("assert_trends", True)
    if not isinstance(assert_trends, bool):
        parser.fail("expected true or false", "assert_trends")

    output_dir = top.get("output_dir")
    if output_dir is None:
        root = output_root or os.environ.get(OUTPUT_ROOT_ENVVAR) or DEFAULT_OUTPUT_ROOT
        output_dir = os.path.join(root, experiment_id)
    elif not isinstance(output_dir, str) or not output_dir:
        parser.fail("expected a nonempty path", "output_dir")

    return ExperimentSpec(
        id=experiment_id,
        kind=kind,
        sim=sim,
        data=data,
        p_list=p_list,
        output_dir=output_dir,
        params=params,
        assert_trends=assert_trends,
    )


def _parse_sim(parser: _Parser, value: Any) -> SimConfig:
    allowed = {f.name for f in fields(SimConfig)}
    sim = parser.mapping(value, "sim", allowed, ("grid", "dt", "t_end"))
    sim["grid"] = parser.mapping(sim["grid"], "sim.grid", GRID_KEYS, tuple(sorted(GRID_KEYS)))
    for key, item in sim["grid"].items():
        parser.number(item, f"sim.grid.{key}")
    if not isinstance(sim["grid"]["n_points"], int):
        parser.fail("expected an integer", "sim.grid.n_points")
    for key in ("dt", "t_end", "penalization_eta", "obstacle_radius", "cfl"):
        if sim.get(key) is not None:
            parser.number(sim[key], f"sim.{key}")
    if "mode" in sim and sim["mode"] not in {m.value for m in Mode}:
        parser.fail(f"unknown mode {sim['mode']!r}", "sim.mode")
    try:
        grid = Grid(**sim["grid"])
    except (TypeError, ValueError) as e:
        parser.fail(str(e), "sim.grid")
    try:
        return SimConfig(**{**sim, "grid": grid})
    except (TypeError, ValueError) as e:
        parser.fail(str(e), "sim")


def _parse_data(parser: _Parser, value: Any) -> DataSpec:
    data = parser.mapping(value, "data", {"generator", "params"}, ("generator",))
    name = data["generator"]
    if name not in GENERATORS:
        parser.fail(
            f"unknown generator {name!r}; expected one of {sorted(GENERATORS)}", "data.generator"
        )
    signature = inspect.signature(GENERATORS[name])
    allowed = set(list(signature.parameters)[2:])
    params = parser.mapping(data.get("params", {}), "data.params", allowed)
    if name == "snapshot" and "path" not in params:
        parser.fail("the snapshot generator requires a path", "data.params.path")
    if "center" in params:
        params["center"] = tuple(params["center"])
    return DataSpec(name, params)


def _parse_p_list(parser: _Parser, value: Any) -> List[float]:
    if not isinstance(value, list) or not value:
        parser.fail("expected a nonempty list of exponents", "p_list")
    for i, p in enumerate(value):
        parser.number(p, f"p_list[{i}]")
        if not P_MIN < p <= P_MAX:
            parser.fail(f"exponent {p} must lie in ({P_MIN:g}, {P_MAX:g}]", f"p_list[{i}]")
    return [float(p) for p in value]
