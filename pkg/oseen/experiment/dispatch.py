#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/experiment/dispatch.py                                                       #
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
"""Runs an experiment, persists its series and report, and records it in the run registry."""
import logging
import os
from datetime import datetime

from dependency_injector.wiring import Provide, inject

from oseen.container import Oseen
from oseen.experiment.factory import ExperimentFactory
from oseen.experiment.spec import ExperimentSpec
from oseen.persistence.registry import RunRegistry
from oseen.services.datetime import Timer
from oseen.services.io import IOService
from oseen.services.log import log

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
REPORT_FILENAME = "report.json"


# ------------------------------------------------------------------------------------------------ #
@inject
@log
def dispatch(
    spec: ExperimentSpec,
    seed: int = 0,
    registry: RunRegistry = Provide[Oseen.registry.runs],
) -> int:
    """Runs spec and returns 0 iff every asserted flag passes.

    Series are written as series_<name>_p<p>.csv and the flat results as report.json in
    spec.output_dir. Any exception is turned into a failed report and exit code 1.
    """
    os.makedirs(spec.output_dir, exist_ok=True)
    report = {"id": spec.id, "kind": spec.kind, "seed": seed, "spec": spec.as_dict()}
    timer = Timer()
    timer.start()
    try:
        experiment = ExperimentFactory.create(spec, seed)
        result = experiment.run()
        for series in result.series:
            IOService.write(os.path.join(spec.output_dir, series.filename), series.to_frame())
        exit_code = 0 if result.passed else 1
        report.update(
            {
                "status": "passed" if result.passed else "assertion_failed",
                "results": result.flat(),
                "asserted": dict(result.asserted),
            }
        )
        if not result.passed:
            failing = sorted(key for key, value in result.asserted.items() if not value)
            logger.warning(f"Experiment {spec.id} failed assertions: {', '.join(failing)}.")
    except Exception as e:
        logger.exception(f"Experiment {spec.id} failed: {e}")
        exit_code = 1
        report.update({"status": "failed", "diagnostic": f"{type(e).__name__}: {e}"})
    timer.stop()
    report["duration"] = timer.duration.total_seconds
    IOService.write(os.path.join(spec.output_dir, REPORT_FILENAME), report)
    _register(registry, spec, report["status"], exit_code, timer)
    return exit_code


def _register(
    registry: RunRegistry, spec: ExperimentSpec, status: str, exit_code: int, timer: Timer
) -> None:
    if not isinstance(registry, RunRegistry):
        logger.debug("No run registry wired; run not recorded.")
        return
    try:
        registry.add(
            experiment_id=spec.id,
            kind=spec.kind,
            status=status,
            exit_code=exit_code,
            output_dir=spec.output_dir,
            started=timer.started or datetime.now(),
            duration=timer.duration.total_seconds,
        )
    except Exception as e:
        logger.warning(f"Run {spec.id} not recorded in the registry: {e}")
