#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/experiment/factory.py                                                        #
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
"""Experiment Factory Module"""
import logging

from oseen.experiment.experiments import (
    CompareExperiment,
    Experiment,
    ForcingExperiment,
    LambOseenExperiment,
    SelfSimilarExperiment,
    SmallnessExperiment,
    StabilityExperiment,
    StokesDecayExperiment,
)
from oseen.experiment.spec import ExperimentSpec


# ------------------------------------------------------------------------------------------------ #
class ExperimentFactory:
    """Creates the Experiment subclass registered for a spec's kind."""

    __experiments = {
        cls.kind: cls
        for cls in (
            CompareExperiment,
            StokesDecayExperiment,
            LambOseenExperiment,
            StabilityExperiment,
            SmallnessExperiment,
            ForcingExperiment,
            SelfSimilarExperiment,
        )
    }
    _logger = logging.getLogger(
        f"{__module__}.{__name__}",
    )

    @classmethod
    def create(cls, spec: ExperimentSpec, seed: int = 0) -> Experiment:
        try:
            experiment = ExperimentFactory.__experiments[spec.kind]
        except KeyError:
            msg = f"{spec.kind} is not a valid experiment kind."
            cls._logger.error(msg)
            raise TypeError(msg)
        return experiment(spec, seed)

    @classmethod
    def kinds(cls) -> list:
        return sorted(ExperimentFactory.__experiments)
