#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /conftest.py                                                                        #
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
import numpy as np
import pytest

from oseen.container import Oseen
from oseen.field.grid import Grid
from oseen.field.sampling import random_scalar_field, random_solenoidal_field
from oseen.solver.config import SimConfig

# ------------------------------------------------------------------------------------------------ #
TEST_CONFIG = "tests/config.yml"
SEED = 20261019
CORPUS_SIZE = 5


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="session", autouse=True)
def container():
    container = Oseen()
    container.config.from_yaml(TEST_CONFIG)
    container.init_resources()
    container.wire(modules=["oseen.experiment.dispatch", "oseen.__main__"])

    return container


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="session")
def grid32():
    return Grid(n_points=32, half_width=8.0, ball_radius=2.0)


@pytest.fixture(scope="session")
def grid64():
    return Grid(n_points=64, half_width=8.0, ball_radius=2.0)


@pytest.fixture(scope="session")
def grid128():
    return Grid(n_points=128, half_width=8.0, ball_radius=2.0)


@pytest.fixture(scope="session")
def grid512():
    return Grid(n_points=512, half_width=8.0, ball_radius=2.0)


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def solenoidal_corpus(grid64):
    rng = np.random.default_rng(SEED)
    return [
        random_solenoidal_field(grid64, rng, n_modes=6, amplitude=1.0) for _ in range(CORPUS_SIZE)
    ]


@pytest.fixture(scope="session")
def scalar_corpus(grid64):
    rng = np.random.default_rng(SEED + 1)
    return [random_scalar_field(grid64, rng, n_modes=6, amplitude=1.0) for _ in range(CORPUS_SIZE)]


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="session")
def plane_config(grid64):
    return SimConfig(grid=grid64, dt=0.01, t_end=0.2, snapshot_every=5)


@pytest.fixture(scope="session")
def exterior_config(grid64):
    return SimConfig(grid=grid64, dt=0.01, t_end=0.2, snapshot_every=5, mode="exterior")
