#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /tests/test_field/test_sampling.py                                                  #
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
import inspect
import logging
import os
from datetime import datetime

import numpy as np
import pytest

from oseen.field import spectral
from oseen.field.fields import ScalarField
from oseen.field.sampling import (
    random_scalar_field,
    random_solenoidal_field,
    rotate_quarter,
    slice_frame,
    write_slice_csv,
)
from oseen.services.io import IOService

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
double_line = f"\n{100 * '='}"
single_line = f"\n{100 * '-'}"


@pytest.mark.grid
class TestSampling:  # pragma: no cover
    # ============================================================================================ #
    def test_random_fields(self, grid64, caplog):
        start = datetime.now()
        logger.info(
            "\n\nStarted {} {} at {} on {}".format(
                self.__class__.__name__,
                inspect.stack()[0][3],
                start.strftime("%I:%M:%S %p"),
                start.strftime("%m/%d/%Y"),
            )
        )
        logger.info(double_line)
        # ---------------------------------------------------------------------------------------- #
        v = random_solenoidal_field(grid64, np.random.default_rng(1), n_modes=4, amplitude=0.3)
        assert v.max_abs() == pytest.approx(0.3)
        assert spectral.divergence(v).max_abs() < 1e-12
        f = random_scalar_field(grid64, np.random.default_rng(1), n_modes=4, amplitude=2.0)
        assert f.max_abs() == pytest.approx(2.0)
        assert abs(f.mean()) < 1e-14
        again = random_scalar_field(grid64, np.random.default_rng(1), n_modes=4, amplitude=2.0)
        assert np.array_equal(f.values, again.values)
        with pytest.raises(ValueError):
            random_scalar_field(grid64, np.random.default_rng(1), n_modes=0)
        with pytest.raises(ValueError):
            random_scalar_field(grid64, np.random.default_rng(1), n_modes=21)
        # ---------------------------------------------------------------------------------------- #
        end = datetime.now()
        duration = round((end - start).total_seconds(), 1)

        logger.info(
            "\nCompleted {} {} in {} seconds at {} on {}".format(
                self.__class__.__name__,
                inspect.stack()[0][3],
                duration,
                end.strftime("%I:%M:%S %p"),
                end.strftime("%m/%d/%Y"),
            )
        )
        logger.info(single_line)

    # ============================================================================================ #
    def test_rotate_quarter(self, grid64, scalar_corpus, solenoidal_corpus, caplog):
        start = datetime.now()
        logger.info(
            "\n\nStarted {} {} at {} on {}".format(
                self.__class__.__name__,
                inspect.stack()[0][3],
                start.strftime("%I:%M:%S %p"),
                start.strftime("%m/%d/%Y"),
            )
        )
        logger.info(double_line)
        # ---------------------------------------------------------------------------------------- #
        f = scalar_corpus[0]
        rotated = f
        for _ in range(4):
            rotated = rotate_quarter(rotated)
        assert np.array_equal(rotated.values, f.values)
        # Counterclockwise: the value at (a, 0) moves to (0, a).
        i, j = grid64.index_of(2.0), grid64.index_of(0.0)
        assert rotate_quarter(f).values[j, i] == f.values[i, j]
        v = solenoidal_corpus[0]
        assert np.allclose(
            spectral.curl(rotate_quarter(v)).values,
            rotate_quarter(spectral.curl(v)).values,
            atol=1e-10,
        )
        assert spectral.divergence(rotate_quarter(v)).max_abs() < 1e-10
        twice = rotate_quarter(rotate_quarter(v))
        assert twice.u1.values[i, j] == -v.u1.values[(64 - i) % 64, (64 - j) % 64]
        # ---------------------------------------------------------------------------------------- #
        end = datetime.now()
        duration = round((end - start).total_seconds(), 1)

        logger.info(
            "\nCompleted {} {} in {} seconds at {} on {}".format(
                self.__class__.__name__,
                inspect.stack()[0][3],
                duration,
                end.strftime("%I:%M:%S %p"),
                end.strftime("%m/%d/%Y"),
            )
        )
        logger.info(single_line)

    # ============================================================================================ #
    def test_slices(self, grid32, tmp_path, caplog):
        start = datetime.now()
        logger.info(
            "\n\nStarted {} {} at {} on {}".format(
                self.__class__.__name__,
                inspect.stack()[0][3],
                start.strftime("%I:%M:%S %p"),
                start.strftime("%m/%d/%Y"),
            )
        )
        logger.info(double_line)
        # ---------------------------------------------------------------------------------------- #
        f = ScalarField.from_function(grid32, lambda x1, x2: x1 * 10 + x2)
        frame = slice_frame(f, axis=1, coordinate=1.0)
        assert list(frame.columns) == ["x", "value"]
        assert len(frame) == 32
        assert np.allclose(frame["value"], grid32.nodes * 10 + 1.0)
        frame = slice_frame(spectral.gradient(f), axis=2, coordinate=0.0)
        assert list(frame.columns) == ["x", "u1", "u2"]
        path = os.path.join(tmp_path, "slices", "slice.csv")
        written = write_slice_csv(f, path, axis=2, coordinate=-8.0)
        assert np.allclose(written["value"], -80.0 + grid32.nodes)
        assert np.allclose(IOService.read(path)["value"], written["value"])
        nearest = slice_frame(f, axis=1, coordinate=0.3)
        assert np.allclose(nearest["value"], grid32.nodes * 10 + 0.5)
        with pytest.raises(ValueError):
            slice_frame(f, coordinate=9.0)
        # ---------------------------------------------------------------------------------------- #
        end = datetime.now()
        duration = round((end - start).total_seconds(), 1)

        logger.info(
            "\nCompleted {} {} in {} seconds at {} on {}".format(
                self.__class__.__name__,
                inspect.stack()[0][3],
                duration,
                end.strftime("%I:%M:%S %p"),
                end.strftime("%m/%d/%Y"),
            )
        )
        logger.info(single_line)
