#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/exceptions.py                                                                #
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
"""Exceptions carrying context beyond the builtin types they extend."""


# ------------------------------------------------------------------------------------------------ #
class SnapshotFormatError(ValueError):
    """Malformed NSF2 snapshot. offset is the byte position where decoding failed."""

    def __init__(self, msg: str, offset: int) -> None:
        super().__init__(f"{msg} (byte offset {offset})")
        self.offset = offset


class ConfigError(ValueError):
    """Invalid experiment configuration.

    key_path locates the offending entry, e.g. sim.grid.n_points.
    """

    def __init__(self, msg: str, key_path: str = "") -> None:
        super().__init__(f"{key_path}: {msg}" if key_path else msg)
        self.key_path = key_path


class CFLViolationError(RuntimeError):
    """The time step violates the CFL bound and adaptive stepping is disabled."""
