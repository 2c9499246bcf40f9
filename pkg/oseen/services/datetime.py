#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/services/datetime.py                                                         #
# ------------------------------------------------------------------------------------------------ #
# Author     : John James                                                                          #
# Email      : john.james.ai.studio@gmail.com                                                      #
# URL        : https://github.com/john-james-ai/oseen-lab                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 03:20:17 pm                                                #
# Modified   : Monday October 19th 2026 08:41:02 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# Copyright  : (c) 2026 John James                                                                 #
# ================================================================================================ #
"""Wall-clock timing for logged operations."""
from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime

# ------------------------------------------------------------------------------------------------ #
SECONDS_PER_MINUTE = 60
SECONDS_PER_HOUR = 3600


# ------------------------------------------------------------------------------------------------ #
@dataclass(frozen=True)
class Duration:
    """Elapsed wall-clock time."""

    total_seconds: float

    @property
    def hours(self) -> int:
        return int(self.total_seconds // SECONDS_PER_HOUR)

    @property
    def minutes(self) -> int:
        return int(self.total_seconds % SECONDS_PER_HOUR // SECONDS_PER_MINUTE)

    @property
    def seconds(self) -> float:
        return self.total_seconds % SECONDS_PER_MINUTE

    def as_string(self, precision: int = 3) -> str:
        text = f"{round(self.seconds, precision)} seconds"
        if self.minutes:
            text = f"{self.minutes} minutes, {text}"
        if self.hours:
            text = f"{self.hours} hours, {text}"
        return text


class Timer:
    """Start/stop timer, also usable as a context manager."""

    def __init__(self) -> None:
        self._started = None
        self._stopped = None

    def __enter__(self) -> Timer:
        self.start()
        return self

    def __exit__(self, *exc) -> None:
        self.stop()

    def start(self) -> None:
        self._started = datetime.now()
        self._stopped = None

    def stop(self) -> None:
        self._stopped = datetime.now()

    @property
    def started(self) -> datetime:
        return self._started

    @property
    def stopped(self) -> datetime:
        return self._stopped

    @property
    def duration(self) -> Duration:
        """Elapsed time; measured up to now while the timer runs."""
        if self._started is None:
            return None
        end = self._stopped or datetime.now()
        return Duration((end - self._started).total_seconds())
