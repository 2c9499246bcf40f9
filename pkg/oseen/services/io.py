#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/services/io.py                                                               #
# ------------------------------------------------------------------------------------------------ #
# Author     : John James                                                                          #
# Email      : john.james.ai.studio@gmail.com                                                      #
# URL        : https://github.com/john-james-ai/oseen-lab                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 02:51:09 pm                                                #
# Modified   : Monday October 19th 2026 08:41:02 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# Copyright  : (c) 2026 John James                                                                 #
# ================================================================================================ #
from abc import ABC, abstractmethod
import json
import logging
import os
import struct
from typing import Any

import numpy as np
import pandas as pd
import yaml

from oseen.exceptions import SnapshotFormatError
from oseen.field.fields import ScalarField, VectorField2
from oseen.field.grid import Grid
from oseen.solver.state import SimState

# ------------------------------------------------------------------------------------------------ #
MAGIC = b"NSF2"
HEADER = struct.Struct("<4sIddI")


# ------------------------------------------------------------------------------------------------ #
class IO(ABC):
    _logger = logging.getLogger(
        f"{__module__}.{__name__}",
    )

    @classmethod
    def read(cls, filepath: str, **kwargs) -> Any:
        if not os.path.isfile(filepath):
            msg = f"File {filepath} does not exist."
            cls._logger.error(msg)
            raise FileNotFoundError(msg)
        return cls._read(filepath, **kwargs)

    @classmethod
    @abstractmethod
    def _read(cls, filepath: str, **kwargs) -> Any:
        pass

    @classmethod
    def write(cls, filepath: str, data: Any, **kwargs) -> None:
        os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
        cls._write(filepath, data, **kwargs)

    @classmethod
    @abstractmethod
    def _write(cls, filepath: str, data: Any, **kwargs) -> None:
        pass


# ------------------------------------------------------------------------------------------------ #
#                                        CSV IO                                                    #
# ------------------------------------------------------------------------------------------------ #
class CSVIO(IO):
    @classmethod
    def _read(cls, filepath: str, **kwargs) -> pd.DataFrame:
        return pd.read_csv(filepath, encoding="utf-8", **kwargs)

    @classmethod
    def _write(cls, filepath: str, data: pd.DataFrame, **kwargs) -> None:
        # %.17g round-trips every float64.
        data.to_csv(filepath, index=False, encoding="utf-8", float_format="%.17g")


# ------------------------------------------------------------------------------------------------ #
#                                        YAML IO                                                   #
# ------------------------------------------------------------------------------------------------ #
class YamlIO(IO):
    @classmethod
    def _read(cls, filepath: str, **kwargs) -> dict:
        with open(filepath, "r") as f:
            try:
                return yaml.safe_load(f)
            except yaml.YAMLError as e:
                cls._logger.error(e)
                raise IOError(e)

    @classmethod
    def _write(cls, filepath: str, data: Any, **kwargs) -> None:
        with open(filepath, "w") as f:
            yaml.safe_dump(data, f, sort_keys=False)


# ------------------------------------------------------------------------------------------------ #
#                                        JSON IO                                                   #
# ------------------------------------------------------------------------------------------------ #
class JsonIO(IO):
    @classmethod
    def _read(cls, filepath: str, **kwargs) -> dict:
        with open(filepath, "r") as f:
            return json.load(f)

    @classmethod
    def _write(cls, filepath: str, data: Any, **kwargs) -> None:
        with open(filepath, "w") as f:
            json.dump(data, f, indent=2, default=_to_builtin)
            f.write("\n")


def _to_builtin(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"{type(value).__name__} is not JSON serializable.")


# ------------------------------------------------------------------------------------------------ #
#                                        TEXT IO                                                   #
# ------------------------------------------------------------------------------------------------ #
class TextIO(IO):
    """Flat key=value text."""

    @classmethod
    def _read(cls, filepath: str, **kwargs) -> dict:
        result = {}
        with open(filepath, "r") as f:
            for line in f:
                if "=" in line:
                    key, value = line.rstrip("\n").split("=", 1)
                    result[key] = value
        return result

    @classmethod
    def _write(cls, filepath: str, data: Any, **kwargs) -> None:
        text = data if isinstance(data, str) else "".join(f"{k}={v}\n" for k, v in data.items())
        with open(filepath, "w") as f:
            f.write(text)


# ------------------------------------------------------------------------------------------------ #
#                                       SNAPSHOT IO                                                #
# ------------------------------------------------------------------------------------------------ #
class SnapshotIO(IO):
    """NSF2 snapshots: magic, u32 n_points, f64 half_width, f64 time, u32 component count, then
    the components as little-endian f64 in row-major [x1, x2] order.

    One component is a vorticity, two are a velocity. The format stores neither the step count
    nor the ball radius; they are restored as 0 and L/4 unless given.
    """

    @classmethod
    def encode(cls, state: SimState) -> bytes:
        grid = state.grid
        arrays = (
            [state.vorticity.values]
            if state.vorticity is not None
            else [c.values for c in state.velocity.components]
        )
        header = HEADER.pack(MAGIC, grid.n_points, grid.half_width, state.time, len(arrays))
        payload = b"".join(np.ascontiguousarray(a, dtype="<f8").tobytes() for a in arrays)
        return header + payload

    @classmethod
    def decode(cls, data: bytes, ball_radius: float = None, step_count: int = 0) -> SimState:
        if len(data) < HEADER.size:
            cls._fail("Truncated header", len(data))
        magic, n_points, half_width, time, count = HEADER.unpack_from(data)
        if magic != MAGIC:
            cls._fail(f"Bad magic {magic!r}", 0)
        if count not in (1, 2):
            cls._fail(f"Unsupported component count {count}", HEADER.size - 4)
        expected = HEADER.size + count * n_points * n_points * 8
        if len(data) < expected:
            cls._fail(f"Truncated payload: expected {expected} bytes", len(data))
        if len(data) > expected:
            cls._fail("Trailing bytes after the payload", expected)
        try:
            grid = Grid(n_points, half_width, ball_radius or half_width / 4)
        except (TypeError, ValueError) as e:
            cls._fail(f"Invalid grid in header: {e}", 4)
        payload = np.frombuffer(data, dtype="<f8", offset=HEADER.size).astype(np.float64)
        arrays = payload.reshape(count, n_points, n_points)
        if count == 1:
            return SimState(time, step_count, vorticity=ScalarField(grid, arrays[0]))
        return SimState(
            time, step_count, velocity=VectorField2.from_arrays(grid, arrays[0], arrays[1])
        )

    @classmethod
    def _fail(cls, msg: str, offset: int) -> None:
        cls._logger.error(f"{msg} at byte offset {offset}.")
        raise SnapshotFormatError(msg, offset)

    @classmethod
    def _read(cls, filepath: str, **kwargs) -> SimState:
        with open(filepath, "rb") as f:
            return cls.decode(f.read(), **kwargs)

    @classmethod
    def _write(cls, filepath: str, data: SimState, **kwargs) -> None:
        with open(filepath, "wb") as f:
            f.write(cls.encode(data))


# ------------------------------------------------------------------------------------------------ #
#                                       IO SERVICE                                                 #
# ------------------------------------------------------------------------------------------------ #
class IOService:

    __io = {
        "csv": CSVIO,
        "yaml": YamlIO,
        "yml": YamlIO,
        "json": JsonIO,
        "txt": TextIO,
        "nsf2": SnapshotIO,
    }
    _logger = logging.getLogger(
        f"{__module__}.{__name__}",
    )

    @classmethod
    def read(cls, filepath: str, **kwargs) -> Any:
        io = cls._get_io(filepath)
        return io.read(filepath, **kwargs)

    @classmethod
    def write(cls, filepath: str, data: Any, **kwargs) -> None:
        io = cls._get_io(filepath)
        io.write(filepath=filepath, data=data, **kwargs)

    @classmethod
    def _get_io(cls, filepath: str) -> IO:
        if filepath is None:
            msg = "Filepath is None"
            cls._logger.error(msg)
            raise ValueError(msg)
        file_format = os.path.splitext(str(filepath))[1].replace(".", "").lower()
        try:
            return IOService.__io[file_format]
        except KeyError:
            msg = "File type {} is not supported.".format(file_format)
            cls._logger.error(msg)
            raise ValueError(msg)
