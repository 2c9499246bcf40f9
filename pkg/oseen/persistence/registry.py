#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/persistence/registry.py                                                      #
# ------------------------------------------------------------------------------------------------ #
# Author     : John James                                                                          #
# Email      : john.james.ai.studio@gmail.com                                                      #
# URL        : https://github.com/john-james-ai/oseen-lab                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 04:10:52 pm                                                #
# Modified   : Monday October 19th 2026 08:41:02 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# Copyright  : (c) 2026 John James                                                                 #
# ================================================================================================ #
"""Registry of dispatched experiment runs."""
import logging
from datetime import datetime

import pandas as pd
from sqlalchemy import inspect, text

from oseen.persistence.database import Database

# ------------------------------------------------------------------------------------------------ #
COLUMNS = [
    "run_id",
    "experiment_id",
    "kind",
    "status",
    "exit_code",
    "output_dir",
    "started",
    "duration",
]


# ------------------------------------------------------------------------------------------------ #
class RunRegistry:
    """One row per dispatched experiment.

    Args:
        database (Database): Database holding the registry table.
        tablename (str): Name of the registry table.
    """

    def __init__(self, database: Database, tablename: str) -> None:
        self._database = database
        self._tablename = tablename
        self._logger = logging.getLogger(
            f"{self.__module__}.{self.__class__.__name__}",
        )

    @property
    def tablename(self) -> str:
        return self._tablename

    def _exists(self) -> bool:
        return inspect(self._database.engine).has_table(self._tablename)

    def add(
        self,
        experiment_id: str,
        kind: str,
        status: str,
        exit_code: int,
        output_dir: str,
        started: datetime,
        duration: float,
    ) -> int:
        """Appends a run and returns its run_id."""
        run_id = len(self) + 1
        row = pd.DataFrame(
            [[run_id, experiment_id, kind, status, exit_code, output_dir, started, duration]],
            columns=COLUMNS,
        )
        with self._database.engine.begin() as connection:
            row.to_sql(self._tablename, con=connection, if_exists="append", index=False)
        self._logger.info(f"Registered run {run_id}: {experiment_id} ({kind}) {status}.")
        return run_id

    def get(self, run_id: int) -> pd.Series:
        if not self._exists():
            return self._missing(run_id)
        query = text(f"SELECT * FROM {self._tablename} WHERE run_id = :run_id;")
        with self._database.engine.connect() as connection:
            result = pd.read_sql(query, con=connection, params={"run_id": run_id})
        if result.empty:
            return self._missing(run_id)
        return result.iloc[0]

    def _missing(self, run_id: int) -> None:
        msg = f"Run {run_id} does not exist."
        self._logger.error(msg)
        raise FileNotFoundError(msg)

    def list(self, experiment_id: str = None) -> pd.DataFrame:
        if not self._exists():
            return pd.DataFrame(columns=COLUMNS)
        query = f"SELECT * FROM {self._tablename}"
        params = {}
        if experiment_id is not None:
            query += " WHERE experiment_id = :experiment_id"
            params["experiment_id"] = experiment_id
        with self._database.engine.connect() as connection:
            return pd.read_sql(text(query + " ORDER BY run_id;"), con=connection, params=params)

    def __len__(self) -> int:
        if not self._exists():
            return 0
        with self._database.engine.connect() as connection:
            count = connection.execute(text(f"SELECT COUNT(*) FROM {self._tablename};"))
            return int(count.scalar())
