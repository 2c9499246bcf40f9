#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/persistence/database.py                                                      #
# ------------------------------------------------------------------------------------------------ #
# Author     : John James                                                                          #
# Email      : john.james.ai.studio@gmail.com                                                      #
# URL        : https://github.com/john-james-ai/oseen-lab                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 04:02:33 pm                                                #
# Modified   : Monday October 19th 2026 08:41:02 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# Copyright  : (c) 2026 John James                                                                 #
# ================================================================================================ #
import logging
import os

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine, make_url


# ------------------------------------------------------------------------------------------------ #
class Database:
    """SQLAlchemy engine for a database URL; the directory of a sqlite file is created on demand.

    Args:
        url (str): SQLAlchemy database URL, e.g. sqlite:///runs/registry.db
    """

    def __init__(self, url: str) -> None:
        self._url = url
        self._engine = None
        self._logger = logging.getLogger(
            f"{self.__module__}.{self.__class__.__name__}",
        )

    @property
    def url(self) -> str:
        return self._url

    @property
    def engine(self) -> Engine:
        if self._engine is None:
            database = make_url(self._url).database
            if database and database != ":memory:":
                directory = os.path.dirname(database)
                if directory:
                    os.makedirs(directory, exist_ok=True)
            self._engine = create_engine(self._url)
            self._logger.debug(f"Created engine for {self._url}.")
        return self._engine
