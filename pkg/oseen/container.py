#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/container.py                                                                 #
# ------------------------------------------------------------------------------------------------ #
# Author     : John James                                                                          #
# Email      : john.james.ai.studio@gmail.com                                                      #
# URL        : https://github.com/john-james-ai/oseen-lab                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Saturday October 10th 2026 09:30:12 am                                              #
# Modified   : Monday October 19th 2026 08:41:02 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# Copyright  : (c) 2026 John James                                                                 #
# ================================================================================================ #
import logging.config  # pragma: no cover
import os

from dependency_injector import containers, providers

from oseen.persistence.database import Database
from oseen.persistence.registry import RunRegistry


# ------------------------------------------------------------------------------------------------ #
def configure_logging(config: dict) -> None:
    """dictConfig after creating the directories of file handlers; basicConfig without a config."""
    if not config:
        logging.basicConfig(level=logging.INFO)
        return
    for handler in config.get("handlers", {}).values():
        filename = handler.get("filename")
        if filename and os.path.dirname(filename):
            os.makedirs(os.path.dirname(filename), exist_ok=True)
    logging.config.dictConfig(config)


# ------------------------------------------------------------------------------------------------ #
class ServicesContainer(containers.DeclarativeContainer):

    config = providers.Configuration()

    logging = providers.Resource(
        configure_logging,
        config=config.logging,
    )

    database = providers.Singleton(Database, url=config.registry.database)


# ------------------------------------------------------------------------------------------------ #
class RegistryContainer(containers.DeclarativeContainer):

    config = providers.Configuration()

    database = providers.Dependency()

    runs = providers.Singleton(
        RunRegistry,
        database=database,
        tablename=config.tablename,
    )


# ------------------------------------------------------------------------------------------------ #
class Oseen(containers.DeclarativeContainer):

    config = providers.Configuration(yaml_files=["config.yml"])

    services = providers.Container(ServicesContainer, config=config)

    registry = providers.Container(
        RegistryContainer, config=config.registry, database=services.database
    )
