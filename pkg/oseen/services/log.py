#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/services/log.py                                                              #
# ------------------------------------------------------------------------------------------------ #
# Author     : John James                                                                          #
# Email      : john.james.ai.studio@gmail.com                                                      #
# URL        : https://github.com/john-james-ai/oseen-lab                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Sunday October 11th 2026 03:24:40 pm                                                #
# Modified   : Monday October 19th 2026 08:41:02 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# Copyright  : (c) 2026 John James                                                                 #
# ================================================================================================ #
import functools
import logging

from oseen.services.datetime import Timer


# ------------------------------------------------------------------------------------------------ #
def log(func):
    """Logs start, completion and duration of func; logs and re-raises exceptions."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        name = func.__qualname__
        logger = logging.getLogger(f"{func.__module__}.{name}")
        timer = Timer()
        timer.start()
        logger.info(f"Started {name} at {timer.started:%H:%M:%S} on {timer.started:%m/%d/%Y}")
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.exception(f"Exception raised in {name}: {e}")
            raise
        timer.stop()
        logger.info(
            f"Completed {name} at {timer.stopped:%H:%M:%S}. "
            f"Duration: {timer.duration.as_string()}."
        )
        return result

    return wrapper
