#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/__init__.py                                                                  #
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
