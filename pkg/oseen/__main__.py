#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Oseen Lab: Exterior-Domain Navier-Stokes Asymptotics                                #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.8                                                                              #
# Filename   : /oseen/__main__.py                                                                  #
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
import logging
import os
import sys

import click
from dependency_injector.wiring import Provide, inject

from oseen.container import Oseen  # pragma: no cover
from oseen.exceptions import ConfigError, SnapshotFormatError
from oseen.experiment.dispatch import dispatch
from oseen.experiment.spec import OUTPUT_ROOT_ENVVAR, parse_config
from oseen.lorentz.report import lorentz_report
from oseen.persistence.registry import RunRegistry
from oseen.services.io import IOService
from oseen.solver.api import resume

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)


# ------------------------------------------------------------------------------------------------ #
def wireup():  # pragma: no cover
    container = Oseen()
    container.init_resources()
    container.wire(modules=[__name__, "oseen.experiment.dispatch"])
    return container


def _read_config(path: str, strict: bool = True, output_root: str = None):
    with open(path, "r") as f:
        return parse_config(f.read(), strict=strict, output_root=output_root)


# ------------------------------------------------------------------------------------------------ #
@click.group()
def cli():
    """Exterior-domain Navier-Stokes asymptotics lab."""


@cli.command()
@click.argument("config", type=click.Path(exists=True, dir_okay=False))
@click.option("--output-dir", envvar=OUTPUT_ROOT_ENVVAR, default=None, help="Output root.")
@click.option("--strict/--no-strict", default=True, help="Reject unknown configuration keys.")
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=0, help="Seed of random data.")
def run(config: str, output_dir: str, strict: bool, seed: int):
    """Runs the experiment described by a JSON CONFIG."""
    try:
        spec = _read_config(config, strict, output_dir)
    except ConfigError as e:
        raise click.UsageError(str(e))
    code = dispatch(spec, seed=seed)
    click.echo(f"{spec.id}: {'passed' if code == 0 else 'failed'} ({spec.output_dir})")
    sys.exit(code)


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--steps", type=click.IntRange(min=1), default=None, help="Steps to resume.")
@click.option("--output-dir", default=None, help="Directory for resumed outputs.")
def replay(file: str, config_path: str, steps: int, output_dir: str):
    """Reads an NSF2 snapshot; with --config and --steps, resumes the run from it."""
    spec = None
    try:
        if config_path:
            spec = _read_config(config_path)
        ball_radius = spec.sim.grid.ball_radius if spec else None
        state = IOService.read(file, ball_radius=ball_radius)
    except (ConfigError, SnapshotFormatError) as e:
        raise click.ClickException(str(e))
    form = "vorticity" if state.vorticity is not None else "velocity"
    click.echo(
        f"t={state.time:.17g} n_points={state.grid.n_points} "
        f"half_width={state.grid.half_width:.17g} form={form} "
        f"max_u={state.velocity_field().max_abs():.6g}"
    )
    if steps is None:
        return
    if spec is None:
        raise click.UsageError("--steps requires --config.")
    grid = spec.sim.grid
    if (grid.n_points, grid.half_width) != (state.grid.n_points, state.grid.half_width):
        raise click.UsageError("The snapshot grid does not match the configuration grid.")
    config = spec.sim.with_t_end(state.time + steps * spec.sim.dt)
    output_dir = output_dir or os.path.join(spec.output_dir, "replay")
    trajectory = resume(state, config, output_dir=output_dir)
    click.echo(f"Resumed to t={trajectory.final.time:.17g}; outputs in {output_dir}.")


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--p", "p", type=float, default=4.0, show_default=True)
@click.option("--lambda-min", type=float, default=None)
@click.option("--lambda-max", type=float, default=None)
def norms(file: str, p: float, lambda_min: float, lambda_max: float):
    """Lorentz report of the velocity of a snapshot."""
    try:
        state = IOService.read(file)
        report = lorentz_report(state.velocity_field(), p, lambda_min, lambda_max)
    except (SnapshotFormatError, ValueError) as e:
        raise click.ClickException(str(e))
    click.echo(report.to_text())


@cli.command()
@click.option("--experiment-id", default=None)
@inject
def runs(experiment_id: str, registry: RunRegistry = Provide[Oseen.registry.runs]):
    """Lists the run registry."""
    frame = registry.list(experiment_id)
    click.echo("No runs recorded." if frame.empty else frame.to_string(index=False))


# ------------------------------------------------------------------------------------------------ #
def main():  # pragma: no cover
    wireup()
    cli()


# ------------------------------------------------------------------------------------------------ #
if __name__ == "__main__":  # pragma: no cover
    main()
