import logging
from pathlib import Path
from typing import Optional

import typer

from nugg.cli.common import (
    ALPHA,
    BETA,
    CONFIG,
    DENSITY,
    EPSILON,
    HUBS,
    OUT,
    RADIUS,
    SEED,
    SPACE,
    exit_on_error,
    parse_grid,
)
from nugg.cli.run_config import load_config
from nugg.convergence.runner import ConvergenceRunner, RhoMode, run_convergence
from nugg.geometry.latent_space import SpaceKind

logger = logging.getLogger(__name__)

DEFAULT_GRID = [500, 1000, 2000, 4000, 8000]
TRIALS_FILE = "convergence.csv"
REPORT_FILE = "convergence.json"


def converge(
    config: Optional[Path] = CONFIG,
    n_grid: Optional[str] = typer.Option(None, "--n-grid", help="comma separated increasing node counts"),
    trials: Optional[int] = typer.Option(None, "--trials", help="graphs per node count, at least 5"),
    preset: Optional[str] = typer.Option(None, "--preset", help="named modulation tuple"),
    rho: Optional[RhoMode] = typer.Option(None, "--rho", help="node densities: true, ignore or estimate"),
    u: Optional[str] = typer.Option(None, "--u", help="test signal: constant, cos:k or radial_poly:k"),
    p: Optional[float] = typer.Option(None, "--p", help="failure probability of the sup-error bound"),
    weighted: Optional[bool] = typer.Option(
        None, "--weighted/--unweighted", help="compare against the density-weighted continuous operator"
    ),
    threads: Optional[int] = typer.Option(None, "--threads", help="worker threads, NUGG_THREADS or all cpus by default"),
    space: Optional[SpaceKind] = SPACE,
    R: Optional[float] = RADIUS,
    density: Optional[str] = DENSITY,
    alpha: Optional[str] = ALPHA,
    beta: Optional[float] = BETA,
    eps: Optional[float] = EPSILON,
    hubs: Optional[int] = HUBS,
    seed: Optional[int] = SEED,
    out: Optional[Path] = OUT,
) -> None:
    """Compare the sampled operator with its continuous limit over a grid of graph sizes."""
    run = load_config(
        "converge",
        config,
        n_grid=parse_grid(n_grid),
        trials=trials,
        preset=preset,
        rho=rho,
        u=u,
        p=p,
        weighted=weighted,
        threads=threads,
        space=space,
        R=R,
        density=density,
        alpha=alpha,
        beta=beta,
        eps=eps,
        hubs=hubs,
        seed=seed,
        out=out,
    )
    grid = run.n_grid or DEFAULT_GRID
    try:
        ConvergenceRunner.validate(grid, run.trials, run.p)
    except ConvergenceRunner.ConvergenceRunnerError as e:
        raise typer.BadParameter(str(e)) from e

    with exit_on_error():
        report = run_convergence(
            run.build_space(),
            run.build_density(),
            grid,
            run.trials,
            run.build_spec(),
            run.build_signal(),
            run.p,
            alpha=run.alpha,
            m=run.hubs,
            beta=run.beta,
            epsilon=run.eps,
            rho_mode=run.rho,
            seed=run.seed,
            threads=run.threads,
            weighted=run.weighted,
            config=run.dict(include={"command", "space", "R", "preset", "rho", "u", "p", "trials", "seed"}),
        )
        report.write_csv(run.out.joinpath(TRIALS_FILE))
        report.write_json(run.out.joinpath(REPORT_FILE))
        run.echo()

    for N, mse, ratio in zip(report.N_grid, report.mse, report.sup_ratio):
        typer.echo(f"N={N} mse={mse:.6g} sup_ratio={ratio:.6g}")
    if report.fitted_slope is None:
        typer.echo("fitted_slope=nan")
    else:
        typer.echo(f"fitted_slope={report.fitted_slope:.4f}")
