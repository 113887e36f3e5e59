import logging
from pathlib import Path
from typing import Optional

import numpy as np
import typer
from scipy import stats

from nugg.cli.common import (
    ALPHA,
    BETA,
    CONFIG,
    DENSITY,
    EPSILON,
    GRAPH,
    HUBS,
    NODES,
    OUT,
    RADIUS,
    SEED,
    SPACE,
    exit_on_error,
    load_or_generate,
    summary_line,
)
from nugg.cli.run_config import load_config
from nugg.density.ball_probability import Method, expected_degree
from nugg.geometry.latent_space import SpaceKind
from nugg.graphgen.geometric_graph import GeometricGraph, degrees
from nugg.utils.artifacts import write_csv

logger = logging.getLogger(__name__)

DEGREES_FILE = "degrees.csv"
DEGREE_COLUMNS = ["id", "degree", "expected_degree", "rho_true", "hub"]


def expected_degrees(g: GeometricGraph) -> np.ndarray:
    """(N - 1) P(ball(x_i, r_i)) for every node, r_i the node's own radius."""
    method = Method.QUADRATURE if g.space.kind == SpaceKind.SPHERE else Method.CLOSED_FORM
    return np.array(
        [
            expected_degree(g.space, g.density, point, float(radius), g.N - 1, method)
            for point, radius in zip(g.positions, g.radius)
        ]
    )


def pearson(x: np.ndarray, y: np.ndarray) -> float:
    if x.size < 2 or np.ptp(x) == 0 or np.ptp(y) == 0:
        return float("nan")
    return float(stats.pearsonr(x, y)[0])


def degrees_command(
    config: Optional[Path] = CONFIG,
    graph: Optional[Path] = GRAPH,
    space: Optional[SpaceKind] = SPACE,
    R: Optional[float] = RADIUS,
    density: Optional[str] = DENSITY,
    n: Optional[int] = NODES,
    alpha: Optional[str] = ALPHA,
    beta: Optional[float] = BETA,
    eps: Optional[float] = EPSILON,
    hubs: Optional[int] = HUBS,
    seed: Optional[int] = SEED,
    out: Optional[Path] = OUT,
) -> None:
    """Write empirical against expected node degrees and their correlation."""
    run = load_config(
        "degrees",
        config,
        graph=graph,
        space=space,
        R=R,
        density=density,
        n=n,
        alpha=alpha,
        beta=beta,
        eps=eps,
        hubs=hubs,
        seed=seed,
        out=out,
    )
    g = load_or_generate(run)
    if g.density is None:
        raise typer.BadParameter("the graph carries no density to compute expected degrees with")

    with exit_on_error():
        empirical = degrees(g)
        expected = expected_degrees(g)
        rows = zip(range(g.N), empirical.tolist(), expected.tolist(), g.rho_true.tolist(), g.is_hub.tolist())
        write_csv(run.out.joinpath(DEGREES_FILE), DEGREE_COLUMNS, rows)
        run.echo()

    typer.echo(summary_line(g))
    typer.echo(f"pearson={pearson(expected, empirical.astype(float)):.6g}")
