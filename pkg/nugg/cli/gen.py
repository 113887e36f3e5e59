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
    NODES,
    OUT,
    RADIUS,
    SEED,
    SPACE,
    exit_on_error,
    summary_line,
)
from nugg.cli.run_config import load_config
from nugg.geometry.latent_space import SpaceKind
from nugg.graphgen.generator import generate
from nugg.graphgen.serialization import write_graph

logger = logging.getLogger(__name__)


def gen(
    config: Optional[Path] = CONFIG,
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
    """Sample a geometric graph with hubs and write graph.json, nodes.csv and edges.csv."""
    run = load_config(
        "gen", config, space=space, R=R, density=density, n=n, alpha=alpha, beta=beta, eps=eps, hubs=hubs, seed=seed, out=out
    )
    if run.n is None:
        raise typer.BadParameter("--n is required", param_hint="--n")

    with exit_on_error():
        g = generate(run.build_space(), run.build_density(), run.build_hub_config())
        paths = write_graph(g, run.out)
        run.echo()

    logger.info("graph written to %s", paths["json"])
    typer.echo(summary_line(g))
