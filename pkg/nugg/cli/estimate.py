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
from nugg.estimate.density_estimator import (
    EstimationMethod,
    estimate_density,
    pnet_features,
    relative_l2_error,
)
from nugg.geometry.latent_space import SpaceKind
from nugg.graphgen.geometric_graph import degrees
from nugg.graphgen.neighborhood import neighborhood_volumes
from nugg.graphgen.serialization import GraphCodec
from nugg.utils.artifacts import write_csv

logger = logging.getLogger(__name__)

ESTIMATE_FILE = "estimate.csv"
NODES_FILE = "nodes.csv"
EDGES_FILE = "edges.csv"
ESTIMATE_COLUMNS = ["id", "degree", "rho_true", "rho_hat", "inverse_degree", "inverse_neighbor_degree"]


def estimate(
    config: Optional[Path] = CONFIG,
    graph: Optional[Path] = GRAPH,
    method: Optional[EstimationMethod] = typer.Option(
        None, "--method", help="DegreeOnly or DegreeOverVolume (true neighborhood volumes)"
    ),
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
    """Estimate node densities from degrees.

    The estimates are merged into the node table as a rho_hat column; estimate.csv
    adds the learned-estimator features.
    """
    run = load_config(
        "estimate",
        config,
        graph=graph,
        estimator=method,
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

    with exit_on_error():
        volumes = None
        if EstimationMethod(run.estimator) == EstimationMethod.DEGREE_OVER_VOLUME:
            volumes = neighborhood_volumes(g)
        result = estimate_density(g, volumes)
        features = pnet_features(g)
        # undefined estimates are written as empty cells
        rho_hat = ["" if undefined else value for value, undefined in zip(result.rho_hat.tolist(), result.undefined)]
        rows = zip(
            range(g.N),
            degrees(g).tolist(),
            g.rho_true.tolist(),
            rho_hat,
            features.inverse_degree.tolist(),
            features.inverse_neighbor_degree.tolist(),
        )
        write_csv(run.out.joinpath(ESTIMATE_FILE), ESTIMATE_COLUMNS, rows)
        GraphCodec.write_csv(
            g,
            run.out.joinpath(NODES_FILE),
            run.out.joinpath(EDGES_FILE),
            extra_columns={"rho_hat": rho_hat},
        )
        run.echo()
        error, used = relative_l2_error(result, g.rho_true)

    typer.echo(summary_line(g))
    typer.echo(f"method={result.method.value} relative_l2_error={error:.6g} nodes={used} undefined={result.undefined_count}")
