import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional

import typer

from nugg.cli.run_config import RunConfig
from nugg.errors import NuggError
from nugg.graphgen.generator import generate
from nugg.graphgen.geometric_graph import GeometricGraph
from nugg.graphgen.serialization import read_graph

logger = logging.getLogger(__name__)

# shared flags; None means "keep the config file value"
CONFIG = typer.Option(None, "--config", help="JSON run config, flags override its fields")
SPACE = typer.Option(None, "--space", help="latent space: s1, disk, sphere or hyperbolic")
RADIUS = typer.Option(None, "--R", help="radius of the hyperbolic disk")
DENSITY = typer.Option(None, "--density", help="'uniform', an inline JSON density or a JSON file")
NODES = typer.Option(None, "--n", help="number of nodes")
ALPHA = typer.Option(None, "--alpha", help="connection radius or 'auto'")
BETA = typer.Option(None, "--beta", help="extra radius of hub nodes, 3 alpha by default")
EPSILON = typer.Option(None, "--eps", help="radius of the hub regions, alpha / 10 by default")
HUBS = typer.Option(None, "--hubs", help="number of hub seeds")
SEED = typer.Option(None, "--seed", help="master seed")
GRAPH = typer.Option(None, "--graph", help="graph JSON written by 'nugg gen', generated from the flags when omitted")
OUT = typer.Option(None, "--out", help="output directory")


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Library failures end the command with exit code 1 and a one-line message."""
    try:
        yield
    except NuggError as e:
        logger.debug("command failed", exc_info=True)
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=1) from e


def parse_grid(value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(item) for item in value.split(",") if item.strip()]
    except ValueError as e:
        raise typer.BadParameter(f"expected comma separated node counts, got {value!r}") from e


def load_or_generate(config: RunConfig) -> GeometricGraph:
    if config.graph is not None:
        path = Path(config.graph)
        if not path.is_file():
            raise typer.BadParameter(f"graph file {path} does not exist")
        return read_graph(path)
    if config.n is None:
        raise typer.BadParameter("either --graph or --n is required")
    return generate(config.build_space(), config.build_density(), config.build_hub_config())


def summary_line(g: GeometricGraph) -> str:
    mean_degree = 2.0 * g.edge_count / g.N
    return f"N={g.N} edges={g.edge_count} mean_degree={mean_degree:.6g} hubs={g.hub_count}"
