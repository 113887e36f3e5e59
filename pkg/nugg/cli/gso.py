import logging
from pathlib import Path
from typing import Any, Dict, Optional

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
from nugg.cli.run_config import MatrixFormat, load_config
from nugg.convergence.runner import ConvergenceRunner, RhoMode
from nugg.geometry.latent_space import SpaceKind
from nugg.gso.builder import build_gso_sparse
from nugg.gso.export import GsoExport
from nugg.gso.spectral import Spectrum
from nugg.utils.artifacts import write_json

logger = logging.getLogger(__name__)

SPEC_FILE = "gso_spec.json"
SPECTRUM_FILE = "spectrum.json"
MATRIX_FILES = {MatrixFormat.DENSE: "gso.csv", MatrixFormat.TRIPLETS: "gso_triplets.csv"}


def gso(
    config: Optional[Path] = CONFIG,
    graph: Optional[Path] = GRAPH,
    preset: Optional[str] = typer.Option(None, "--preset", help="named modulation tuple, e.g. random_walk or eq8"),
    rho: Optional[RhoMode] = typer.Option(None, "--rho", help="node densities: true, ignore or estimate"),
    matrix: Optional[MatrixFormat] = typer.Option(None, "--matrix", help="dense CSV or (row, col, value) triplets"),
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
    """Build the density-corrected shift operator of a graph and summarize its spectrum."""
    run = load_config(
        "gso",
        config,
        graph=graph,
        preset=preset,
        rho=rho,
        matrix=matrix,
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
    spec = run.build_spec()

    with exit_on_error():
        L = build_gso_sparse(g.adjacency(), ConvergenceRunner.graph_density(g, RhoMode(run.rho)), spec)
        fmt = MatrixFormat(run.matrix)
        matrix_path = run.out.joinpath(MATRIX_FILES[fmt])
        if fmt == MatrixFormat.DENSE:
            GsoExport.write_dense_csv(L, matrix_path)
        else:
            GsoExport.write_triplets(L, matrix_path)
        GsoExport.write_spec(spec, run.out.joinpath(SPEC_FILE))

        summary: Dict[str, Any] = {"spec": str(spec), "N": g.N, "symmetric": True}
        try:
            summary.update(Spectrum.summary(L).dict())
        except Spectrum.SpectrumError as e:
            logger.warning("no spectral summary: %s", e)
            summary["symmetric"] = False
        write_json(run.out.joinpath(SPECTRUM_FILE), summary)
        run.echo()

    typer.echo(summary_line(g))
    if summary["symmetric"]:
        typer.echo(
            f"spectral_radius={summary['radius']:.6g} lambda_min={summary['lambda_min']:.6g} "
            f"lambda_max={summary['lambda_max']:.6g} bound={summary['bound']:.6g}"
        )
    else:
        typer.echo(f"{spec} is not symmetric, spectrum skipped")
