import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Sequence

import numpy as np
from pydantic import ValidationError

from nugg.density.density_spec import density_from_dict
from nugg.errors import DomainError
from nugg.geometry.latent_space import LatentSpace
from nugg.graphgen.geometric_graph import GeometricGraph, degrees
from nugg.graphgen.hub_config import HubConfig
from nugg.utils.artifacts import PathLike, read_csv, read_json, write_csv, write_json

logger = logging.getLogger(__name__)

NODE_COLUMNS = ["id", "theta", "r", "rho", "hub", "radius", "degree"]
EDGE_COLUMNS = ["source", "target"]


class GraphCodec:
    class GraphCodecError(DomainError):
        pass

    @classmethod
    def to_dict(cls, g: GeometricGraph) -> Dict[str, Any]:
        nodes = []
        for i in range(g.N):
            node: Dict[str, Any] = {"theta": float(g.theta[i])}
            if not g.space.is_circle:
                node["r"] = float(g.r[i])
            node.update(
                rho=float(g.rho_true[i]),
                hub=bool(g.is_hub[i]),
                radius=float(g.radius[i]),
            )
            nodes.append(node)
        return {
            "space": g.space.dict(),
            "density": None if g.density is None else g.density.to_dict(),
            "config": g.config.dict(),
            "alpha": g.alpha,
            "beta": g.beta,
            "epsilon": g.epsilon,
            "nodes": nodes,
            "edges": g.edges.tolist(),
            "hub_seeds": g.hub_seeds.tolist(),
        }

    @classmethod
    def from_dict(cls, payload: Mapping[str, Any]) -> GeometricGraph:
        try:
            space = LatentSpace.parse_obj(payload["space"])
            nodes = payload["nodes"]
            theta = np.array([node["theta"] for node in nodes], dtype=float)
            r = (
                np.zeros(theta.size)
                if space.is_circle
                else np.array([node["r"] for node in nodes], dtype=float)
            )
            density = payload.get("density")
            return GeometricGraph(
                space=space,
                density=None if density is None else density_from_dict(density),
                config=HubConfig.parse_obj(payload["config"]),
                alpha=float(payload["alpha"]),
                beta=float(payload["beta"]),
                epsilon=float(payload["epsilon"]),
                theta=theta,
                r=r,
                rho_true=np.array([node["rho"] for node in nodes], dtype=float),
                is_hub=np.array([bool(node["hub"]) for node in nodes], dtype=bool),
                radius=np.array([node["radius"] for node in nodes], dtype=float),
                edges=np.array(payload.get("edges", []), dtype=np.int64).reshape(-1, 2),
                hub_seeds=np.array(payload.get("hub_seeds", []), dtype=np.int64),
            )
        except (KeyError, TypeError, ValueError, ValidationError) as e:
            raise GraphCodec.GraphCodecError(f"malformed graph document: {e}") from e

    @classmethod
    def write_json(cls, g: GeometricGraph, path: PathLike) -> Path:
        return write_json(path, cls.to_dict(g))

    @classmethod
    def read_json(cls, path: PathLike) -> GeometricGraph:
        return cls.from_dict(read_json(path))

    @classmethod
    def write_csv(
        cls,
        g: GeometricGraph,
        nodes_path: PathLike,
        edges_path: PathLike,
        extra_columns: Optional[Mapping[str, Sequence[Any]]] = None,
    ) -> None:
        """Sidecar node table plus a flat edge list; extra columns are appended in order."""
        extra = dict(extra_columns or {})
        for name, column in extra.items():
            if len(column) != g.N:
                raise GraphCodec.GraphCodecError(f"column {name} has {len(column)} rows, expected {g.N}")
        degree = degrees(g)
        r = [""] * g.N if g.space.is_circle else g.r.tolist()
        rows = []
        for i in range(g.N):
            row = [
                i,
                float(g.theta[i]),
                r[i],
                float(g.rho_true[i]),
                bool(g.is_hub[i]),
                float(g.radius[i]),
                int(degree[i]),
            ]
            row.extend(column[i] for column in extra.values())
            rows.append(row)
        write_csv(nodes_path, NODE_COLUMNS + list(extra), rows)
        write_csv(edges_path, EDGE_COLUMNS, g.edges.tolist())

    @classmethod
    def read_edges_csv(cls, path: PathLike) -> np.ndarray:
        rows = read_csv(path)
        return np.array(
            [[int(row["source"]), int(row["target"])] for row in rows], dtype=np.int64
        ).reshape(-1, 2)


def write_graph(g: GeometricGraph, out_dir: PathLike, stem: str = "graph") -> Dict[str, Path]:
    out = Path(out_dir)
    paths = {
        "json": out.joinpath(f"{stem}.json"),
        "nodes": out.joinpath("nodes.csv"),
        "edges": out.joinpath("edges.csv"),
    }
    GraphCodec.write_json(g, paths["json"])
    GraphCodec.write_csv(g, paths["nodes"], paths["edges"])
    return paths


def read_graph(path: PathLike) -> GeometricGraph:
    return GraphCodec.read_json(path)
