import hashlib
import os
import sys
from pathlib import Path
from typing import Set, Tuple

import numpy as np

from nugg.geometry.latent_space import LatentSpace
from nugg.graphgen.geometric_graph import GeometricGraph
from nugg.graphgen.hub_config import HubConfig


def brute_force_edge_set(
    space: LatentSpace, theta: np.ndarray, r: np.ndarray, radius: np.ndarray
) -> Set[Tuple[int, int]]:
    """Edge rule checked one pair at a time."""
    edges = set()
    for i in range(theta.size):
        for j in range(i + 1, theta.size):
            d = float(space.distance(theta[i], r[i], theta[j], r[j]))
            if d <= max(radius[i], radius[j]):
                edges.add((i, j))
    return edges


def is_connected(count: int, edges: np.ndarray) -> bool:
    """Union-find over an (E, 2) edge array."""
    parent = list(range(count))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in edges:
        root_i, root_j = find(int(i)), find(int(j))
        if root_i != root_j:
            parent[root_i] = root_j
    return len({find(i) for i in range(count)}) == 1


def random_graph(count: int, probability: float, rng: np.random.Generator) -> np.ndarray:
    """Symmetric 0/1 Erdos-Renyi adjacency without self-loops."""
    upper = np.triu(rng.random((count, count)) < probability, k=1)
    return (upper | upper.T).astype(float)


def complete_bipartite(n: int, m: int) -> np.ndarray:
    adjacency = np.zeros((n + m, n + m))
    adjacency[:n, n:] = 1.0
    adjacency[n:, :n] = 1.0
    return adjacency


def textbook_operator(name: str, adjacency: np.ndarray) -> np.ndarray:
    """Usual shift operators of a graph with degree matrix D."""
    degree = adjacency.sum(axis=1)
    inverse = np.diag(1.0 / degree)
    inverse_sqrt = np.diag(1.0 / np.sqrt(degree))
    identity = np.eye(adjacency.shape[0])
    normalized = inverse_sqrt @ adjacency @ inverse_sqrt
    return {
        "adjacency": adjacency,
        "combinatorial": np.diag(degree) - adjacency,
        "signless": np.diag(degree) + adjacency,
        "random_walk": identity - inverse @ adjacency,
        "right_normalized": identity - adjacency @ inverse,
        "sym_norm_adjacency": normalized,
        "sym_norm_laplacian": identity - normalized,
        "balanced": normalized - np.diag(normalized.sum(axis=1)),
    }[name]


def graph_from_edges(count: int, edges) -> GeometricGraph:
    """Circle graph with the given edge list, for degree-only computations."""
    return GeometricGraph(
        space=LatentSpace.unit_circle(),
        config=HubConfig(N=count, alpha=0.0),
        alpha=0.0,
        beta=0.0,
        epsilon=0.0,
        theta=np.linspace(-np.pi, np.pi, count, endpoint=False),
        r=np.zeros(count),
        rho_true=np.ones(count),
        is_hub=np.zeros(count, dtype=bool),
        radius=np.zeros(count),
        edges=np.array(sorted(tuple(sorted(e)) for e in edges), dtype=np.int64).reshape(-1, 2),
        hub_seeds=np.empty(0, dtype=np.int64),
    )


REPO_ROOT = Path(__file__).resolve().parent.parent


def run_nugg(shell, *args: str):
    """python -m nugg in a subprocess that imports the checkout."""
    env = dict(os.environ)
    env["PYTHONPATH"] = os.pathsep.join(filter(None, [str(REPO_ROOT), env.get("PYTHONPATH", "")]))
    return shell.run(sys.executable, "-m", "nugg", *[str(arg) for arg in args], env=env, cwd=str(REPO_ROOT))


def file_digests(directory: Path) -> dict:
    return {path.name: hashlib.sha256(path.read_bytes()).hexdigest() for path in sorted(directory.iterdir()) if path.is_file()}
