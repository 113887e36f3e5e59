import logging
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.spatial import cKDTree

from nugg.errors import DomainError
from nugg.geometry.latent_space import LatentSpace, Point, SpaceKind
from nugg.utils.settings import get_settings

logger = logging.getLogger(__name__)

# entries of a distance block in the brute-force pass
BLOCK_ENTRIES = 4_000_000

# the kd-tree query radius is widened so that no pair is lost to rounding
CHORD_SLACK = 1e-9

AUTO_ALPHA_FACTOR = 1.0001


def _empty_edges() -> np.ndarray:
    return np.empty((0, 2), dtype=np.int64)


def _canonical_edges(pairs: np.ndarray) -> np.ndarray:
    if pairs.size == 0:
        return _empty_edges()
    pairs = np.sort(np.asarray(pairs, dtype=np.int64), axis=1)
    pairs = np.unique(pairs, axis=0)
    return pairs[pairs[:, 0] != pairs[:, 1]]


def brute_force_edges(
    space: LatentSpace, theta: np.ndarray, r: np.ndarray, radius: np.ndarray
) -> np.ndarray:
    """Every pair (i, j), i < j, with d(x_i, x_j) <= max(radius_i, radius_j)."""
    count = theta.size
    if count < 2:
        return _empty_edges()
    block = max(1, BLOCK_ENTRIES // count)
    found = []
    for start in range(0, count, block):
        stop = min(count, start + block)
        d = space.distance(theta[start:stop, None], r[start:stop, None], theta[None, :], r[None, :])
        reach = np.maximum(radius[start:stop, None], radius[None, :])
        rows, cols = np.nonzero(d <= reach)
        rows = rows + start
        upper = cols > rows
        found.append(np.column_stack([rows[upper], cols[upper]]))
    return _canonical_edges(np.concatenate(found))


def indexed_edges(
    space: LatentSpace, theta: np.ndarray, r: np.ndarray, radius: np.ndarray
) -> np.ndarray:
    """kd-tree candidates in a euclidean embedding, filtered by the geodesic rule."""
    points = space.embed(theta, r)
    tree = cKDTree(points)
    base = float(np.min(radius))
    candidates = [
        tree.query_pairs(space.embedded_radius(base) * (1.0 + CHORD_SLACK), output_type="ndarray")
    ]
    # nodes reaching further than the base radius
    for node in np.flatnonzero(radius > base):
        reach = space.embedded_radius(float(radius[node])) * (1.0 + CHORD_SLACK)
        neighbors = np.asarray(tree.query_ball_point(points[node], reach), dtype=np.int64)
        candidates.append(np.column_stack([np.full(neighbors.size, node), neighbors]))
    pairs = _canonical_edges(np.concatenate([c.reshape(-1, 2) for c in candidates]))
    if pairs.size == 0:
        return pairs
    i, j = pairs[:, 0], pairs[:, 1]
    keep = space.distance(theta[i], r[i], theta[j], r[j]) <= np.maximum(radius[i], radius[j])
    return pairs[keep]


def build_edges(
    space: LatentSpace,
    theta: np.ndarray,
    r: Optional[np.ndarray],
    radius: np.ndarray,
    brute_force_max_nodes: Optional[int] = None,
) -> np.ndarray:
    """Edges of the max-radius neighborhood rule as a sorted (E, 2) int64 array."""
    theta, r = space.validate_coordinates(theta, r)
    radius = np.asarray(radius, dtype=float)
    if radius.shape != theta.shape:
        raise DomainError("one neighborhood radius per node is required")
    if np.any(radius < 0) or not np.all(np.isfinite(radius)):
        raise DomainError("neighborhood radii must be finite and non-negative")

    limit = get_settings().brute_force_max_nodes if brute_force_max_nodes is None else brute_force_max_nodes
    if theta.size <= limit or space.kind == SpaceKind.HYPERBOLIC_DISK:
        logger.debug("brute-force edge pass over %d nodes", theta.size)
        return brute_force_edges(space, theta, r, radius)
    logger.debug("kd-tree edge pass over %d nodes", theta.size)
    return indexed_edges(space, theta, r, radius)


def bottleneck_radius(space: LatentSpace, theta: np.ndarray, r: Optional[np.ndarray]) -> float:
    """Longest edge of a minimum spanning tree over geodesic distances (Prim)."""
    theta, r = space.validate_coordinates(theta, r)
    count = theta.size
    if count < 2:
        raise DomainError("the bottleneck radius needs at least two positions")

    in_tree = np.zeros(count, dtype=bool)
    in_tree[0] = True
    best = space.distance(theta[0], r[0], theta, r)
    bottleneck = 0.0
    for _ in range(count - 1):
        candidate = np.where(in_tree, np.inf, best)
        node = int(np.argmin(candidate))
        bottleneck = max(bottleneck, float(candidate[node]))
        in_tree[node] = True
        best = np.minimum(best, space.distance(theta[node], r[node], theta, r))
    return bottleneck


def auto_alpha(positions: Sequence[Point], space: LatentSpace) -> float:
    """Smallest constant radius connecting the positions, with a small safety factor."""
    theta, r = positions_to_arrays(positions, space)
    return bottleneck_radius(space, theta, r) * AUTO_ALPHA_FACTOR


def positions_to_arrays(
    positions: Sequence[Point], space: LatentSpace
) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    theta = np.array([p.theta for p in positions], dtype=float)
    if space.is_circle:
        return theta, None
    if any(p.r is None for p in positions):
        raise DomainError(f"{space.kind.value} points need a radial coordinate")
    return theta, np.array([p.r for p in positions], dtype=float)
