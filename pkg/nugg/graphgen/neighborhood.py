import logging
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel

from nugg.density.radial import RadialLaw
from nugg.geometry.latent_space import TWO_PI, LatentSpace, SpaceKind, canonical_angle
from nugg.graphgen.geometric_graph import GeometricGraph

logger = logging.getLogger(__name__)

Interval = Tuple[float, float]

# radial grid of the interpolated ball masses on two-dimensional spaces
VOLUME_GRID = 513


def merge_intervals(intervals: List[Interval]) -> List[Interval]:
    ordered = sorted((a, b) for a, b in intervals if b > a)
    merged: List[Interval] = []
    for a, b in ordered:
        if merged and a <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], b))
        else:
            merged.append((a, b))
    return merged


class NeighborhoodModel(BaseModel):
    """Continuous neighborhoods N(x) = {y : d(x, y) <= max(r(x), r(y))} of a graph with hubs.

    The hub region is the union of the epsilon-balls around the hub seeds. Volumes
    are fractions of the total measure of the space.
    """

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    space: LatentSpace
    alpha: float
    beta: float = 0.0
    epsilon: float = 0.0
    seed_theta: np.ndarray = np.empty(0)
    seed_r: np.ndarray = np.empty(0)

    @classmethod
    def from_graph(cls, g: GeometricGraph) -> "NeighborhoodModel":
        return cls(
            space=g.space,
            alpha=g.alpha,
            beta=g.beta,
            epsilon=g.epsilon,
            seed_theta=g.theta[g.hub_seeds],
            seed_r=g.r[g.hub_seeds],
        )

    @classmethod
    def constant(cls, space: LatentSpace, alpha: float) -> "NeighborhoodModel":
        return cls(space=space, alpha=alpha)

    @property
    def has_hubs(self) -> bool:
        return self.seed_theta.size > 0

    def is_hub_at(self, theta: np.ndarray, r: Optional[np.ndarray] = None) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        if not self.has_hubs:
            return np.zeros(theta.shape, dtype=bool)
        r = np.zeros_like(theta) if r is None else np.asarray(r, dtype=float)
        d = self.space.distance(
            theta[..., None], r[..., None], self.seed_theta, self.seed_r
        )
        return np.any(d <= self.epsilon, axis=-1)

    def radius_at(self, theta: np.ndarray, r: Optional[np.ndarray] = None) -> np.ndarray:
        return np.where(self.is_hub_at(theta, r), self.alpha + self.beta, self.alpha)

    def arcs(self, theta: float) -> List[Interval]:
        """N(theta) on the unit circle as disjoint absolute arcs."""
        hub_reach = min(self.alpha + self.beta, np.pi)
        if bool(self.is_hub_at(np.array([theta]))[0]):
            offsets = [(-hub_reach, hub_reach)]
        else:
            base = min(self.alpha, np.pi)
            offsets = [(-base, base)]
            for seed in self.seed_theta:
                center = float(canonical_angle(seed - theta))
                for shift in (-TWO_PI, 0.0, TWO_PI):
                    a = max(center + shift - self.epsilon, -hub_reach)
                    b = min(center + shift + self.epsilon, hub_reach)
                    offsets.append((a, b))
        return [(theta + a, theta + b) for a, b in merge_intervals(offsets)]

    def volumes(self, theta: np.ndarray, r: Optional[np.ndarray] = None) -> np.ndarray:
        """mu(N(x_i)) for every position."""
        theta = np.asarray(theta, dtype=float)
        if self.space.is_circle:
            lengths = [sum(b - a for a, b in self.arcs(float(t))) for t in theta]
            return np.minimum(np.asarray(lengths, dtype=float) / TWO_PI, 1.0)

        r = np.asarray(r, dtype=float)
        hub = self.is_hub_at(theta, r)
        volumes = self._own_radius_mass(r, self.alpha)
        if np.any(hub):
            volumes = np.where(hub, self._own_radius_mass(r, self.alpha + self.beta), volumes)
        return volumes

    def _own_radius_mass(self, r: np.ndarray, radius: float) -> np.ndarray:
        # hub cells inside a non-hub ball are not added on two-dimensional spaces
        if self.space.kind == SpaceKind.SPHERE:
            return np.full(r.shape, float(self.space.ball_measure(radius, normalized=True)))
        law = RadialLaw(space=self.space)
        if r.size <= VOLUME_GRID:
            return np.array([law.uniform_ball_mass(float(x), radius) for x in r])
        grid = np.linspace(0.0, law.upper, VOLUME_GRID)
        values = np.array([law.uniform_ball_mass(float(x), radius) for x in grid])
        return np.interp(r, grid, values)


def neighborhood_volumes(g: GeometricGraph) -> np.ndarray:
    return NeighborhoodModel.from_graph(g).volumes(g.theta, g.r)
