import logging
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, validator
from scipy import sparse

from nugg.density.angular import AngularDensity
from nugg.geometry.latent_space import LatentSpace, Point
from nugg.graphgen.hub_config import HubConfig

logger = logging.getLogger(__name__)


class GeometricGraph(BaseModel):
    """Sampled geometric graph with hubs.

    Arrays are indexed by node; edges holds each unordered pair once as (i, j), i < j.
    """

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    space: LatentSpace
    density: Optional[AngularDensity] = None
    config: HubConfig
    alpha: float
    beta: float
    epsilon: float

    theta: np.ndarray
    r: np.ndarray
    rho_true: np.ndarray
    is_hub: np.ndarray
    radius: np.ndarray
    edges: np.ndarray
    hub_seeds: np.ndarray

    @validator("edges")
    def _edge_shape(cls, value: np.ndarray) -> np.ndarray:
        value = np.asarray(value, dtype=np.int64).reshape(-1, 2)
        if np.any(value[:, 0] >= value[:, 1]):
            raise ValueError("edges must be stored as (i, j) with i < j")
        return value

    @property
    def N(self) -> int:
        return int(self.theta.size)

    @property
    def edge_count(self) -> int:
        return int(self.edges.shape[0])

    @property
    def hub_count(self) -> int:
        return int(np.count_nonzero(self.is_hub))

    @property
    def positions(self) -> List[Point]:
        if self.space.is_circle:
            return [Point(theta=t) for t in self.theta]
        return [Point(theta=t, r=radial) for t, radial in zip(self.theta, self.r)]

    def degrees(self) -> np.ndarray:
        return degrees(self)

    def adjacency(self) -> sparse.csr_matrix:
        """Symmetric 0/1 adjacency in CSR form."""
        rows = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        cols = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        data = np.ones(rows.size, dtype=float)
        return sparse.csr_matrix((data, (rows, cols)), shape=(self.N, self.N))

    def neighbors(self, node: int) -> np.ndarray:
        adjacency = self.adjacency()
        return adjacency.indices[adjacency.indptr[node] : adjacency.indptr[node + 1]]


def degrees(g: GeometricGraph) -> np.ndarray:
    """Number of edges at every node."""
    return np.bincount(g.edges.ravel(), minlength=g.N).astype(np.int64)
