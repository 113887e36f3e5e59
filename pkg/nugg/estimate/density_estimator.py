import logging
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from nugg.errors import DomainError
from nugg.graphgen.geometric_graph import GeometricGraph, degrees

logger = logging.getLogger(__name__)

# feature value of nodes without neighbors
ISOLATED_FEATURE = 0.0


class EstimationMethod(str, Enum):
    DEGREE_ONLY = "DegreeOnly"
    DEGREE_OVER_VOLUME = "DegreeOverVolume"


class DensityEstimate(BaseModel):
    """Per-node graph density estimate; undefined entries are NaN and flagged."""

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    rho_hat: np.ndarray
    method: EstimationMethod
    undefined: np.ndarray

    @property
    def defined(self) -> np.ndarray:
        return ~self.undefined

    @property
    def undefined_count(self) -> int:
        return int(np.count_nonzero(self.undefined))


class PnetFeatures(BaseModel):
    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    inverse_degree: np.ndarray
    inverse_neighbor_degree: np.ndarray
    isolated: np.ndarray

    def pairs(self) -> np.ndarray:
        return np.column_stack([self.inverse_degree, self.inverse_neighbor_degree])


class DensityEstimator:
    class DensityEstimatorError(DomainError):
        pass

    @classmethod
    def normalize_inverse_mean(cls, rho: Sequence[float]) -> np.ndarray:
        """Scale rho so that mean(1 / rho) = 1."""
        rho = np.asarray(rho, dtype=float)
        if rho.size == 0:
            return rho.copy()
        if not np.all(np.isfinite(rho) & (rho > 0)):
            raise DensityEstimator.DensityEstimatorError(
                "inverse-mean normalization needs finite positive entries"
            )
        return rho * np.mean(1.0 / rho)

    @classmethod
    def estimate(
        cls, g: GeometricGraph, volumes: Optional[Sequence[float]] = None
    ) -> DensityEstimate:
        degree = degrees(g).astype(float)
        undefined = degree == 0
        if np.any(undefined):
            logger.warning(
                "%d isolated nodes have no density estimate", int(np.count_nonzero(undefined))
            )

        rho_hat = np.full(g.N, np.nan)
        if volumes is None:
            method = EstimationMethod.DEGREE_ONLY
            if np.any(~undefined):
                rho_hat[~undefined] = cls.normalize_inverse_mean(degree[~undefined])
        else:
            method = EstimationMethod.DEGREE_OVER_VOLUME
            volumes = np.asarray(volumes, dtype=float)
            if volumes.shape != (g.N,):
                raise DensityEstimator.DensityEstimatorError(
                    f"expected {g.N} neighborhood volumes, got shape {volumes.shape}"
                )
            if not np.all(np.isfinite(volumes) & (volumes > 0)):
                raise DensityEstimator.DensityEstimatorError(
                    "neighborhood volumes must be finite and positive"
                )
            rho_hat[~undefined] = degree[~undefined] / g.N / volumes[~undefined]

        logger.info("%s density estimate over %d nodes", method.value, g.N)
        return DensityEstimate(rho_hat=rho_hat, method=method, undefined=undefined)

    @classmethod
    def pnet_features(cls, g: GeometricGraph) -> PnetFeatures:
        """1 / deg(i) and 1 / mean neighbor degree, ISOLATED_FEATURE when deg(i) = 0."""
        degree = degrees(g).astype(float)
        isolated = degree == 0
        neighbor_sum = g.adjacency() @ degree

        inverse_degree = np.full(g.N, ISOLATED_FEATURE)
        inverse_neighbor_degree = np.full(g.N, ISOLATED_FEATURE)
        inverse_degree[~isolated] = 1.0 / degree[~isolated]
        # mean neighbor degree is neighbor_sum / degree
        inverse_neighbor_degree[~isolated] = degree[~isolated] / neighbor_sum[~isolated]
        return PnetFeatures(
            inverse_degree=inverse_degree,
            inverse_neighbor_degree=inverse_neighbor_degree,
            isolated=isolated,
        )


def estimate_density(g: GeometricGraph, volumes: Optional[Sequence[float]] = None) -> DensityEstimate:
    return DensityEstimator.estimate(g, volumes)


def pnet_features(g: GeometricGraph) -> PnetFeatures:
    return DensityEstimator.pnet_features(g)


def normalize_inverse_mean(rho: Sequence[float]) -> np.ndarray:
    return DensityEstimator.normalize_inverse_mean(rho)


def relative_l2_error(estimate: DensityEstimate, rho_true: np.ndarray) -> Tuple[float, int]:
    """||rho_hat - rho|| / ||rho|| over defined nodes, with the number of nodes used."""
    mask = estimate.defined & np.isfinite(rho_true)
    if not np.any(mask):
        raise DensityEstimator.DensityEstimatorError("no node has a defined estimate")
    difference = estimate.rho_hat[mask] - rho_true[mask]
    return float(np.linalg.norm(difference) / np.linalg.norm(rho_true[mask])), int(np.count_nonzero(mask))
