import logging
from typing import Optional, Tuple, Union

import numpy as np
from scipy import sparse

from nugg.errors import DomainError
from nugg.gso.modulation import GsoSpec
from nugg.gso.presets import resolve_spec

logger = logging.getLogger(__name__)

# dense operators above this size should go through the sparse path
DENSE_MAX_NODES = 5000

SYMMETRY_TOLERANCE = 1e-12

AdjacencyLike = Union[np.ndarray, sparse.spmatrix]


class GsoBuilder:
    """Non-uniform geometric GSO

        L = N^-1 D1 A_rho D2 - N^-1 diag(D3 A_rho D4 1),   A_rho = A diag(rho)^-1,

    with Di = diag(mi(N^-1 A_rho 1)). Off-diagonal entries vanish outside the edges.
    """

    class GsoBuilderError(DomainError):
        pass

    @classmethod
    def _check_adjacency(cls, adjacency: AdjacencyLike) -> Tuple[int, bool]:
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise GsoBuilder.GsoBuilderError(f"adjacency must be square, got shape {adjacency.shape}")
        N = adjacency.shape[0]
        is_sparse = sparse.issparse(adjacency)
        if is_sparse:
            asymmetry = abs(adjacency - adjacency.T).max() if adjacency.nnz else 0.0
            diagonal = np.abs(adjacency.diagonal())
            negative = adjacency.nnz and adjacency.data.min() < 0
            finite = np.all(np.isfinite(adjacency.data))
        else:
            asymmetry = float(np.max(np.abs(adjacency - adjacency.T))) if N else 0.0
            diagonal = np.abs(np.diag(adjacency))
            negative = N and adjacency.min() < 0
            finite = np.all(np.isfinite(adjacency))
        if not finite:
            raise GsoBuilder.GsoBuilderError("adjacency entries must be finite")
        if asymmetry > SYMMETRY_TOLERANCE:
            raise GsoBuilder.GsoBuilderError(f"adjacency is not symmetric (max deviation {asymmetry:g})")
        if np.any(diagonal > 0):
            raise GsoBuilder.GsoBuilderError("adjacency must have a zero diagonal")
        if negative:
            raise GsoBuilder.GsoBuilderError("adjacency weights must be non-negative")
        return N, is_sparse

    @classmethod
    def _check_rho(cls, rho: Optional[np.ndarray], N: int) -> np.ndarray:
        if rho is None:
            return np.ones(N)
        rho = np.asarray(rho, dtype=float).ravel()
        if rho.size != N:
            raise GsoBuilder.GsoBuilderError(f"rho has {rho.size} entries for {N} nodes")
        bad = np.flatnonzero(~(np.isfinite(rho) & (rho > 0)))
        if bad.size:
            raise GsoBuilder.GsoBuilderError(
                f"graph density must be finite and positive, node {int(bad[0])} has {rho[bad[0]]:g}"
            )
        return rho

    @classmethod
    def modulation_vectors(
        cls, degree_term: np.ndarray, spec: GsoSpec
    ) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        d1, d2, d3, d4 = (m(degree_term) for m in spec.modulations)
        return d1, d2, d3, d4

    @classmethod
    def build(
        cls,
        adjacency: np.ndarray,
        rho: Optional[np.ndarray],
        spec: Union[GsoSpec, str],
    ) -> np.ndarray:
        if sparse.issparse(adjacency):
            adjacency = adjacency.toarray()
        adjacency = np.asarray(adjacency, dtype=float)
        N, _ = cls._check_adjacency(adjacency)
        rho = cls._check_rho(rho, N)
        spec = resolve_spec(spec)
        if N > DENSE_MAX_NODES:
            logger.warning("dense GSO with N=%d, the sparse path scales better", N)

        a_rho = adjacency / rho[None, :]
        degree_term = a_rho.sum(axis=1) / N
        d1, d2, d3, d4 = cls.modulation_vectors(degree_term, spec)

        L = d1[:, None] * a_rho * d2[None, :] / N
        L[np.diag_indices(N)] -= d3 * (a_rho @ d4) / N
        logger.debug("built dense GSO %s on %d nodes", spec, N)
        return L

    @classmethod
    def build_sparse(
        cls,
        adjacency: AdjacencyLike,
        rho: Optional[np.ndarray],
        spec: Union[GsoSpec, str],
    ) -> sparse.csr_matrix:
        adjacency = sparse.csr_matrix(adjacency, dtype=float)
        N, _ = cls._check_adjacency(adjacency)
        rho = cls._check_rho(rho, N)
        spec = resolve_spec(spec)

        a_rho = adjacency @ sparse.diags(1.0 / rho)
        degree_term = np.asarray(a_rho.sum(axis=1)).ravel() / N
        d1, d2, d3, d4 = cls.modulation_vectors(degree_term, spec)

        off_diagonal = sparse.diags(d1) @ a_rho @ sparse.diags(d2) / N
        diagonal = d3 * (a_rho @ d4) / N
        L = (off_diagonal - sparse.diags(diagonal)).tocsr()
        logger.debug("built sparse GSO %s on %d nodes, %d entries", spec, N, L.nnz)
        return L


def build_gso(adjacency: AdjacencyLike, rho: Optional[np.ndarray], spec: Union[GsoSpec, str]) -> np.ndarray:
    return GsoBuilder.build(adjacency, rho, spec)


def build_gso_sparse(
    adjacency: AdjacencyLike, rho: Optional[np.ndarray], spec: Union[GsoSpec, str]
) -> sparse.csr_matrix:
    return GsoBuilder.build_sparse(adjacency, rho, spec)
