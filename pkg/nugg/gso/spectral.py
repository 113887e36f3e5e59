import logging
from typing import Union

import numpy as np
from pydantic import BaseModel
from scipy import sparse
from scipy.sparse import linalg as sparse_linalg

from nugg.errors import DomainError

logger = logging.getLogger(__name__)

# largest operator handed to the dense symmetric eigensolver
DENSE_EIGEN_MAX_NODES = 2000
EIGEN_TOLERANCE = 1e-10
SYMMETRY_TOLERANCE = 1e-10
COMMUTE_TOLERANCE = 1e-12

MatrixLike = Union[np.ndarray, sparse.spmatrix]


class SpectralSummary(BaseModel):
    N: int
    radius: float
    lambda_min: float
    lambda_max: float
    bound: float
    within_bound: bool


class DiagCommuteReport(BaseModel):
    identity1_holds: bool
    iff_condition_holds: bool
    identity2_holds: bool

    @property
    def consistent(self) -> bool:
        return self.iff_condition_holds == self.identity2_holds


class Spectrum:
    class SpectrumError(DomainError):
        pass

    @classmethod
    def check_symmetric(cls, L: MatrixLike) -> None:
        if L.ndim != 2 or L.shape[0] != L.shape[1]:
            raise Spectrum.SpectrumError(f"operator must be square, got shape {L.shape}")
        if sparse.issparse(L):
            deviation = abs(L - L.T).max() if L.nnz else 0.0
            scale = abs(L).max() if L.nnz else 0.0
        else:
            deviation = float(np.max(np.abs(L - L.T))) if L.size else 0.0
            scale = float(np.max(np.abs(L))) if L.size else 0.0
        if deviation > SYMMETRY_TOLERANCE * max(1.0, scale):
            raise Spectrum.SpectrumError(f"operator is not symmetric (max deviation {deviation:g})")

    @classmethod
    def extremes(cls, L: MatrixLike):
        """(lambda_min, lambda_max) of a symmetric operator."""
        cls.check_symmetric(L)
        N = L.shape[0]
        if N <= DENSE_EIGEN_MAX_NODES:
            dense = L.toarray() if sparse.issparse(L) else np.asarray(L, dtype=float)
            values = np.linalg.eigvalsh(dense)
            return float(values[0]), float(values[-1])
        operator = sparse.csr_matrix(L, dtype=float)
        low = sparse_linalg.eigsh(operator, k=1, which="SA", tol=EIGEN_TOLERANCE, return_eigenvectors=False)
        high = sparse_linalg.eigsh(operator, k=1, which="LA", tol=EIGEN_TOLERANCE, return_eigenvectors=False)
        logger.debug("Lanczos extremes on %d nodes", N)
        return float(low[0]), float(high[0])

    @classmethod
    def radius(cls, L: MatrixLike) -> float:
        cls.check_symmetric(L)
        N = L.shape[0]
        if N == 0:
            return 0.0
        if N <= DENSE_EIGEN_MAX_NODES:
            low, high = cls.extremes(L)
            return max(abs(low), abs(high))
        operator = sparse.csr_matrix(L, dtype=float)
        values = sparse_linalg.eigsh(operator, k=1, which="LM", tol=EIGEN_TOLERANCE, return_eigenvectors=False)
        return float(abs(values[0]))

    @classmethod
    def summary(cls, L: MatrixLike) -> SpectralSummary:
        N = L.shape[0]
        low, high = cls.extremes(L)
        radius = max(abs(low), abs(high))
        bound = 2.0 * np.sqrt(N)
        return SpectralSummary(
            N=N,
            radius=radius,
            lambda_min=low,
            lambda_max=high,
            bound=bound,
            within_bound=radius <= bound * (1.0 + EIGEN_TOLERANCE),
        )


def spectral_radius(L: MatrixLike) -> float:
    return Spectrum.radius(L)


def bound_check(L: MatrixLike, N: int) -> SpectralSummary:
    """Spectral radius against 2 sqrt(N), the bound of the balanced operator."""
    if L.shape[0] != N:
        raise Spectrum.SpectrumError(f"operator has {L.shape[0]} rows, expected {N}")
    return Spectrum.summary(L)


def bipartite_spectrum(n: int, m: int) -> np.ndarray:
    """Eigenvalues of the balanced operator on K_{n,m}, ascending with multiplicity."""
    if n < 1 or m < 1:
        raise Spectrum.SpectrumError("both sides of a complete bipartite graph need a node")
    values = np.concatenate(
        [
            [-(n + m) / np.sqrt(n * m)],
            np.full(n - 1, -np.sqrt(m / n)),
            np.full(m - 1, -np.sqrt(n / m)),
            [0.0],
        ]
    )
    return np.sort(values)


def diag_commute_check(A: np.ndarray, v: np.ndarray) -> DiagCommuteReport:
    """Checks diag(VA1) = V diag(A1) and whether diag(AV1) = diag(VA1).

    For symmetric non-negative A the second identity holds exactly when A_ij = 0
    for every pair with v_i != v_j.
    """
    A = np.asarray(A, dtype=float)
    v = np.asarray(v, dtype=float).ravel()
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] != v.size:
        raise Spectrum.SpectrumError("A must be square with one row per entry of v")
    if not np.allclose(A, A.T, rtol=0.0, atol=SYMMETRY_TOLERANCE):
        raise Spectrum.SpectrumError("A must be symmetric")
    if np.any(A < 0) or np.any(v < 0):
        raise Spectrum.SpectrumError("A and v must be non-negative")

    row_sums = A.sum(axis=1)
    scale = COMMUTE_TOLERANCE * max(1.0, float(np.abs(A).sum() * np.abs(v).max(initial=0.0)))
    identity1 = np.allclose(np.diag(v * row_sums), np.diag(v) @ np.diag(row_sums), rtol=0.0, atol=scale)
    identity2 = np.allclose(A @ v, v * row_sums, rtol=0.0, atol=scale)
    iff_condition = bool(np.all((A == 0) | (v[:, None] == v[None, :])))
    return DiagCommuteReport(
        identity1_holds=bool(identity1),
        iff_condition_holds=iff_condition,
        identity2_holds=bool(identity2),
    )
