import logging
import os
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel
from scipy import stats

from nugg.convergence.continuous_model import ContinuousLaplacian
from nugg.convergence.signals import TestSignal
from nugg.density.angular import AngularDensity
from nugg.errors import DomainError
from nugg.estimate.density_estimator import estimate_density
from nugg.geometry.latent_space import LatentSpace
from nugg.graphgen.generator import generate
from nugg.graphgen.hub_config import HubConfig
from nugg.graphgen.neighborhood import NeighborhoodModel, neighborhood_volumes
from nugg.gso.builder import build_gso_sparse
from nugg.gso.modulation import GsoSpec
from nugg.gso.presets import resolve_spec
from nugg.utils.artifacts import PathLike, write_csv, write_json
from nugg.utils.settings import get_settings

logger = logging.getLogger(__name__)

PROBE_COUNT = 64
MIN_TRIALS = 5
TRIAL_COLUMNS = ["N", "trial", "mse", "sup_err"]


class RhoMode(str, Enum):
    TRUE = "true"
    IGNORE = "ignore"
    ESTIMATE = "estimate"


class TrialResult(BaseModel):
    N: int
    trial: int
    seed: int
    mse: float
    sup_err: float
    edges: int
    mean_degree: float


class ConvergenceReport(BaseModel):
    N_grid: List[int]
    trials: int
    p: float
    mse: List[float]
    mse_median: List[float]
    sup_err: List[float]
    sup_ratio: List[float]
    sup_trend: Optional[float]
    fitted_slope: Optional[float]
    results: List[TrialResult]
    config: Dict[str, Any] = {}

    def rows(self) -> List[List[Any]]:
        return [[r.N, r.trial, r.mse, r.sup_err] for r in self.results]

    def write_json(self, path: PathLike) -> Path:
        return write_json(path, self.dict())

    def write_csv(self, path: PathLike) -> Path:
        return write_csv(path, TRIAL_COLUMNS, self.rows())


def trial_seed(master_seed: int, N: int, trial: int) -> int:
    """Per-trial generator seed derived from (master seed, N, trial)."""
    state = np.random.SeedSequence([master_seed, N, trial]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def fit_slope(N_grid: Sequence[int], mse: Sequence[float]) -> Optional[float]:
    """Least-squares slope of log(mse) against log(N), None when some mse is not positive."""
    mse = np.asarray(mse, dtype=float)
    if len(N_grid) < 2 or not np.all(mse > 0):
        return None
    slope, _ = np.polyfit(np.log(np.asarray(N_grid, dtype=float)), np.log(mse), 1)
    return float(slope)


def sup_rate(N: int, p: float) -> float:
    return float(np.sqrt((np.log(1.0 / p) + np.log(N)) / N))


class ConvergenceRunner:
    class ConvergenceRunnerError(DomainError):
        pass

    @classmethod
    def validate(cls, N_grid: Sequence[int], trials: int, p: float) -> None:
        if not N_grid:
            raise ConvergenceRunner.ConvergenceRunnerError("the N grid is empty")
        if any(b <= a for a, b in zip(N_grid, N_grid[1:])):
            raise ConvergenceRunner.ConvergenceRunnerError("the N grid must be increasing")
        if N_grid[0] < 2:
            raise ConvergenceRunner.ConvergenceRunnerError("graphs need at least two nodes")
        if trials < MIN_TRIALS:
            raise ConvergenceRunner.ConvergenceRunnerError(f"at least {MIN_TRIALS} trials are needed")
        if not 0 < p < 1:
            raise ConvergenceRunner.ConvergenceRunnerError("p must lie in (0, 1)")

    @classmethod
    def graph_density(cls, g, mode: RhoMode) -> np.ndarray:
        if mode == RhoMode.TRUE:
            return g.rho_true
        if mode == RhoMode.IGNORE:
            return np.ones(g.N)
        estimate = estimate_density(g, neighborhood_volumes(g))
        # isolated nodes have no estimate and no edges to weight
        return np.where(estimate.undefined, 1.0, estimate.rho_hat)

    @classmethod
    def run_trial(
        cls,
        space: LatentSpace,
        density: AngularDensity,
        template: HubConfig,
        N: int,
        trial: int,
        master_seed: int,
        spec: GsoSpec,
        u: TestSignal,
        rho_mode: RhoMode,
        probes: int,
        weighted: bool = False,
    ) -> TrialResult:
        seed = trial_seed(master_seed, N, trial)
        config = HubConfig(
            N=N, m=template.m, alpha=template.alpha, beta=template.beta, epsilon=template.epsilon, seed=seed
        )
        g = generate(space, density, config)
        L = build_gso_sparse(g.adjacency(), cls.graph_density(g, rho_mode), spec)
        discrete = L @ u(g.theta, g.r)

        index = np.arange(min(probes, g.N))
        model = ContinuousLaplacian(
            space=space, neighborhood=NeighborhoodModel.from_graph(g), spec=spec, density=density, weighted=weighted
        )
        continuous = model.apply_many(u, g.theta[index], None if space.is_circle else g.r[index])
        error = discrete[index] - continuous
        result = TrialResult(
            N=N,
            trial=trial,
            seed=seed,
            mse=float(np.mean(error**2)),
            sup_err=float(np.max(np.abs(error))),
            edges=g.edge_count,
            mean_degree=2.0 * g.edge_count / g.N,
        )
        logger.debug("trial N=%d #%d: mse=%.3g sup=%.3g", N, trial, result.mse, result.sup_err)
        return result

    @classmethod
    def run(
        cls,
        space: LatentSpace,
        density: AngularDensity,
        N_grid: Sequence[int],
        trials: int,
        spec: Union[GsoSpec, str],
        u: TestSignal,
        p: float = 0.05,
        alpha: Union[float, str] = 0.1,
        m: int = 0,
        beta: Optional[float] = None,
        epsilon: Optional[float] = None,
        rho_mode: Union[RhoMode, str] = RhoMode.TRUE,
        seed: int = 0,
        probes: int = PROBE_COUNT,
        threads: Optional[int] = None,
        weighted: bool = False,
        config: Optional[Dict[str, Any]] = None,
    ) -> ConvergenceReport:
        N_grid = [int(n) for n in N_grid]
        cls.validate(N_grid, trials, p)
        spec = resolve_spec(spec)
        rho_mode = RhoMode(rho_mode)
        template = HubConfig(N=N_grid[0], m=m, alpha=alpha, beta=beta, epsilon=epsilon, seed=seed)
        workers = threads or get_settings().threads or os.cpu_count() or 1

        jobs = [(N, trial) for N in N_grid for trial in range(trials)]
        logger.info(
            "convergence run: %d graphs, spec %s, rho=%s, %d workers", len(jobs), spec, rho_mode.value, workers
        )
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(
                    cls.run_trial, space, density, template, N, trial, seed, spec, u, rho_mode, probes, weighted
                )
                for N, trial in jobs
            ]
            results = [future.result() for future in futures]

        mse, mse_median, sup_err, sup_ratio = [], [], [], []
        for N in N_grid:
            trial_mse = np.array([r.mse for r in results if r.N == N])
            trial_sup = np.array([r.sup_err for r in results if r.N == N])
            mse.append(float(np.mean(trial_mse)))
            mse_median.append(float(np.median(trial_mse)))
            # the error level exceeded with probability about p
            sup_err.append(float(np.quantile(trial_sup, 1.0 - p)))
            sup_ratio.append(sup_err[-1] / sup_rate(N, p))

        sup_trend = None
        if len(N_grid) > 2 and np.ptp(sup_ratio) > 0:
            sup_trend = float(stats.spearmanr(N_grid, sup_ratio).correlation)
        slope = fit_slope(N_grid, mse)
        if slope is None:
            logger.warning("mse vanishes on part of the grid, no slope fitted")
        else:
            logger.info("fitted mse slope %.3f", slope)

        return ConvergenceReport(
            N_grid=N_grid,
            trials=trials,
            p=p,
            mse=mse,
            mse_median=mse_median,
            sup_err=sup_err,
            sup_ratio=sup_ratio,
            sup_trend=sup_trend,
            fitted_slope=slope,
            results=results,
            config=config or {},
        )


def run_convergence(
    space: LatentSpace,
    density: AngularDensity,
    N_grid: Sequence[int],
    trials: int,
    spec: Union[GsoSpec, str],
    u: TestSignal,
    p: float = 0.05,
    **kwargs: Any,
) -> ConvergenceReport:
    return ConvergenceRunner.run(space, density, N_grid, trials, spec, u, p, **kwargs)
