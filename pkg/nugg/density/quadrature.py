import logging
import warnings
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

from nugg.utils.settings import get_settings

logger = logging.getLogger(__name__)


def integrate_1d(
    f: Callable[[float], float],
    a: float,
    b: float,
    points: Optional[Sequence[float]] = None,
) -> float:
    """Adaptive Gauss-Kronrod quadrature (QUADPACK) with the configured tolerances."""
    if b <= a:
        return 0.0
    settings = get_settings()
    inner = None
    if points is not None:
        inner = sorted({float(p) for p in points if a < p < b})
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        value, error = integrate.quad(
            f,
            a,
            b,
            points=inner or None,
            epsabs=settings.quad_epsabs,
            epsrel=settings.quad_epsrel,
            limit=settings.quad_limit,
        )
    for warning in caught:
        if issubclass(warning.category, integrate.IntegrationWarning):
            logger.warning(
                "quadrature on [%g, %g] did not reach tolerance (error estimate %.3g)",
                a,
                b,
                error,
            )
            break
    return float(value)


def gauss_legendre(a: float, b: float, order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the Gauss-Legendre rule mapped onto [a, b]."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    half = 0.5 * (b - a)
    return half * nodes + 0.5 * (a + b), half * weights


def panel_rule(
    breakpoints: Sequence[float], order: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre rule over consecutive breakpoint panels."""
    edges = sorted(set(float(p) for p in breakpoints))
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        if hi - lo <= 0:
            continue
        x, w = gauss_legendre(lo, hi, order)
        nodes.append(x)
        weights.append(w)
    if not nodes:
        return np.empty(0), np.empty(0)
    return np.concatenate(nodes), np.concatenate(weights)


def periodic_trapezoid(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Equispaced rule on [-pi, pi), spectrally accurate for smooth periodic integrands."""
    nodes = np.linspace(-np.pi, np.pi, order, endpoint=False)
    return nodes, np.full(order, 2.0 * np.pi / order)


def integrate_vector(
    f: Callable[[float], np.ndarray],
    a: float,
    b: float,
    points: Optional[Sequence[float]] = None,
    tolerance: float = 1e-10,
) -> np.ndarray:
    """Adaptive quadrature of a vector-valued integrand, one subdivision for all components."""
    inner = None
    if points is not None:
        inner = sorted({float(p) for p in points if a < p < b}) or None
    value, _ = integrate.quad_vec(
        f, a, b, epsabs=tolerance, epsrel=tolerance, points=inner
    )
    return np.asarray(value, dtype=float)
