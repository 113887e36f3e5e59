import logging
from collections import defaultdict
from typing import Dict, Tuple

import numpy as np
from scipy import special

from nugg.density.angular import (
    TWO_PI,
    MultimodalVonMises,
    SpectrallyBounded,
    angle_grid,
)

logger = logging.getLogger(__name__)


def _cosine_power(power: int) -> Dict[int, float]:
    """cos(x)^p = 2^-p sum_k C(p, k) cos((2k - p) x), keyed by |2k - p|."""
    terms: Dict[int, float] = defaultdict(float)
    k = np.arange(power + 1)
    # log-space binomial weights, 2^p overflows past p = 1023
    log_weights = (
        special.gammaln(power + 1)
        - special.gammaln(k + 1)
        - special.gammaln(power - k + 1)
        - power * np.log(2.0)
    )
    for index, weight in zip(k, np.exp(log_weights)):
        terms[abs(2 * int(index) - power)] += float(weight)
    return terms


def exponential_cosine_expansion(kappa: float, scaled: bool = False) -> Dict[int, float]:
    """Cosine-power surrogate of exp(kappa cos x), as harmonic coefficients keyed by
    frequency.

    Concentrations above 1 are rounded to an integer before the branch is chosen.
    With ``scaled`` the coefficients are those of exp(kappa cos x) / I0(kappa),
    finite for any concentration.
    """
    coefficients: Dict[int, float] = defaultdict(float)
    if kappa <= 1.0:
        even_power, odd_power, concentration = 2, 1, kappa
    else:
        rounded = int(np.rint(kappa))
        concentration = float(rounded)
        if rounded % 2 == 0:
            even_power, odd_power = rounded, rounded - 1
        else:
            even_power, odd_power = rounded - 1, rounded
        if rounded != kappa:
            logger.info("rounded concentration %g to %d", kappa, rounded)

    if scaled:
        # I0(kappa) = i0e(kappa) e^kappa, every exponent below is <= 1/2
        norm = float(special.i0e(kappa))
        grow = np.exp(concentration - kappa)
        shrink = np.exp(-concentration - kappa)
        constant = np.exp(-kappa) / norm
        even = (0.5 * (grow + shrink) - np.exp(-kappa)) / norm
        odd = 0.5 * (grow - shrink) / norm
    else:
        constant, even, odd = 1.0, np.cosh(concentration) - 1.0, np.sinh(concentration)

    coefficients[0] += float(constant)
    for frequency, weight in _cosine_power(even_power).items():
        coefficients[frequency] += float(even) * weight
    for frequency, weight in _cosine_power(odd_power).items():
        coefficients[frequency] += float(odd) * weight
    return dict(coefficients)


def mvm_to_sbrv(density: MultimodalVonMises) -> SpectrallyBounded:
    """Approximate a multimodal von Mises density by a finite cosine series.

    Constant parts of every expanded term go into the offset; the offset is
    raised when the surrogate dips below zero so the result stays a density.
    """
    constant = density.A
    harmonics: Dict[Tuple[int, float], float] = defaultdict(float)
    for c, n, mu, kappa in zip(density.c, density.n, density.mu, density.kappa):
        scale = c / TWO_PI
        if n == 0:
            constant += c / (TWO_PI * special.i0e(kappa))
            continue
        expansion = exponential_cosine_expansion(kappa, scaled=True)
        for frequency, weight in expansion.items():
            if frequency == 0:
                constant += scale * weight
            else:
                harmonics[(frequency * n, mu)] += scale * weight

    keys = sorted(key for key, value in harmonics.items() if value != 0.0)
    c = [float(harmonics[key]) for key in keys] or [0.0]
    n = [int(key[0]) for key in keys] or [0]
    mu = [float(key[1]) for key in keys] or [0.0]

    theta = angle_grid()
    phase = np.multiply.outer(theta, np.asarray(n, dtype=float)) - np.asarray(n) * np.asarray(mu)
    lowest = float(np.min(np.cos(phase) @ np.asarray(c) + constant))
    if lowest < 0:
        lift = -lowest * (1.0 + 1e-9)
        logger.warning(
            "cosine surrogate is negative (min %.3g), raising the offset by %.3g",
            lowest,
            lift,
        )
        constant += lift

    return SpectrallyBounded(c=c, n=n, mu=mu, offset=float(constant))


def von_mises_product(
    kappa1: float, mu1: float, kappa2: float, mu2: float, n: int
) -> Tuple[float, float, float]:
    """Product of two normalized von Mises kernels sharing the frequency n.

    Returns (kappa, location, log_scale) such that the product equals
    exp(log_scale + kappa cos(n (theta - location))).
    """
    if n < 1:
        raise ValueError("the product identity needs a positive frequency")
    kappa = np.sqrt(
        max(kappa1**2 + kappa2**2 + 2.0 * kappa1 * kappa2 * np.cos(n * (mu1 - mu2)), 0.0)
    )
    location = (
        np.arctan2(
            kappa1 * np.sin(n * mu1) + kappa2 * np.sin(n * mu2),
            kappa1 * np.cos(n * mu1) + kappa2 * np.cos(n * mu2),
        )
        / n
    )
    # log I0(k) = log i0e(k) + k
    log_scale = -2.0 * np.log(TWO_PI) - sum(
        np.log(special.i0e(k)) + k for k in (kappa1, kappa2)
    )
    return float(kappa), float(location), float(log_scale)
