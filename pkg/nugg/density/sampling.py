import logging

import numpy as np

from nugg.density.angular import TWO_PI, AngularDensity, angle_grid
from nugg.density.radial import RadialLaw
from nugg.errors import DomainError
from nugg.geometry.latent_space import canonical_angle

logger = logging.getLogger(__name__)

ENVELOPE_HEADROOM = 1.001
MIN_BATCH = 64


class AngleSampler:
    """Rejection sampler with a constant envelope over [-pi, pi)."""

    class AngleSamplerError(DomainError):
        pass

    @classmethod
    def envelope(cls, density: AngularDensity) -> float:
        peak = float(np.max(density.pdf(angle_grid())))
        if not np.isfinite(peak) or peak <= 1e-300:
            raise AngleSampler.AngleSamplerError(
                "density is degenerate, its maximum is not positive"
            )
        return peak * ENVELOPE_HEADROOM

    @classmethod
    def sample(
        cls, density: AngularDensity, rng: np.random.Generator, count: int
    ) -> np.ndarray:
        if count < 0:
            raise ValueError("count must be non-negative")
        envelope = cls.envelope(density)
        if count == 0:
            return np.empty(0)

        acceptance = 1.0 / (TWO_PI * envelope)
        accepted = []
        remaining = count
        rounds = 0
        while remaining > 0:
            batch = max(MIN_BATCH, int(np.ceil(1.1 * remaining / acceptance)))
            theta = rng.uniform(-np.pi, np.pi, batch)
            height = rng.uniform(0.0, envelope, batch)
            kept = theta[height < density.pdf(theta)][:remaining]
            accepted.append(kept)
            remaining -= kept.size
            rounds += 1

        logger.debug(
            "drew %d angles in %d rounds (acceptance %.3f)", count, rounds, acceptance
        )
        return np.asarray(canonical_angle(np.concatenate(accepted)), dtype=float)


def sample_angle(density: AngularDensity, rng: np.random.Generator, count: int) -> np.ndarray:
    return AngleSampler.sample(density, rng, count)


def sample_radius(law: RadialLaw, rng: np.random.Generator, count: int) -> np.ndarray:
    return law.sample(rng, count)
