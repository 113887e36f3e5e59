import logging
from typing import Union

import numpy as np
from pydantic import BaseModel, validator

from nugg.density.quadrature import integrate_1d
from nugg.errors import CapabilityError
from nugg.geometry.latent_space import LatentSpace, SpaceKind

logger = logging.getLogger(__name__)


class RadialLaw(BaseModel):
    """Radial factor of the uniform measure of a two-dimensional space."""

    class Config:
        frozen = True

    space: LatentSpace

    @validator("space")
    def _has_radius(cls, space: LatentSpace) -> LatentSpace:
        if space.is_circle:
            raise ValueError("the unit circle has no radial law")
        return space

    @property
    def upper(self) -> float:
        return self.space.radial_max

    def pdf(self, r: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        r = np.asarray(r, dtype=float)
        inside = (r >= 0) & (r <= self.upper)
        kind = self.space.kind
        if kind == SpaceKind.UNIT_DISK:
            value = 2.0 * r / self.upper**2
        elif kind == SpaceKind.SPHERE:
            value = np.sin(r) / 2.0
        else:
            value = np.sinh(r) / (np.cosh(self.upper) - 1.0)
        value = np.where(inside, value, 0.0)
        return float(value) if value.ndim == 0 else value

    def cdf(self, r: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        r = np.clip(np.asarray(r, dtype=float), 0.0, self.upper)
        kind = self.space.kind
        if kind == SpaceKind.UNIT_DISK:
            value = (r / self.upper) ** 2
        elif kind == SpaceKind.SPHERE:
            value = (1.0 - np.cos(r)) / 2.0
        else:
            value = (np.cosh(r) - 1.0) / (np.cosh(self.upper) - 1.0)
        return float(value) if value.ndim == 0 else value

    def inverse_cdf(self, u: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        u = np.clip(np.asarray(u, dtype=float), 0.0, 1.0)
        kind = self.space.kind
        if kind == SpaceKind.UNIT_DISK:
            value = self.upper * np.sqrt(u)
        elif kind == SpaceKind.SPHERE:
            value = np.arccos(1.0 - 2.0 * u)
        else:
            value = np.arccosh(1.0 + u * (np.cosh(self.upper) - 1.0))
        value = np.minimum(value, self.upper)
        return float(value) if value.ndim == 0 else value

    def sample(self, rng: np.random.Generator, count: int) -> np.ndarray:
        if count < 0:
            raise ValueError("count must be non-negative")
        return np.asarray(self.inverse_cdf(rng.random(count)), dtype=float)

    def breakpoints(self, rc: float, alpha: float) -> list:
        points = [abs(rc - alpha), rc + alpha]
        if self.space.kind == SpaceKind.SPHERE:
            points.append(2.0 * np.pi - rc - alpha)
        return [p for p in points if 0.0 < p < self.upper]

    def uniform_ball_mass(self, rc: float, alpha: float) -> float:
        """Normalized measure of the ball of radius alpha around radius rc, clipped to the space."""
        if alpha <= 0:
            return 0.0
        if self.space.kind == SpaceKind.SPHERE:
            return float(self.space.ball_measure(alpha, normalized=True))

        def integrand(r: float) -> float:
            return float(self.pdf(r)) * float(self.space.arc_half_width(r, rc, alpha)) / np.pi

        return min(1.0, integrate_1d(integrand, 0.0, self.upper, self.breakpoints(rc, alpha)))


def radial_law(space: LatentSpace) -> RadialLaw:
    if space.is_circle:
        raise CapabilityError("the unit circle has no radial law")
    return RadialLaw(space=space)
