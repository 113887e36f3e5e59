import logging
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, root_validator, validator

from nugg.errors import CapabilityError, DomainError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

TWO_PI = 2.0 * np.pi

# slack for radial coordinates produced by inverse-cdf sampling
RADIAL_TOLERANCE = 1e-12


def canonical_angle(theta: ArrayLike) -> ArrayLike:
    """Reduce angles into [-pi, pi)."""
    reduced = np.mod(np.asarray(theta, dtype=float) + np.pi, TWO_PI) - np.pi
    reduced = np.where(reduced >= np.pi, reduced - TWO_PI, reduced)
    if reduced.ndim == 0:
        return float(reduced)
    return reduced


class SpaceKind(str, Enum):
    UNIT_CIRCLE = "s1"
    UNIT_DISK = "disk"
    SPHERE = "sphere"
    HYPERBOLIC_DISK = "hyperbolic"


class Point(BaseModel):
    class Config:
        frozen = True

    theta: float
    r: Optional[float] = None

    @validator("theta")
    def _canonical_theta(cls, value: float) -> float:
        if not np.isfinite(value):
            raise ValueError("angular coordinate must be finite")
        return float(canonical_angle(value))


class LatentSpace(BaseModel):
    """Metric-probability space in polar coordinates.

    The radial coordinate is the distance from the origin for the disks and
    the colatitude for the sphere. The unit circle has no radial coordinate.
    """

    class Config:
        frozen = True

    kind: SpaceKind
    R: Optional[float] = None

    @root_validator(skip_on_failure=True)
    def _resolve_radius(cls, values: dict) -> dict:
        kind = values["kind"]
        R = values.get("R")
        if kind == SpaceKind.UNIT_DISK:
            if R is not None and R != 1.0:
                raise ValueError("the unit disk has R fixed to 1")
            values["R"] = 1.0
        elif kind == SpaceKind.HYPERBOLIC_DISK:
            if R is None or not np.isfinite(R) or R <= 0:
                raise ValueError("the hyperbolic disk requires R > 0")
        else:
            values["R"] = None
        return values

    @classmethod
    def unit_circle(cls) -> "LatentSpace":
        return cls(kind=SpaceKind.UNIT_CIRCLE)

    @classmethod
    def unit_disk(cls) -> "LatentSpace":
        return cls(kind=SpaceKind.UNIT_DISK)

    @classmethod
    def sphere(cls) -> "LatentSpace":
        return cls(kind=SpaceKind.SPHERE)

    @classmethod
    def hyperbolic_disk(cls, R: float) -> "LatentSpace":
        return cls(kind=SpaceKind.HYPERBOLIC_DISK, R=R)

    @property
    def is_circle(self) -> bool:
        return self.kind == SpaceKind.UNIT_CIRCLE

    @property
    def radial_max(self) -> float:
        if self.kind == SpaceKind.UNIT_CIRCLE:
            return 0.0
        if self.kind == SpaceKind.SPHERE:
            return float(np.pi)
        return float(self.R)

    @property
    def diameter(self) -> float:
        if self.kind in (SpaceKind.UNIT_CIRCLE, SpaceKind.SPHERE):
            return float(np.pi)
        return 2.0 * float(self.R)

    @property
    def total_measure(self) -> float:
        if self.kind == SpaceKind.UNIT_CIRCLE:
            return TWO_PI
        if self.kind == SpaceKind.UNIT_DISK:
            return float(np.pi)
        if self.kind == SpaceKind.SPHERE:
            return 4.0 * np.pi
        return TWO_PI * (np.cosh(self.R) - 1.0)

    def validate_coordinates(
        self, theta: ArrayLike, r: Optional[ArrayLike] = None
    ) -> Tuple[np.ndarray, np.ndarray]:
        theta = np.asarray(theta, dtype=float)
        if not np.all(np.isfinite(theta)):
            raise DomainError("angular coordinates must be finite")
        theta = np.asarray(canonical_angle(theta), dtype=float)

        if self.is_circle:
            return theta, np.zeros_like(theta)

        if r is None:
            raise DomainError(f"{self.kind.value} points need a radial coordinate")
        r = np.asarray(r, dtype=float)
        upper = self.radial_max * (1.0 + RADIAL_TOLERANCE)
        if not np.all(np.isfinite(r)) or np.any(r < 0) or np.any(r > upper):
            raise DomainError(
                f"radial coordinate outside [0, {self.radial_max}] for {self.kind.value}"
            )
        return theta, np.minimum(r, self.radial_max)

    def distance(
        self,
        theta1: ArrayLike,
        r1: Optional[ArrayLike],
        theta2: ArrayLike,
        r2: Optional[ArrayLike],
    ) -> np.ndarray:
        """Geodesic distance between canonical coordinates, broadcasting."""
        delta = np.abs(np.asarray(theta1, dtype=float) - np.asarray(theta2, dtype=float))
        if self.is_circle:
            return np.pi - np.abs(np.pi - delta)

        r1 = np.asarray(r1, dtype=float)
        r2 = np.asarray(r2, dtype=float)
        half_sin2 = np.sin(delta / 2.0) ** 2

        if self.kind == SpaceKind.UNIT_DISK:
            squared = (r1 - r2) ** 2 + 4.0 * r1 * r2 * half_sin2
            return np.sqrt(np.maximum(squared, 0.0))

        if self.kind == SpaceKind.SPHERE:
            haversine = np.sin((r1 - r2) / 2.0) ** 2 + np.sin(r1) * np.sin(r2) * half_sin2
            return 2.0 * np.arcsin(np.sqrt(np.clip(haversine, 0.0, 1.0)))

        # sinh^2(d/2) form of the hyperbolic law of cosines, never below 0
        half_sinh2 = np.sinh((r1 - r2) / 2.0) ** 2 + np.sinh(r1) * np.sinh(r2) * half_sin2
        return 2.0 * np.arcsinh(np.sqrt(np.maximum(half_sinh2, 0.0)))

    def point_distance(self, p: Point, q: Point) -> float:
        theta, r = self.validate_coordinates(
            np.array([p.theta, q.theta]),
            None if self.is_circle else np.array([p.r, q.r], dtype=float),
        )
        return float(self.distance(theta[0], r[0], theta[1], r[1]))

    def ball_measure(self, alpha: ArrayLike, normalized: bool = False) -> ArrayLike:
        alpha_arr = np.asarray(alpha, dtype=float)
        if np.any(alpha_arr < 0) or not np.all(np.isfinite(alpha_arr)):
            raise DomainError("ball radius must be a finite non-negative number")

        if self.kind == SpaceKind.UNIT_CIRCLE:
            raw = 2.0 * np.minimum(alpha_arr, np.pi)
        elif self.kind == SpaceKind.UNIT_DISK:
            raw = np.pi * alpha_arr**2
        elif self.kind == SpaceKind.SPHERE:
            raw = TWO_PI * (1.0 - np.cos(np.minimum(alpha_arr, np.pi)))
        else:
            raw = TWO_PI * (np.cosh(alpha_arr) - 1.0)

        value = np.minimum(raw / self.total_measure, 1.0) if normalized else raw
        if value.ndim == 0:
            return float(value)
        return value

    def arc_half_width(self, r: ArrayLike, rc: float, alpha: float) -> np.ndarray:
        """Angular half-width of the ball slice at radius r.

        Points (r, theta) with |theta - theta_c| <= half-width lie within alpha of
        the center (rc, theta_c). The result is pi when the whole circle of radius
        r is inside the ball and 0 when it misses the ball.
        """
        if self.is_circle:
            raise CapabilityError("the unit circle has no radial slices")
        r = np.asarray(r, dtype=float)
        d_min = np.abs(r - rc)
        if self.kind == SpaceKind.SPHERE:
            d_max = np.minimum(r + rc, TWO_PI - r - rc)
        else:
            d_max = r + rc

        with np.errstate(divide="ignore", invalid="ignore"):
            if self.kind == SpaceKind.UNIT_DISK:
                cos_width = (r**2 + rc**2 - alpha**2) / (2.0 * r * rc)
            elif self.kind == SpaceKind.SPHERE:
                cos_width = (np.cos(alpha) - np.cos(r) * np.cos(rc)) / (
                    np.sin(r) * np.sin(rc)
                )
            else:
                cos_width = (np.cosh(r) * np.cosh(rc) - np.cosh(alpha)) / (
                    np.sinh(r) * np.sinh(rc)
                )
            width = np.arccos(np.clip(np.nan_to_num(cos_width, nan=1.0), -1.0, 1.0))

        width = np.where(alpha >= d_max, np.pi, width)
        return np.where(alpha < d_min, 0.0, width)

    def embed(self, theta: np.ndarray, r: np.ndarray) -> np.ndarray:
        """Cartesian embedding whose euclidean distance is monotone in the geodesic one."""
        if self.kind == SpaceKind.UNIT_CIRCLE:
            return np.column_stack([np.cos(theta), np.sin(theta)])
        if self.kind == SpaceKind.UNIT_DISK:
            return np.column_stack([r * np.cos(theta), r * np.sin(theta)])
        if self.kind == SpaceKind.SPHERE:
            return np.column_stack(
                [np.sin(r) * np.cos(theta), np.sin(r) * np.sin(theta), np.cos(r)]
            )
        raise CapabilityError("no monotone euclidean embedding for the hyperbolic disk")

    def embedded_radius(self, alpha: float) -> float:
        if self.kind == SpaceKind.UNIT_DISK:
            return float(alpha)
        return float(2.0 * np.sin(min(alpha, np.pi) / 2.0))


def distance(space: LatentSpace, p: Point, q: Point) -> float:
    return space.point_distance(p, q)


def ball_measure(space: LatentSpace, alpha: float, normalized: bool = False) -> float:
    return float(space.ball_measure(alpha, normalized=normalized))
