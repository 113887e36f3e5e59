import logging
from enum import Enum
from typing import Callable, Optional, Union

import numpy as np

from nugg.density.angular import (
    AngularDensity,
    MultimodalVonMises,
    SpectrallyBounded,
)
from nugg.density.approximation import mvm_to_sbrv
from nugg.density.chebyshev import sin_multiple
from nugg.density.quadrature import (
    integrate_1d,
    integrate_vector,
    panel_rule,
    periodic_trapezoid,
)
from nugg.density.radial import RadialLaw
from nugg.errors import CapabilityError, DomainError
from nugg.geometry.latent_space import LatentSpace, Point, SpaceKind

logger = logging.getLogger(__name__)

# outer rule of the numerical average degree
RADIAL_ORDER = 16
ANGULAR_ORDER = 32
CIRCLE_ORDER = 256


class Method(str, Enum):
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"


def as_sbrv(density: AngularDensity) -> SpectrallyBounded:
    if isinstance(density, SpectrallyBounded):
        return density
    if isinstance(density, MultimodalVonMises):
        logger.info("closed form on a von Mises density goes through its cosine surrogate")
        return mvm_to_sbrv(density)
    raise CapabilityError(f"no closed form for {type(density).__name__}")


class BallProbability:
    """nu-probability of geodesic balls, by closed form or by quadrature."""

    @classmethod
    def _check_alpha(cls, alpha: float) -> None:
        if not np.isfinite(alpha) or alpha < 0:
            raise DomainError("ball radius must be a finite non-negative number")

    @classmethod
    def _center(cls, space: LatentSpace, center: Point):
        if not space.is_circle and center.r is None:
            raise DomainError(f"{space.kind.value} points need a radial coordinate")
        theta, r = space.validate_coordinates(
            [center.theta], None if space.is_circle else [center.r]
        )
        return float(theta[0]), float(r[0])

    @classmethod
    def closed_form(
        cls,
        space: LatentSpace,
        density: AngularDensity,
        center: Point,
        alpha: float,
    ) -> float:
        cls._check_alpha(alpha)
        if space.kind == SpaceKind.SPHERE:
            raise CapabilityError("no closed-form ball probability on the sphere")
        theta_c, r_c = cls._center(space, center)
        sbrv = as_sbrv(density)

        if space.kind == SpaceKind.UNIT_CIRCLE:
            return float(sbrv.arc_mass(theta_c, min(alpha, np.pi)))
        if space.kind == SpaceKind.UNIT_DISK:
            return cls._disk_closed_form(sbrv, theta_c, r_c, alpha)
        return cls._hyperbolic_closed_form(space, sbrv, theta_c, r_c, alpha)

    @classmethod
    def _disk_closed_form(
        cls, sbrv: SpectrallyBounded, theta_c: float, r_c: float, alpha: float
    ) -> float:
        """Ellipse approximation of the slice integrals, covering centers near the
        origin and balls crossing the boundary."""
        if alpha == 0:
            return 0.0
        if alpha >= 1.0 + r_c:
            return 1.0
        if r_c <= 1e-12:
            return min(alpha, 1.0) ** 2

        def cos_width(r: float) -> float:
            return float(np.clip((r**2 + r_c**2 - alpha**2) / (2.0 * r * r_c), -1.0, 1.0))

        lower, upper = min(alpha, r_c), max(alpha, r_c)
        crosses_boundary = r_c + alpha > 1.0
        gap = min(1.0, (1.0 - r_c) / alpha)

        def ellipse(height: Callable[[float], float]) -> float:
            value = 0.5 * np.pi * lower * height(upper)
            if crosses_boundary:
                value -= (
                    0.5
                    * height(r_c)
                    * (alpha * np.arccos(gap) - gap * np.sqrt(max(alpha**2 - (1.0 - r_c) ** 2, 0.0)))
                )
            return value

        harmonic = 0.0
        for c, n, mu in zip(sbrv.c, sbrv.n, sbrv.mu):
            if n == 0:
                continue
            slice_height = lambda r, n=n: r * float(sin_multiple(n, cos_width(r)))  # noqa: E731
            harmonic += c / n * np.cos(n * (theta_c - mu)) * ellipse(slice_height)

        constant = sbrv.K * ellipse(lambda r: r * float(np.arccos(cos_width(r))))
        probability = 4.0 / sbrv.B * (harmonic + constant) + max(0.0, alpha - r_c) ** 2
        return float(np.clip(probability, 0.0, 1.0))

    @classmethod
    def _hyperbolic_closed_form(
        cls,
        space: LatentSpace,
        sbrv: SpectrallyBounded,
        theta_c: float,
        r_c: float,
        alpha: float,
    ) -> float:
        if alpha == 0:
            return 0.0
        probability = 8.0 * np.exp((alpha - space.R - r_c) / 2.0) * sbrv.pdf(theta_c)
        return float(min(probability, 1.0))

    @classmethod
    def quadrature(
        cls,
        space: LatentSpace,
        density: AngularDensity,
        center: Point,
        alpha: float,
    ) -> float:
        cls._check_alpha(alpha)
        theta_c, r_c = cls._center(space, center)
        if alpha == 0:
            return 0.0

        if space.is_circle:
            if alpha >= np.pi:
                return 1.0
            return integrate_1d(density.pdf, theta_c - alpha, theta_c + alpha)

        if alpha >= space.diameter:
            return 1.0
        law = RadialLaw(space=space)

        def integrand(r: float) -> float:
            width = float(space.arc_half_width(r, r_c, alpha))
            if width <= 0:
                return 0.0
            return float(law.pdf(r)) * float(density.arc_mass(theta_c, width))

        probability = integrate_1d(integrand, 0.0, law.upper, law.breakpoints(r_c, alpha))
        return float(np.clip(probability, 0.0, 1.0))

    @classmethod
    def ring(
        cls,
        space: LatentSpace,
        density: AngularDensity,
        r_c: float,
        theta_c: np.ndarray,
        alpha: float,
    ) -> np.ndarray:
        """Quadrature ball probabilities for many centers sharing the radius r_c."""
        theta_c = np.asarray(theta_c, dtype=float)
        if alpha == 0:
            return np.zeros_like(theta_c)
        if space.is_circle:
            return np.asarray(density.arc_mass(theta_c, min(alpha, np.pi)), dtype=float)
        if alpha >= space.diameter:
            return np.ones_like(theta_c)
        law = RadialLaw(space=space)

        def integrand(r: float) -> np.ndarray:
            width = float(space.arc_half_width(r, r_c, alpha))
            if width <= 0:
                return np.zeros_like(theta_c)
            return float(law.pdf(r)) * np.asarray(density.arc_mass(theta_c, width))

        values = integrate_vector(integrand, 0.0, law.upper, law.breakpoints(r_c, alpha))
        return np.clip(values, 0.0, 1.0)


def ball_probability(
    space: LatentSpace,
    density: AngularDensity,
    center: Point,
    alpha: float,
    method: Union[Method, str] = Method.QUADRATURE,
) -> float:
    method = Method(method)
    if method == Method.CLOSED_FORM:
        return BallProbability.closed_form(space, density, center, alpha)
    return BallProbability.quadrature(space, density, center, alpha)


def expected_degree(
    space: LatentSpace,
    density: AngularDensity,
    p: Point,
    alpha: float,
    N: int,
    method: Union[Method, str] = Method.CLOSED_FORM,
) -> float:
    return N * ball_probability(space, density, p, alpha, method)


def expected_average_degree(
    space: LatentSpace,
    density: AngularDensity,
    alpha: float,
    N: int,
    method: Union[Method, str] = Method.CLOSED_FORM,
) -> float:
    method = Method(method)
    BallProbability._check_alpha(alpha)
    if alpha == 0:
        return 0.0
    if method == Method.QUADRATURE:
        return N * _average_ball_probability(space, density, alpha)

    if space.kind == SpaceKind.SPHERE:
        raise CapabilityError("no closed-form average degree on the sphere")
    sbrv = as_sbrv(density)
    constant = 2.0 * sbrv.K**2

    if space.kind == SpaceKind.UNIT_CIRCLE:
        a = min(alpha, np.pi)
        harmonics = sbrv.paired_harmonics(lambda n: np.sinc(n * a / np.pi))
        return 2.0 * np.pi * N * a / sbrv.B**2 * (harmonics + constant)

    harmonics = sbrv.paired_harmonics(np.ones_like)
    if space.kind == SpaceKind.UNIT_DISK:
        return 2.0 * np.pi**2 * alpha**2 * N / sbrv.B**2 * (harmonics + constant)
    return (
        16.0
        * np.pi
        * N
        * np.exp((alpha - 2.0 * space.R) / 2.0)
        / sbrv.B**2
        * (harmonics + constant)
    )


def _average_ball_probability(
    space: LatentSpace, density: AngularDensity, alpha: float
) -> float:
    """E_nu[P(ball(X, alpha))] by a product rule: Gauss-Legendre panels in r split at the
    ball radius and the trapezoid rule in theta."""
    if space.is_circle:
        theta, weights = periodic_trapezoid(CIRCLE_ORDER)
        ring = BallProbability.ring(space, density, 0.0, theta, alpha)
        return float(np.sum(weights * density.pdf(theta) * ring))

    law = RadialLaw(space=space)
    upper = law.upper
    breakpoints = [0.0, upper] + [p for p in (alpha, upper - alpha) if 0.0 < p < upper]
    radii, radial_weights = panel_rule(breakpoints, RADIAL_ORDER)
    theta, angular_weights = periodic_trapezoid(ANGULAR_ORDER)
    angular = angular_weights * density.pdf(theta)

    total = 0.0
    for r, weight in zip(radii, radial_weights):
        ring = BallProbability.ring(space, density, float(r), theta, alpha)
        total += weight * float(law.pdf(r)) * float(np.sum(angular * ring))
    return total


def sbrv_small_ball_bound(density: SpectrallyBounded, alpha: float) -> float:
    """Bound on |pdf(theta) - P(ball(theta, alpha)) / (2 alpha)| on the circle."""
    n = np.asarray(density.n, dtype=float)
    c = np.abs(np.asarray(density.c, dtype=float))
    return float(np.sum(n**2 * c) / (6.0 * abs(density.B)) * alpha**2)


def disk_average_g_integral(alpha: float) -> float:
    """int_0^1 r I[g](r) dr for the ellipse-approximated constant slice term."""
    return float(
        np.pi * alpha / 24.0 * (alpha * np.sqrt(4.0 - alpha**2) + 4.0 * np.arccos(1.0 - alpha**2 / 2.0))
        + np.pi * alpha**4 / 48.0 * (np.log(2.0 + np.sqrt(4.0 - alpha**2)) - np.log(alpha))
    )


def point_on(space: LatentSpace, theta: float, r: Optional[float] = None) -> Point:
    return Point(theta=theta, r=None if space.is_circle else r)
