import logging
from typing import List, Optional

import numpy as np
from pydantic import BaseModel

from nugg.convergence.signals import SignalKind, TestSignal
from nugg.density.angular import AngularDensity
from nugg.density.quadrature import gauss_legendre, integrate_1d
from nugg.density.radial import RadialLaw
from nugg.errors import CapabilityError
from nugg.geometry.latent_space import TWO_PI, LatentSpace, Point
from nugg.graphgen.neighborhood import NeighborhoodModel
from nugg.gso.modulation import GsoSpec, Modulation, ModulationKind
from nugg.gso.presets import resolve_spec

logger = logging.getLogger(__name__)

# Gauss-Legendre nodes of the angular slice integrals on two-dimensional spaces
ANGULAR_ORDER = 64

CONSTANT_MODULATIONS = {
    ModulationKind.ZERO: 0.0,
    ModulationKind.ONE: 1.0,
    ModulationKind.NEG_ONE: -1.0,
}


def _constant(modulation: Modulation) -> Optional[float]:
    return CONSTANT_MODULATIONS.get(modulation.kind)


def _at(modulation: Modulation, value: float) -> float:
    return float(modulation(np.array([value]))[0])


class ContinuousLaplacian(BaseModel):
    """Continuous operator the sampled GSO approximates:

        (L u)(x) = m1(V(x)) int_{N(x)} m2(V(y)) u(y) dmu(y) - m3(V(x)) u(x) int_{N(x)} m4(V(y)) dmu(y)

    with V(x) = mu(N(x)). With weighted=True every mu is replaced by nu = rho mu,
    the limit of the operator built without density correction.
    """

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    class ContinuousLaplacianError(CapabilityError):
        pass

    space: LatentSpace
    neighborhood: NeighborhoodModel
    spec: GsoSpec
    density: Optional[AngularDensity] = None
    weighted: bool = False

    def _check(self, u: TestSignal) -> None:
        if self.weighted and self.density is None:
            raise ContinuousLaplacian.ContinuousLaplacianError("the weighted operator needs a density")
        if self.space.is_circle and u.kind == SignalKind.RADIAL_POLY and not u.is_constant:
            raise ContinuousLaplacian.ContinuousLaplacianError("radial signals are undefined on the unit circle")
        if not self.space.is_circle:
            if self.neighborhood.has_hubs:
                raise ContinuousLaplacian.ContinuousLaplacianError(
                    "hub neighborhoods are only integrated on the unit circle"
                )
            if self.weighted and not self._constant_outer_weights():
                raise ContinuousLaplacian.ContinuousLaplacianError(
                    "weighted operators with degree-dependent m2 or m4 need the unit circle"
                )

    def _constant_outer_weights(self) -> bool:
        return _constant(self.spec.m2) is not None and _constant(self.spec.m4) is not None

    def apply(self, u: TestSignal, x: Point) -> float:
        self._check(u)
        if self.space.is_circle:
            return self._apply_circle(u, float(x.theta))
        if x.r is None:
            raise ContinuousLaplacian.ContinuousLaplacianError(
                f"{self.space.kind.value} points need a radial coordinate"
            )
        return self._apply_radial(u, float(x.theta), float(x.r))

    def apply_many(self, u: TestSignal, theta: np.ndarray, r: Optional[np.ndarray] = None) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        radial = np.zeros_like(theta) if r is None else np.asarray(r, dtype=float)
        points = [
            Point(theta=t) if self.space.is_circle else Point(theta=t, r=s)
            for t, s in zip(theta, radial)
        ]
        return np.array([self.apply(u, p) for p in points], dtype=float)

    # unit circle

    def _circle_weight(self, y: float) -> float:
        if self.weighted:
            return float(self.density.rho(y))
        return 1.0

    def _circle_volume(self, theta: float) -> float:
        if not self.weighted:
            return float(self.neighborhood.volumes(np.array([theta]))[0])
        total = 0.0
        for a, b in self.neighborhood.arcs(theta):
            total += float(self.density.arc_mass(0.5 * (a + b), 0.5 * (b - a)))
        return min(total, 1.0)

    def _circle_breakpoints(self, a: float, b: float) -> List[float]:
        if not self.neighborhood.has_hubs:
            return []
        reach = self.neighborhood.alpha + self.neighborhood.beta
        eps = self.neighborhood.epsilon
        points = []
        for seed in self.neighborhood.seed_theta:
            for offset in (-eps, eps, -eps - reach, -eps + reach, eps - reach, eps + reach):
                for shift in (-TWO_PI, 0.0, TWO_PI):
                    p = float(seed) + offset + shift
                    if a < p < b:
                        points.append(p)
        return points

    def _circle_integral(self, theta: float, modulation: Modulation, u: Optional[TestSignal], volume: float) -> float:
        """int_{N(theta)} m(V(y)) u(y) dmu(y), u = 1 when None."""
        c = _constant(modulation)
        if c == 0.0:
            return 0.0
        if c is not None and (u is None or u.is_constant):
            return c * volume * (1.0 if u is None else u.constant_value)

        def integrand(y: float) -> float:
            weight = self._circle_weight(y) / TWO_PI
            if c is None:
                weight *= _at(modulation, self._circle_volume(y))
            else:
                weight *= c
            if u is not None:
                weight *= float(u(np.array(y)))
            return weight

        return sum(
            integrate_1d(integrand, a, b, self._circle_breakpoints(a, b))
            for a, b in self.neighborhood.arcs(theta)
        )

    def _apply_circle(self, u: TestSignal, theta: float) -> float:
        volume = self._circle_volume(theta)
        m1, m2, m3, m4 = self.spec.modulations
        first = _at(m1, volume) * self._circle_integral(theta, m2, u, volume) if _constant(m1) != 0.0 else 0.0
        if _constant(m3) == 0.0:
            return first
        second = _at(m3, volume) * self._circle_integral(theta, m4, None, volume)
        return first - second * float(u(np.array(theta)))

    # two-dimensional spaces, constant radius

    def _radial_volume(self, r: float) -> float:
        return float(self.neighborhood.volumes(np.zeros(1), np.array([r]))[0])

    def _radial_integral(
        self, theta_c: float, r_c: float, modulation: Modulation, u: Optional[TestSignal], volume: float
    ) -> float:
        c = _constant(modulation)
        if c == 0.0:
            return 0.0
        if c is not None and (u is None or u.is_constant):
            return c * volume * (1.0 if u is None else u.constant_value)
        return self._radial_quadrature(theta_c, r_c, modulation, u)

    def _radial_quadrature(
        self, theta_c: float, r_c: float, modulation: Modulation, u: Optional[TestSignal]
    ) -> float:
        c = _constant(modulation)
        alpha = self.neighborhood.alpha
        law = RadialLaw(space=self.space)

        def angular(r: float, width: float) -> float:
            if width >= np.pi:
                nodes, weights = gauss_legendre(theta_c - np.pi, theta_c + np.pi, ANGULAR_ORDER)
            else:
                nodes, weights = gauss_legendre(theta_c - width, theta_c + width, ANGULAR_ORDER)
            values = np.ones_like(nodes)
            if u is not None:
                values = u(nodes, np.full(nodes.shape, r))
            if self.weighted:
                values = values * np.asarray(self.density.rho(nodes))
            return float(np.sum(weights * values)) / TWO_PI

        def integrand(r: float) -> float:
            width = float(self.space.arc_half_width(r, r_c, alpha))
            if width <= 0:
                return 0.0
            factor = c if c is not None else _at(modulation, self._radial_volume(r))
            return float(law.pdf(r)) * factor * angular(r, width)

        return integrate_1d(integrand, 0.0, law.upper, law.breakpoints(r_c, alpha))

    def _radial_ball_volume(self, theta_c: float, r_c: float) -> float:
        if not self.weighted:
            return self._radial_volume(r_c)
        return self._radial_quadrature(theta_c, r_c, Modulation.one(), None)

    def _apply_radial(self, u: TestSignal, theta: float, r: float) -> float:
        volume = self._radial_ball_volume(theta, r)
        m1, m2, m3, m4 = self.spec.modulations
        first = 0.0
        if _constant(m1) != 0.0:
            first = _at(m1, volume) * self._radial_integral(theta, r, m2, u, volume)
        if _constant(m3) == 0.0:
            return first
        second = _at(m3, volume) * self._radial_integral(theta, r, m4, None, volume)
        return first - second * float(u(np.array(theta), np.array(r)))


def continuous_apply(
    space: LatentSpace,
    density: Optional[AngularDensity],
    alpha_fn: NeighborhoodModel,
    spec,
    u: TestSignal,
    x: Point,
    weighted: bool = False,
) -> float:
    """(L u)(x) of the continuous model; density is only read when weighted."""
    model = ContinuousLaplacian(
        space=space, neighborhood=alpha_fn, spec=resolve_spec(spec), density=density, weighted=weighted
    )
    return model.apply(u, x)

