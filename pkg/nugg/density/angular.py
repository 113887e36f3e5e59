import logging
from abc import abstractmethod
from typing import Any, Callable, Dict, List, Optional, Union

import numpy as np
from pydantic import BaseModel, PrivateAttr, conint, validator
from scipy import special

from nugg.density.quadrature import integrate_1d
from nugg.errors import DomainError

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * np.pi

# resolution of the non-negativity check and of the sampler envelope
GRID_SIZE = 4096


def angle_grid(size: int = GRID_SIZE) -> np.ndarray:
    return np.linspace(-np.pi, np.pi, size, endpoint=False)


def _scalar_or_array(value: np.ndarray) -> Union[float, np.ndarray]:
    if value.ndim == 0:
        return float(value)
    return value


class AngularDensity(BaseModel):
    class Config:
        allow_mutation = False

    c: List[float]
    n: List[conint(ge=0)]  # type: ignore[valid-type]
    mu: List[float]

    @validator("c", "mu", each_item=True)
    def _finite(cls, value: float) -> float:
        if not np.isfinite(value):
            raise ValueError("density parameters must be finite")
        return value

    @validator("mu", always=True)
    def _same_length(cls, value: List[float], values: Dict[str, Any]) -> List[float]:
        c, n = values.get("c"), values.get("n")
        if c is None or n is None:
            return value
        if not (len(c) == len(n) == len(value)):
            raise ValueError("c, n and mu must have the same length")
        if len(value) == 0:
            raise ValueError("a density needs at least one term")
        return value

    @property
    def type_name(self) -> str:
        raise NotImplementedError

    @abstractmethod
    def pdf(self, theta: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        ...

    @abstractmethod
    def arc_mass(
        self, theta_c: Union[float, np.ndarray], half_width: Union[float, np.ndarray]
    ) -> Union[float, np.ndarray]:
        """Probability of the arc [theta_c - half_width, theta_c + half_width]."""

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        ...

    def _arrays(self):
        return (
            np.asarray(self.c, dtype=float),
            np.asarray(self.n, dtype=float),
            np.asarray(self.mu, dtype=float),
        )

    def _phase(self, theta: np.ndarray) -> np.ndarray:
        _, n, mu = self._arrays()
        return np.multiply.outer(theta, n) - n * mu

    def max_pdf(self) -> float:
        return float(np.max(self.pdf(angle_grid())))

    def rho(self, theta: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        """Density w.r.t. the normalized uniform measure on the circle, 2 pi pdf.

        The uniform density has rho = 1 and mean(1 / rho) = 1 under sampling.
        Externally supplied density vectors for the shift operators must use this
        scale, not the density against raw arc length.
        """
        return TWO_PI * np.asarray(self.pdf(theta))

    def _check_non_negative(self, numerator: np.ndarray, error: Callable) -> None:
        scale = max(1.0, float(np.max(np.abs(numerator))))
        if float(np.min(numerator)) < -1e-12 * scale:
            raise error(
                f"density is negative on the angle grid (min {np.min(numerator):.3g})"
            )


class SpectrallyBounded(AngularDensity):
    """Finite cosine series density

        (sum_i c_i cos(n_i (theta - mu_i)) + A) / B

    with A = sum |c_i| unless an explicit offset is given and
    B = 2 pi (A + sum_{n_i = 0} c_i).
    """

    class SpectrallyBoundedError(DomainError):
        pass

    offset: Optional[float] = None

    _A: float = PrivateAttr()
    _K: float = PrivateAttr()
    _B: float = PrivateAttr()

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)
        c, n, _ = self._arrays()
        self._A = float(np.sum(np.abs(c))) if self.offset is None else float(self.offset)
        self._K = self._A + float(np.sum(c[n == 0]))
        self._B = TWO_PI * self._K
        if abs(self._B) < 1e-300 or not np.isfinite(self._B):
            raise SpectrallyBounded.SpectrallyBoundedError(
                "normalization constant B vanishes"
            )
        self._check_non_negative(
            self._numerator(angle_grid()), SpectrallyBounded.SpectrallyBoundedError
        )

    @classmethod
    def uniform(cls) -> "SpectrallyBounded":
        return cls(c=[1.0], n=[0], mu=[0.0])

    @property
    def type_name(self) -> str:
        return "sbrv"

    @property
    def A(self) -> float:
        return self._A

    @property
    def B(self) -> float:
        return self._B

    @property
    def K(self) -> float:
        """Constant part of the numerator: A plus the frequency-zero coefficients."""
        return self._K

    def _numerator(self, theta: np.ndarray) -> np.ndarray:
        c, _, _ = self._arrays()
        return np.cos(self._phase(np.asarray(theta, dtype=float))) @ c + self._A

    def pdf(self, theta: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        return _scalar_or_array(self._numerator(np.asarray(theta, dtype=float)) / self._B)

    def arc_mass(
        self, theta_c: Union[float, np.ndarray], half_width: Union[float, np.ndarray]
    ) -> Union[float, np.ndarray]:
        c, n, mu = self._arrays()
        theta_c, width = np.broadcast_arrays(
            np.asarray(theta_c, dtype=float),
            np.clip(np.asarray(half_width, dtype=float), 0.0, np.pi),
        )
        phase = np.cos(np.multiply.outer(theta_c, n) - n * mu)
        # sin(n w) / n, with the n = 0 limit w
        spread = np.multiply.outer(width, np.ones_like(n)) * np.sinc(
            np.multiply.outer(width, n) / np.pi
        )
        mass = (2.0 * (phase * spread) @ c + 2.0 * self._A * width) / self._B
        return _scalar_or_array(mass)

    def paired_harmonics(self, weight: Callable[[np.ndarray], np.ndarray]) -> float:
        """sum over pairs with n_i = n_j != 0 of c_i c_j cos(n_i (mu_i - mu_j)) weight(n_i)."""
        c, n, mu = self._arrays()
        same = (n[:, None] == n[None, :]) & (n[:, None] > 0)
        if not np.any(same):
            return 0.0
        pair_terms = np.outer(c, c) * np.cos(n[:, None] * (mu[:, None] - mu[None, :]))
        weights = weight(np.broadcast_to(n[:, None], same.shape))
        return float(np.sum(np.where(same, pair_terms * weights, 0.0)))

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "type": self.type_name,
            "c": list(self.c),
            "n": list(self.n),
            "mu": list(self.mu),
        }
        if self.offset is not None:
            payload["offset"] = self.offset
        return payload


class MultimodalVonMises(AngularDensity):
    """Mixture-like exponential cosine density normalized by Bessel I0 terms.

    Negative coefficients are lifted by A = sum_{c_i < 0} |c_i| e^k / (2 pi I0(k)),
    the largest value a negative term can take.
    """

    class MultimodalVonMisesError(DomainError):
        pass

    kappa: List[float]

    _scale: np.ndarray = PrivateAttr()
    _A: float = PrivateAttr()
    _B: float = PrivateAttr()

    @validator("kappa", always=True)
    def _valid_kappa(cls, value: List[float], values: Dict[str, Any]) -> List[float]:
        if any((not np.isfinite(k)) or k < 0 for k in value):
            raise ValueError("concentrations must be finite and non-negative")
        c = values.get("c")
        if c is not None and len(c) != len(value):
            raise ValueError("kappa must have the same length as c")
        return value

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)
        c, n, _ = self._arrays()
        kappa = np.asarray(self.kappa, dtype=float)
        # e^k / (2 pi I0(k)) without overflow
        self._scale = 1.0 / (TWO_PI * special.i0e(kappa))
        negative = c < 0
        self._A = float(np.sum(np.abs(c[negative]) * self._scale[negative]))
        self._B = float(
            np.sum(c[n >= 1])
            + np.sum(c[n == 0] * TWO_PI * self._scale[n == 0])
            + TWO_PI * self._A
        )
        if abs(self._B) < 1e-300 or not np.isfinite(self._B):
            raise MultimodalVonMises.MultimodalVonMisesError(
                "normalization constant B vanishes"
            )
        self._check_non_negative(
            self._numerator(angle_grid()) * np.sign(self._B),
            MultimodalVonMises.MultimodalVonMisesError,
        )

    @property
    def type_name(self) -> str:
        return "mvm"

    @property
    def A(self) -> float:
        return self._A

    @property
    def B(self) -> float:
        return self._B

    def _numerator(self, theta: np.ndarray) -> np.ndarray:
        c, _, _ = self._arrays()
        kappa = np.asarray(self.kappa, dtype=float)
        kernel = np.exp(kappa * (np.cos(self._phase(np.asarray(theta, dtype=float))) - 1.0))
        return (kernel * self._scale) @ c + self._A

    def pdf(self, theta: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        return _scalar_or_array(self._numerator(np.asarray(theta, dtype=float)) / self._B)

    def arc_mass(
        self, theta_c: Union[float, np.ndarray], half_width: Union[float, np.ndarray]
    ) -> Union[float, np.ndarray]:
        theta_c, width = np.broadcast_arrays(
            np.asarray(theta_c, dtype=float),
            np.clip(np.asarray(half_width, dtype=float), 0.0, np.pi),
        )
        mass = np.empty(theta_c.shape)
        for index in np.ndindex(theta_c.shape):
            center, w = float(theta_c[index]), float(width[index])
            if w >= np.pi:
                mass[index] = 1.0
            else:
                mass[index] = integrate_1d(self.pdf, center - w, center + w)
        return _scalar_or_array(mass)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": self.type_name,
            "c": list(self.c),
            "n": list(self.n),
            "mu": list(self.mu),
            "kappa": list(self.kappa),
        }


def eval_sbrv(density: SpectrallyBounded, theta: Union[float, np.ndarray]):
    return density.pdf(theta)


def eval_mvm(density: MultimodalVonMises, theta: Union[float, np.ndarray]):
    return density.pdf(theta)
