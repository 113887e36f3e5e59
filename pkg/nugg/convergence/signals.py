from enum import Enum
from typing import Optional, Union

import numpy as np
from pydantic import BaseModel, Extra, validator

from nugg.errors import CapabilityError, DomainError


class SignalKind(str, Enum):
    CONSTANT = "constant"
    COS_HARMONIC = "cos_harmonic"
    RADIAL_POLY = "radial_poly"


ALIASES = {"cos": SignalKind.COS_HARMONIC, "radial": SignalKind.RADIAL_POLY}


class TestSignal(BaseModel):
    """Bounded closed-form signal: k, cos(k theta) or r^k."""

    __test__ = False

    class Config:
        extra = Extra.forbid
        allow_mutation = False

    class TestSignalError(DomainError):
        pass

    kind: SignalKind
    k: float = 1.0

    @validator("k")
    def _valid_k(cls, value: float, values: dict) -> float:
        if not np.isfinite(value):
            raise ValueError("signal parameter must be finite")
        kind = values.get("kind")
        if kind == SignalKind.COS_HARMONIC and value != int(value):
            raise ValueError("cos_harmonic needs an integer frequency")
        if kind == SignalKind.RADIAL_POLY and value < 0:
            raise ValueError("radial_poly needs a non-negative power")
        return float(value)

    @classmethod
    def constant(cls, k: float = 1.0) -> "TestSignal":
        return cls(kind=SignalKind.CONSTANT, k=k)

    @classmethod
    def cos_harmonic(cls, k: int = 1) -> "TestSignal":
        return cls(kind=SignalKind.COS_HARMONIC, k=k)

    @classmethod
    def radial_poly(cls, k: float = 1.0) -> "TestSignal":
        return cls(kind=SignalKind.RADIAL_POLY, k=k)

    @classmethod
    def parse(cls, text: Union[str, "TestSignal"]) -> "TestSignal":
        """'constant', 'cos', 'cos:3', 'radial_poly:2', ..."""
        if isinstance(text, TestSignal):
            return text
        name, _, parameter = str(text).strip().lower().partition(":")
        kind = ALIASES.get(name)
        if kind is None:
            try:
                kind = SignalKind(name)
            except ValueError:
                raise TestSignal.TestSignalError(
                    f"unknown signal {text!r}, expected constant, cos_harmonic or radial_poly"
                ) from None
        try:
            k = float(parameter) if parameter else 1.0
            return cls(kind=kind, k=k)
        except ValueError as e:
            raise TestSignal.TestSignalError(f"invalid signal {text!r}: {e}") from e

    @property
    def is_constant(self) -> bool:
        return self.kind == SignalKind.CONSTANT or (
            self.kind == SignalKind.COS_HARMONIC and self.k == 0
        ) or (self.kind == SignalKind.RADIAL_POLY and self.k == 0)

    @property
    def constant_value(self) -> float:
        if not self.is_constant:
            raise TestSignal.TestSignalError(f"{self} is not constant")
        return self.k if self.kind == SignalKind.CONSTANT else 1.0

    def __call__(self, theta: np.ndarray, r: Optional[np.ndarray] = None) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        if self.kind == SignalKind.CONSTANT:
            return np.full(theta.shape, self.k)
        if self.kind == SignalKind.COS_HARMONIC:
            return np.cos(self.k * theta)
        if r is None:
            raise CapabilityError("radial_poly needs a radial coordinate")
        return np.broadcast_to(np.asarray(r, dtype=float) ** self.k, theta.shape).copy()

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.k:g}"
