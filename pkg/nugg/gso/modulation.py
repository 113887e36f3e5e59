import logging
from enum import Enum
from typing import Any, Callable, Dict, Optional, Union

import numpy as np
from pydantic import BaseModel, Extra, root_validator

from nugg.errors import CapabilityError, DegreeSingularityError, DomainError

logger = logging.getLogger(__name__)

INVERSE_PREFIX = "inv:"


class ModulationKind(str, Enum):
    ZERO = "0"
    ONE = "1"
    NEG_ONE = "-1"
    INV_POWER = "inv"
    CUSTOM = "custom"


class Modulation(BaseModel):
    """Scalar map m applied to the normalized degree x = N^-1 A_rho 1.

    Serialized as "0", "1", "-1" or "inv:p" for x^-p. Custom maps are evaluated
    pointwise and cannot be serialized.
    """

    class Config:
        extra = Extra.forbid
        allow_mutation = False
        arbitrary_types_allowed = True

    class ModulationError(DomainError):
        pass

    kind: ModulationKind
    power: Optional[float] = None
    function: Optional[Callable[[float], float]] = None
    name: Optional[str] = None

    @root_validator(skip_on_failure=True)
    def _fields_match_kind(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        kind, power, function = values["kind"], values.get("power"), values.get("function")
        if kind == ModulationKind.INV_POWER:
            if power is None or not np.isfinite(power) or power <= 0:
                raise ValueError("inverse modulation needs a finite positive power")
        elif power is not None:
            raise ValueError(f"modulation {kind.value} takes no power")
        if (kind == ModulationKind.CUSTOM) != (function is not None):
            raise ValueError("a function is given exactly for custom modulations")
        return values

    @classmethod
    def zero(cls) -> "Modulation":
        return cls(kind=ModulationKind.ZERO)

    @classmethod
    def one(cls) -> "Modulation":
        return cls(kind=ModulationKind.ONE)

    @classmethod
    def neg_one(cls) -> "Modulation":
        return cls(kind=ModulationKind.NEG_ONE)

    @classmethod
    def inverse(cls, power: float) -> "Modulation":
        return cls(kind=ModulationKind.INV_POWER, power=float(power))

    @classmethod
    def custom(cls, function: Callable[[float], float], name: str = "custom") -> "Modulation":
        return cls(kind=ModulationKind.CUSTOM, function=function, name=name)

    @classmethod
    def parse(cls, token: Union[str, int, float, "Modulation"]) -> "Modulation":
        if isinstance(token, Modulation):
            return token
        text = str(token).strip().lower()
        if text.startswith(INVERSE_PREFIX):
            try:
                power = float(text[len(INVERSE_PREFIX) :])
            except ValueError as e:
                raise Modulation.ModulationError(f"invalid inverse power in {token!r}") from e
            return cls.inverse(power)
        simple = {"0": cls.zero, "1": cls.one, "-1": cls.neg_one}
        try:
            return simple[text]()
        except KeyError:
            raise Modulation.ModulationError(
                f"unknown modulation {token!r}, expected 0, 1, -1 or inv:p"
            ) from None

    @property
    def is_inverse(self) -> bool:
        return self.kind == ModulationKind.INV_POWER

    def to_token(self) -> str:
        if self.kind == ModulationKind.CUSTOM:
            raise CapabilityError(f"custom modulation {self.name!r} has no JSON form")
        if self.kind == ModulationKind.INV_POWER:
            return f"{INVERSE_PREFIX}{self.power:g}"
        return self.kind.value

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.kind == ModulationKind.ZERO:
            return np.zeros_like(x)
        if self.kind == ModulationKind.ONE:
            return np.ones_like(x)
        if self.kind == ModulationKind.NEG_ONE:
            return -np.ones_like(x)
        if self.kind == ModulationKind.CUSTOM:
            return np.array([float(self.function(float(v))) for v in x.ravel()]).reshape(x.shape)

        bad = np.flatnonzero(~(x > 0))
        if bad.size:
            node = int(bad[0])
            raise DegreeSingularityError(
                f"inverse modulation x^-{self.power:g} at node {node} with degree term {x.flat[node]:g}",
                node=node,
            )
        return x ** (-self.power)

    def __str__(self) -> str:
        if self.kind == ModulationKind.CUSTOM:
            return str(self.name)
        return self.to_token()


class GsoSpec(BaseModel):
    """The four modulations (m1, m2, m3, m4) of a geometric graph shift operator."""

    class Config:
        extra = Extra.forbid
        allow_mutation = False
        arbitrary_types_allowed = True

    m1: Modulation
    m2: Modulation
    m3: Modulation
    m4: Modulation
    preset: Optional[str] = None

    @classmethod
    def from_tokens(cls, m1: Any, m2: Any, m3: Any, m4: Any, preset: Optional[str] = None) -> "GsoSpec":
        return cls(
            m1=Modulation.parse(m1),
            m2=Modulation.parse(m2),
            m3=Modulation.parse(m3),
            m4=Modulation.parse(m4),
            preset=preset,
        )

    @property
    def modulations(self):
        return (self.m1, self.m2, self.m3, self.m4)

    @property
    def uses_inverse(self) -> bool:
        return any(m.is_inverse for m in self.modulations)

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "m1": self.m1.to_token(),
            "m2": self.m2.to_token(),
            "m3": self.m3.to_token(),
            "m4": self.m4.to_token(),
        }
        if self.preset is not None:
            payload["preset"] = self.preset
        return payload

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "GsoSpec":
        unknown = set(payload) - {"m1", "m2", "m3", "m4", "preset"}
        if unknown:
            raise Modulation.ModulationError(f"unknown GSO spec keys: {sorted(unknown)}")
        try:
            return cls.from_tokens(
                payload["m1"], payload["m2"], payload["m3"], payload["m4"], payload.get("preset")
            )
        except KeyError as e:
            raise Modulation.ModulationError(f"GSO spec is missing {e.args[0]}") from e

    def __str__(self) -> str:
        label = f"{self.preset}: " if self.preset else ""
        return f"{label}({', '.join(str(m) for m in self.modulations)})"
