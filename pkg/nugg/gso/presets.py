import logging
from typing import Dict, List, Tuple, TypeVar, Union

import numpy as np
from scipy import sparse

from nugg.errors import DomainError
from nugg.gso.modulation import GsoSpec

logger = logging.getLogger(__name__)

Matrix = TypeVar("Matrix", np.ndarray, sparse.spmatrix)


class GsoPresets:
    """Named modulation tuples of the usual shift operators.

    canonical_scale turns the operator built at rho = 1 into the textbook matrix:
    factor is multiplied in, and with_n adds a factor N.
    """

    class GsoPresetsError(DomainError):
        pass

    TABLE: Dict[str, Tuple[str, str, str, str]] = {
        "adjacency": ("1", "1", "0", "0"),
        "combinatorial": ("1", "1", "1", "1"),
        "signless": ("1", "1", "-1", "1"),
        "random_walk": ("inv:1", "1", "inv:1", "1"),
        "right_normalized": ("1", "inv:1", "inv:1", "1"),
        "sym_norm_adjacency": ("inv:0.5", "inv:0.5", "0", "0"),
        "sym_norm_laplacian": ("inv:0.5", "inv:0.5", "inv:1", "1"),
        "balanced": ("inv:0.5", "inv:0.5", "inv:0.5", "inv:0.5"),
    }

    ALIASES: Dict[str, str] = {"eq8": "balanced"}

    # (factor, with_n)
    CANONICAL: Dict[str, Tuple[float, bool]] = {
        "adjacency": (1.0, True),
        "combinatorial": (-1.0, True),
        "signless": (1.0, True),
        "random_walk": (-1.0, False),
        "right_normalized": (-1.0, False),
        "sym_norm_adjacency": (1.0, False),
        "sym_norm_laplacian": (-1.0, False),
        "balanced": (1.0, False),
    }

    @classmethod
    def names(cls) -> List[str]:
        return list(cls.TABLE)

    @classmethod
    def resolve_name(cls, name: str) -> str:
        key = name.strip().lower().replace("-", "_")
        key = cls.ALIASES.get(key, key)
        if key not in cls.TABLE:
            raise GsoPresets.GsoPresetsError(
                f"unknown preset {name!r}, expected one of {', '.join(cls.names() + list(cls.ALIASES))}"
            )
        return key

    @classmethod
    def get(cls, name: str) -> GsoSpec:
        key = cls.resolve_name(name)
        return GsoSpec.from_tokens(*cls.TABLE[key], preset=key)

    @classmethod
    def canonical_scale(cls, L: Matrix, name: str, N: int) -> Matrix:
        key = cls.resolve_name(name)
        if key not in cls.CANONICAL:
            raise GsoPresets.GsoPresetsError(f"preset {key!r} has no textbook form")
        factor, with_n = cls.CANONICAL[key]
        return L * (factor * N if with_n else factor)


def preset(name: str) -> GsoSpec:
    return GsoPresets.get(name)


def canonical_scale(L: Matrix, preset_name: str, N: int) -> Matrix:
    return GsoPresets.canonical_scale(L, preset_name, N)


def resolve_spec(spec: Union[GsoSpec, str]) -> GsoSpec:
    if isinstance(spec, GsoSpec):
        return spec
    return GsoPresets.get(spec)
