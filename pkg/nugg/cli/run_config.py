import json
import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import typer
from pydantic import BaseModel, Extra, ValidationError, conint, validator

from nugg.convergence.runner import RhoMode
from nugg.convergence.signals import TestSignal
from nugg.density.angular import AngularDensity
from nugg.density.density_spec import density_from_dict, parse_density
from nugg.errors import NuggError
from nugg.estimate.density_estimator import EstimationMethod
from nugg.geometry.latent_space import LatentSpace, SpaceKind
from nugg.graphgen.hub_config import HubConfig
from nugg.gso.modulation import GsoSpec
from nugg.gso.presets import GsoPresets
from nugg.utils.artifacts import write_json

logger = logging.getLogger(__name__)

CONFIG_FILE = "config.json"


class MatrixFormat(str, Enum):
    DENSE = "dense"
    TRIPLETS = "triplets"


class RunConfig(BaseModel):
    """Everything a command reads. JSON config files fill it, flags override it,
    and the merged result is echoed next to the outputs."""

    class Config:
        extra = Extra.forbid
        use_enum_values = True

    command: str = ""

    space: SpaceKind = SpaceKind.UNIT_CIRCLE
    R: Optional[float] = None
    density: Union[str, Dict[str, Any]] = "uniform"

    n: Optional[conint(ge=1)] = None  # type: ignore[valid-type]
    n_grid: Optional[List[int]] = None
    alpha: Union[float, str] = 0.1
    beta: Optional[float] = None
    eps: Optional[float] = None
    hubs: conint(ge=0) = 0  # type: ignore[valid-type]
    seed: conint(ge=0) = 0  # type: ignore[valid-type]

    graph: Optional[Path] = None
    preset: Optional[str] = None
    gso: Optional[Dict[str, Any]] = None
    matrix: MatrixFormat = MatrixFormat.TRIPLETS

    rho: RhoMode = RhoMode.TRUE
    estimator: EstimationMethod = EstimationMethod.DEGREE_OVER_VOLUME
    u: str = "cos:1"
    p: float = 0.05
    trials: conint(ge=1) = 10  # type: ignore[valid-type]
    weighted: bool = False
    threads: Optional[conint(ge=1)] = None  # type: ignore[valid-type]

    out: Path = Path("out")

    @validator("density", pre=True)
    def _density(cls, value: Any) -> Any:
        if isinstance(value, AngularDensity):
            return value.to_dict()
        return value

    @validator("preset")
    def _preset(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            GsoPresets.resolve_name(value)
        return value

    @validator("u")
    def _signal(cls, value: str) -> str:
        TestSignal.parse(value)
        return value

    def build_space(self) -> LatentSpace:
        return LatentSpace(kind=self.space, R=self.R)

    def build_density(self) -> AngularDensity:
        if isinstance(self.density, dict):
            return density_from_dict(self.density)
        return parse_density(self.density)

    def build_hub_config(self, N: Optional[int] = None) -> HubConfig:
        return HubConfig(
            N=N or self.n, m=self.hubs, alpha=self.alpha, beta=self.beta, epsilon=self.eps, seed=self.seed
        )

    def build_spec(self) -> GsoSpec:
        if self.gso is not None:
            return GsoSpec.from_dict(self.gso)
        return GsoPresets.get(self.preset or "random_walk")

    def build_signal(self) -> TestSignal:
        return TestSignal.parse(self.u)

    def echo(self) -> Path:
        """Write the merged config to <out>/config.json with the density spelled out."""
        payload = json.loads(self.json())
        payload["density"] = self.build_density().to_dict()
        return write_json(self.out.joinpath(CONFIG_FILE), payload)


def load_config(command: str, config_file: Optional[Path], **overrides: Any) -> RunConfig:
    """Merge a JSON config file with the flags that were given; validation
    failures surface as usage errors."""
    try:
        values: Dict[str, Any] = {}
        if config_file is not None:
            values = RunConfig.parse_file(config_file).dict(exclude_unset=True)
        values.update({key: value for key, value in overrides.items() if value is not None})
        values["command"] = command
        config = RunConfig(**values)
        # resolve every part once so bad values fail before any work starts
        config.build_space()
        config.build_density()
        config.build_spec()
        config.build_hub_config(N=config.n or max(config.hubs, 1))
    except (ValidationError, NuggError, OSError, ValueError) as e:
        raise typer.BadParameter(str(e)) from e
    logger.debug("%s config: %s", command, config.json())
    return config
