from typing import Optional, Union

from pydantic import BaseModel, Extra, conint, root_validator, validator

AUTO = "auto"

# defaults relative to the base radius
BETA_FACTOR = 3.0
EPSILON_FACTOR = 0.1


class HubConfig(BaseModel):
    """Parameters of a geometric graph with hubs.

    beta and epsilon default to 3 alpha and alpha / 10 once alpha is known; with
    alpha="auto" they are resolved after the positions are drawn.
    """

    class Config:
        extra = Extra.forbid
        allow_mutation = False

    N: conint(ge=1)  # type: ignore[valid-type]
    m: conint(ge=0) = 0  # type: ignore[valid-type]
    alpha: Union[float, str]
    beta: Optional[float] = None
    epsilon: Optional[float] = None
    seed: conint(ge=0, lt=2**64) = 0  # type: ignore[valid-type]

    @validator("alpha", pre=True)
    def _alpha(cls, value: Union[float, str]) -> Union[float, str]:
        if isinstance(value, str):
            if value.strip().lower() == AUTO:
                return AUTO
            value = float(value)
        value = float(value)
        if not value >= 0 or value == float("inf"):
            raise ValueError("alpha must be a finite non-negative number or 'auto'")
        return value

    @validator("beta", "epsilon")
    def _non_negative(cls, value: Optional[float]) -> Optional[float]:
        if value is not None and (not value >= 0 or value == float("inf")):
            raise ValueError("hub radii must be finite and non-negative")
        return value

    @root_validator(skip_on_failure=True)
    def _hubs_fit(cls, values: dict) -> dict:
        if values["m"] > values["N"]:
            raise ValueError(f"cannot pick {values['m']} hub seeds among {values['N']} nodes")
        return values

    @property
    def is_auto(self) -> bool:
        return self.alpha == AUTO

    def resolve(self, alpha: float) -> "HubConfig":
        """Config with a numeric alpha and the hub radii filled in."""
        return HubConfig(
            N=self.N,
            m=self.m,
            alpha=alpha,
            beta=BETA_FACTOR * alpha if self.beta is None else self.beta,
            epsilon=EPSILON_FACTOR * alpha if self.epsilon is None else self.epsilon,
            seed=self.seed,
        )
