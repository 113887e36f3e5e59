from functools import lru_cache

from pydantic import BaseSettings


class NuggSettings(BaseSettings):
    class Config:
        env_prefix = "NUGG_"

    # 0 means one worker per cpu
    threads: int = 0

    quad_epsabs: float = 1e-12
    quad_epsrel: float = 1e-12
    quad_limit: int = 200

    brute_force_max_nodes: int = 20000

    analytics_id: str = ""
    enable_analytics: bool = False

    verbose: str = ""


ENV_THREADS = f"{NuggSettings.Config.env_prefix}THREADS"
ENV_QUAD_EPSABS = f"{NuggSettings.Config.env_prefix}QUAD_EPSABS"
ENV_QUAD_EPSREL = f"{NuggSettings.Config.env_prefix}QUAD_EPSREL"
ENV_QUAD_LIMIT = f"{NuggSettings.Config.env_prefix}QUAD_LIMIT"
ENV_BRUTE_FORCE_MAX_NODES = f"{NuggSettings.Config.env_prefix}BRUTE_FORCE_MAX_NODES"

ENV_ENABLE_ANALYTICS = f"{NuggSettings.Config.env_prefix}ENABLE_ANALYTICS"
ENV_ANALYTICS_ID = f"{NuggSettings.Config.env_prefix}ANALYTICS_ID"

ENV_VERBOSE = f"{NuggSettings.Config.env_prefix}VERBOSE"


@lru_cache(maxsize=1)
def get_settings() -> NuggSettings:
    return NuggSettings()
