import logging
from typing import Tuple

import numpy as np

from nugg.density.angular import AngularDensity
from nugg.density.radial import RadialLaw
from nugg.density.sampling import sample_angle, sample_radius
from nugg.errors import DomainError
from nugg.geometry.latent_space import LatentSpace
from nugg.graphgen.edges import AUTO_ALPHA_FACTOR, bottleneck_radius, build_edges
from nugg.graphgen.geometric_graph import GeometricGraph
from nugg.graphgen.hub_config import HubConfig

logger = logging.getLogger(__name__)


class HubGraphGenerator:
    class HubGraphGeneratorError(DomainError):
        pass

    @classmethod
    def sample_positions(
        cls,
        space: LatentSpace,
        density: AngularDensity,
        count: int,
        rng: np.random.Generator,
    ) -> Tuple[np.ndarray, np.ndarray]:
        theta = sample_angle(density, rng, count)
        if space.is_circle:
            return theta, np.zeros(count)
        return theta, sample_radius(RadialLaw(space=space), rng, count)

    @classmethod
    def hub_closure(
        cls,
        space: LatentSpace,
        theta: np.ndarray,
        r: np.ndarray,
        seeds: np.ndarray,
        epsilon: float,
    ) -> np.ndarray:
        """Nodes within epsilon of a hub seed, seeds included."""
        is_hub = np.zeros(theta.size, dtype=bool)
        is_hub[seeds] = True
        for seed in seeds:
            is_hub |= space.distance(theta[seed], r[seed], theta, r) <= epsilon
        return is_hub

    @classmethod
    def generate(
        cls, space: LatentSpace, density: AngularDensity, config: HubConfig
    ) -> GeometricGraph:
        rng = np.random.default_rng(config.seed)
        theta, r = cls.sample_positions(space, density, config.N, rng)
        rho_true = np.asarray(density.rho(theta), dtype=float)

        if config.is_auto:
            if config.N < 2:
                raise HubGraphGenerator.HubGraphGeneratorError(
                    "alpha='auto' needs at least two nodes"
                )
            alpha = bottleneck_radius(space, theta, None if space.is_circle else r) * AUTO_ALPHA_FACTOR
            logger.info("bottleneck radius gives alpha=%.6g", alpha)
        else:
            alpha = float(config.alpha)
        resolved = config.resolve(alpha)

        seeds = np.sort(rng.choice(config.N, size=config.m, replace=False)).astype(np.int64)
        is_hub = cls.hub_closure(space, theta, r, seeds, resolved.epsilon)
        radius = np.where(is_hub, alpha + resolved.beta, alpha)
        edges = build_edges(space, theta, None if space.is_circle else r, radius)

        logger.info(
            "generated %s graph: N=%d, %d edges, %d hubs",
            space.kind.value,
            config.N,
            edges.shape[0],
            int(np.count_nonzero(is_hub)),
        )
        return GeometricGraph(
            space=space,
            density=density,
            config=config,
            alpha=alpha,
            beta=resolved.beta,
            epsilon=resolved.epsilon,
            theta=theta,
            r=r,
            rho_true=rho_true,
            is_hub=is_hub,
            radius=radius,
            edges=edges,
            hub_seeds=seeds,
        )


def generate(space: LatentSpace, density: AngularDensity, cfg: HubConfig) -> GeometricGraph:
    return HubGraphGenerator.generate(space, density, cfg)
