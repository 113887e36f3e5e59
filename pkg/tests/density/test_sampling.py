import numpy as np
import pytest
from scipy import integrate, stats

from nugg.density.angular import MultimodalVonMises, SpectrallyBounded
from nugg.density.radial import RadialLaw, radial_law
from nugg.density.sampling import AngleSampler, sample_angle, sample_radius
from nugg.errors import CapabilityError
from nugg.geometry.latent_space import LatentSpace


def test_uniform_angles_pass_ks() -> None:
    rng = np.random.default_rng(2023)
    theta = sample_angle(SpectrallyBounded.uniform(), rng, 100_000)
    statistic = stats.kstest(theta, stats.uniform(loc=-np.pi, scale=2 * np.pi).cdf).statistic
    assert statistic < 0.01
    assert np.all((theta >= -np.pi) & (theta < np.pi))


def test_cosine_density_mean_of_cos() -> None:
    rng = np.random.default_rng(7)
    count = 100_000
    theta = sample_angle(SpectrallyBounded(c=[1.0], n=[1], mu=[0.0]), rng, count)
    mean = np.mean(np.cos(theta))
    # Var cos = 1/2 - 1/4
    sigma = np.sqrt(0.25 / count)
    assert abs(mean - 0.5) < 3 * sigma + 1e-12


def test_sampler_is_reproducible() -> None:
    density = MultimodalVonMises(c=[1.0, 0.5], n=[1, 2], mu=[0.0, 1.0], kappa=[3.0, 1.0])
    first = sample_angle(density, np.random.default_rng(99), 500)
    second = sample_angle(density, np.random.default_rng(99), 500)
    assert np.array_equal(first, second)


def test_sampler_empty_draw() -> None:
    theta = sample_angle(SpectrallyBounded.uniform(), np.random.default_rng(0), 0)
    assert theta.shape == (0,)


def test_sampler_rejects_negative_count() -> None:
    with pytest.raises(ValueError):
        AngleSampler.sample(SpectrallyBounded.uniform(), np.random.default_rng(0), -1)


def test_von_mises_sample_matches_scipy() -> None:
    density = MultimodalVonMises(c=[1.0], n=[1], mu=[0.0], kappa=[2.0])
    theta = sample_angle(density, np.random.default_rng(31), 50_000)
    statistic = stats.kstest(theta, stats.vonmises(kappa=2.0).cdf).statistic
    assert statistic < 0.015


@pytest.mark.parametrize(
    "space",
    [LatentSpace.unit_disk(), LatentSpace.sphere(), LatentSpace.hyperbolic_disk(6.0)],
)
def test_radial_pdf_integrates_to_one(space: LatentSpace) -> None:
    law = RadialLaw(space=space)
    r = np.linspace(0.0, law.upper, 200_001)
    assert integrate.trapezoid(law.pdf(r), r) == pytest.approx(1.0, abs=1e-6)
    assert law.cdf(law.upper) == pytest.approx(1.0)
    assert law.cdf(0.0) == pytest.approx(0.0)


@pytest.mark.parametrize(
    "space,u,expected",
    [
        (LatentSpace.unit_disk(), 1.0, 1.0),
        (LatentSpace.unit_disk(), 0.25, 0.5),
        (LatentSpace.hyperbolic_disk(4.0), 0.0, 0.0),
        (LatentSpace.hyperbolic_disk(4.0), 1.0, 4.0),
        (LatentSpace.sphere(), 0.5, np.pi / 2),
    ],
)
def test_inverse_cdf(space: LatentSpace, u: float, expected: float) -> None:
    assert RadialLaw(space=space).inverse_cdf(u) == pytest.approx(expected, abs=1e-12)


def test_disk_radius_mean() -> None:
    count = 100_000
    r = sample_radius(radial_law(LatentSpace.unit_disk()), np.random.default_rng(3), count)
    # Var r = 1/2 - 4/9
    sigma = np.sqrt((0.5 - 4.0 / 9.0) / count)
    assert abs(np.mean(r) - 2.0 / 3.0) < 3 * sigma


def test_radial_law_requires_two_dimensions() -> None:
    with pytest.raises(CapabilityError):
        radial_law(LatentSpace.unit_circle())
    with pytest.raises(ValueError):
        RadialLaw(space=LatentSpace.unit_circle())


@pytest.mark.parametrize(
    "space,rc,alpha",
    [
        (LatentSpace.unit_disk(), 0.5, 0.1),
        (LatentSpace.unit_disk(), 0.9, 0.3),
        (LatentSpace.hyperbolic_disk(3.0), 1.0, 0.8),
        (LatentSpace.sphere(), 1.0, 0.5),
    ],
)
def test_uniform_ball_mass_matches_ball_measure_inside(space, rc, alpha) -> None:
    law = RadialLaw(space=space)
    mass = law.uniform_ball_mass(rc, alpha)
    full = space.ball_measure(alpha, normalized=True)
    if rc + alpha <= law.upper:
        assert mass == pytest.approx(full, rel=1e-7)
    else:
        assert mass < full
