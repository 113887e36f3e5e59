import numpy as np
import pytest
from scipy import integrate

from nugg.density.angular import (
    MultimodalVonMises,
    SpectrallyBounded,
    eval_mvm,
    eval_sbrv,
)
from nugg.errors import DomainError


def _total_mass(density) -> float:
    value, _ = integrate.quad(density.pdf, -np.pi, np.pi, epsabs=1e-13, epsrel=1e-13, limit=200)
    return value


@pytest.mark.parametrize(
    "c,n,mu,theta,expected",
    [
        ([1.0], [0], [0.0], 0.3, 1 / (2 * np.pi)),
        ([1.0], [0], [0.0], -2.0, 1 / (2 * np.pi)),
        ([1.0], [1], [0.0], 0.0, 1 / np.pi),
        ([1.0], [1], [0.0], np.pi, 0.0),
        ([1.0], [1], [np.pi / 2], np.pi / 2, 1 / np.pi),
    ],
)
def test_eval_sbrv(c, n, mu, theta, expected) -> None:
    density = SpectrallyBounded(c=c, n=n, mu=mu)
    assert eval_sbrv(density, theta) == pytest.approx(expected, abs=1e-15)


def test_eval_sbrv_vectorized() -> None:
    density = SpectrallyBounded(c=[1.0, 0.5], n=[1, 3], mu=[0.2, -1.0])
    theta = np.linspace(-np.pi, np.pi, 17)
    values = density.pdf(theta)
    assert values.shape == theta.shape
    assert values[3] == pytest.approx(density.pdf(float(theta[3])))


@pytest.mark.parametrize(
    "c,n,mu",
    [
        ([1.0], [0], [0.0]),
        ([1.0], [1], [0.0]),
        ([1.0, 1.0], [0, 1], [0.0, 0.0]),
        ([0.3, -0.2, 0.7], [1, 2, 5], [0.1, 2.0, -1.3]),
        ([2.0, 1.0, 1.0, 0.5], [0, 4, 8, 8], [0.0, 0.5, 1.0, -0.2]),
    ],
)
def test_sbrv_integrates_to_one(c, n, mu) -> None:
    density = SpectrallyBounded(c=c, n=n, mu=mu)
    assert _total_mass(density) == pytest.approx(1.0, abs=1e-9)
    assert np.min(density.pdf(np.linspace(-np.pi, np.pi, 4001))) >= -1e-15


def test_sbrv_normalization_constants() -> None:
    density = SpectrallyBounded(c=[1.0, -2.0, 0.5], n=[0, 1, 2], mu=[0.0, 0.0, 0.0])
    assert density.A == pytest.approx(3.5)
    assert density.K == pytest.approx(4.5)
    assert density.B == pytest.approx(2 * np.pi * 4.5)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(c=[1.0], n=[1], mu=[0.0, 1.0]),
        dict(c=[], n=[], mu=[]),
        dict(c=[np.inf], n=[1], mu=[0.0]),
        dict(c=[1.0], n=[-1], mu=[0.0]),
        dict(c=[-1.0], n=[0], mu=[0.0]),
    ],
)
def test_sbrv_rejects_invalid_parameters(kwargs) -> None:
    with pytest.raises(ValueError):
        SpectrallyBounded(**kwargs)


def test_sbrv_rejects_negative_offset_density() -> None:
    with pytest.raises(SpectrallyBounded.SpectrallyBoundedError):
        SpectrallyBounded(c=[1.0], n=[1], mu=[0.0], offset=0.5)
    assert issubclass(SpectrallyBounded.SpectrallyBoundedError, DomainError)


def test_eval_mvm_uniform_when_concentration_vanishes() -> None:
    density = MultimodalVonMises(c=[1.0], n=[0], mu=[0.0], kappa=[0.0])
    theta = np.linspace(-np.pi, np.pi, 9)
    assert np.allclose(eval_mvm(density, theta), 1 / (2 * np.pi), atol=1e-15)


def test_eval_mvm_peak_to_trough_ratio() -> None:
    density = MultimodalVonMises(c=[1.0], n=[1], mu=[0.0], kappa=[2.0])
    assert eval_mvm(density, 0.0) / eval_mvm(density, np.pi) == pytest.approx(np.exp(4.0), rel=1e-12)


@pytest.mark.parametrize(
    "c,n,mu,kappa",
    [
        ([1.0], [1], [0.0], [2.0]),
        ([1.0, 0.5], [1, 2], [0.0, 1.0], [4.0, 0.5]),
        ([1.0, 2.0], [0, 3], [0.0, -0.7], [1.0, 30.0]),
        ([1.0, -0.2], [1, 1], [0.0, 0.0], [1.0, 3.0]),
        ([1.0], [2], [0.4], [60.0]),
    ],
)
def test_mvm_integrates_to_one(c, n, mu, kappa) -> None:
    density = MultimodalVonMises(c=c, n=n, mu=mu, kappa=kappa)
    assert _total_mass(density) == pytest.approx(1.0, abs=1e-9)


def test_mvm_rejects_negative_concentration() -> None:
    with pytest.raises(ValueError):
        MultimodalVonMises(c=[1.0], n=[1], mu=[0.0], kappa=[-1.0])


@pytest.mark.parametrize(
    "density",
    [
        SpectrallyBounded(c=[1.0, 0.4], n=[1, 3], mu=[0.3, -1.0]),
        MultimodalVonMises(c=[1.0, 0.5], n=[1, 2], mu=[0.0, 1.0], kappa=[2.0, 1.0]),
    ],
)
@pytest.mark.parametrize("theta_c,half_width", [(0.0, 0.2), (2.9, 0.5), (-1.0, 3.0), (1.0, np.pi)])
def test_arc_mass_matches_quadrature(density, theta_c: float, half_width: float) -> None:
    expected, _ = integrate.quad(
        density.pdf, theta_c - half_width, theta_c + half_width, epsabs=1e-13, epsrel=1e-13
    )
    assert density.arc_mass(theta_c, half_width) == pytest.approx(expected, abs=1e-10)


def test_rho_is_relative_to_normalized_uniform_measure() -> None:
    density = SpectrallyBounded.uniform()
    assert np.allclose(density.rho(np.array([0.0, 1.0, -2.0])), 1.0)


def test_paired_harmonics() -> None:
    density = SpectrallyBounded(c=[1.0, 2.0, 3.0], n=[1, 1, 2], mu=[0.0, np.pi / 2, 0.0])
    # pairs (0,0) (1,1) (0,1) (1,0) (2,2)
    expected = 1.0 + 4.0 + 2 * 2.0 * np.cos(-np.pi / 2) + 9.0
    assert density.paired_harmonics(np.ones_like) == pytest.approx(expected, abs=1e-12)
