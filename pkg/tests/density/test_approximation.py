import numpy as np
import pytest
from scipy import special

from nugg.density.angular import MultimodalVonMises, SpectrallyBounded, angle_grid
from nugg.density.approximation import (
    exponential_cosine_expansion,
    mvm_to_sbrv,
    von_mises_product,
)
from nugg.density.chebyshev import chebyshev_u, sin_multiple


def _series(coefficients, x: np.ndarray) -> np.ndarray:
    return sum(weight * np.cos(frequency * x) for frequency, weight in coefficients.items())


def test_small_concentration_expansion() -> None:
    x = np.linspace(-np.pi, np.pi, 101)
    expected = 1.0 + (np.cosh(1.0) - 1.0) * np.cos(x) ** 2 + np.sinh(1.0) * np.cos(x)
    assert np.allclose(_series(exponential_cosine_expansion(1.0), x), expected, atol=1e-12)


@pytest.mark.parametrize("kappa", [2.0, 3.0, 4.0, 7.0])
def test_expansion_is_exact_at_the_extremes(kappa: float) -> None:
    coefficients = exponential_cosine_expansion(kappa)
    assert _series(coefficients, np.array([0.0]))[0] == pytest.approx(np.exp(kappa), rel=1e-12)
    assert _series(coefficients, np.array([np.pi]))[0] == pytest.approx(np.exp(-kappa), abs=1e-9)


def test_zero_concentration_gives_uniform() -> None:
    surrogate = mvm_to_sbrv(MultimodalVonMises(c=[1.0], n=[1], mu=[0.3], kappa=[0.0]))
    assert np.allclose(surrogate.pdf(angle_grid(64)), 1 / (2 * np.pi), atol=1e-12)


def test_surrogate_of_uniform_term() -> None:
    surrogate = mvm_to_sbrv(MultimodalVonMises(c=[1.0], n=[0], mu=[0.0], kappa=[2.0]))
    assert np.allclose(surrogate.pdf(angle_grid(64)), 1 / (2 * np.pi), atol=1e-12)


@pytest.mark.parametrize(
    "density,max_error",
    [
        (MultimodalVonMises(c=[1.0], n=[1], mu=[0.0], kappa=[1.0]), 0.02),
        (MultimodalVonMises(c=[1.0], n=[1], mu=[0.0], kappa=[4.0]), 0.15),
        (MultimodalVonMises(c=[1.0, 1.0], n=[1, 2], mu=[0.0, 1.0], kappa=[0.5, 0.5]), 0.02),
    ],
)
def test_surrogate_pointwise_error(density: MultimodalVonMises, max_error: float) -> None:
    surrogate = mvm_to_sbrv(density)
    theta = angle_grid()
    assert isinstance(surrogate, SpectrallyBounded)
    assert np.max(np.abs(surrogate.pdf(theta) - density.pdf(theta))) < max_error


def test_surrogate_stays_non_negative() -> None:
    density = MultimodalVonMises(c=[1.0, -0.5], n=[1, 1], mu=[0.0, 0.0], kappa=[3.0, 2.0])
    surrogate = mvm_to_sbrv(density)
    assert np.min(surrogate.pdf(angle_grid())) >= -1e-12


@pytest.mark.parametrize(
    "kappa1,mu1,kappa2,mu2,n",
    [(1.0, 0.0, 2.0, 1.0, 1), (0.5, -2.0, 3.0, 0.7, 2), (4.0, 1.0, 4.0, 1.0 + np.pi / 2, 1)],
)
def test_von_mises_product_identity(kappa1, mu1, kappa2, mu2, n) -> None:
    theta = angle_grid(257)
    left = (
        np.exp(kappa1 * np.cos(n * (theta - mu1)))
        / (2 * np.pi * special.i0(kappa1))
        * np.exp(kappa2 * np.cos(n * (theta - mu2)))
        / (2 * np.pi * special.i0(kappa2))
    )
    kappa, location, log_scale = von_mises_product(kappa1, mu1, kappa2, mu2, n)
    right = np.exp(log_scale + kappa * np.cos(n * (theta - location)))
    assert np.allclose(left, right, rtol=1e-10, atol=1e-14)


@pytest.mark.parametrize("k", [0, 1, 2, 5, 9])
def test_chebyshev_u_matches_trigonometric_form(k: int) -> None:
    x = np.linspace(-0.99, 0.99, 41)
    w = np.arccos(x)
    assert np.allclose(chebyshev_u(k, x), np.sin((k + 1) * w) / np.sin(w), atol=1e-10)


@pytest.mark.parametrize("n", [1, 2, 3, 8])
def test_sin_multiple(n: int) -> None:
    x = np.linspace(-1.0, 1.0, 33)
    assert np.allclose(sin_multiple(n, x), np.sin(n * np.arccos(x)), atol=1e-12)


@pytest.mark.parametrize("kappa", [0.5, 3.0, 6.0])
def test_scaled_expansion_divides_by_i0(kappa: float) -> None:
    plain = exponential_cosine_expansion(kappa)
    scaled = exponential_cosine_expansion(kappa, scaled=True)
    assert set(scaled) == set(plain)
    for frequency, weight in plain.items():
        assert scaled[frequency] == pytest.approx(weight / special.i0(kappa), rel=1e-10, abs=1e-300)


def test_large_concentration_surrogate_is_finite() -> None:
    density = MultimodalVonMises(c=[1.0], n=[1], mu=[0.0], kappa=[800.0])
    coefficients = exponential_cosine_expansion(800.0, scaled=True)
    assert all(np.isfinite(weight) for weight in coefficients.values())

    surrogate = mvm_to_sbrv(density)
    assert np.all(np.isfinite(surrogate.c))
    assert np.isfinite(surrogate.offset)
    assert surrogate.pdf(0.0) == pytest.approx(density.pdf(0.0), rel=0.05)


def test_non_finite_coefficients_are_rejected() -> None:
    with pytest.raises(ValueError):
        SpectrallyBounded(c=[np.nan], n=[1], mu=[0.0])
