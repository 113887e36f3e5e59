import numpy as np
import pytest

from nugg.errors import DomainError
from nugg.geometry.latent_space import (
    LatentSpace,
    Point,
    SpaceKind,
    ball_measure,
    canonical_angle,
    distance,
)

SPACES = [
    LatentSpace.unit_circle(),
    LatentSpace.unit_disk(),
    LatentSpace.sphere(),
    LatentSpace.hyperbolic_disk(3.0),
]


@pytest.mark.parametrize(
    "theta,expected",
    [(0.0, 0.0), (np.pi, -np.pi), (-np.pi, -np.pi), (3 * np.pi / 2, -np.pi / 2), (7.0, 7.0 - 2 * np.pi)],
)
def test_canonical_angle(theta: float, expected: float) -> None:
    assert canonical_angle(theta) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize(
    "space,p,q,expected",
    [
        (LatentSpace.unit_circle(), Point(theta=0.1), Point(theta=-0.1), 0.2),
        (LatentSpace.unit_circle(), Point(theta=3.0), Point(theta=-3.0), 2 * np.pi - 6.0),
        (LatentSpace.unit_circle(), Point(theta=0.0), Point(theta=np.pi), np.pi),
        (LatentSpace.unit_disk(), Point(theta=0.0, r=0.5), Point(theta=np.pi, r=0.5), 1.0),
        (LatentSpace.unit_disk(), Point(theta=0.0, r=0.3), Point(theta=np.pi / 2, r=0.4), 0.5),
        (LatentSpace.unit_disk(), Point(theta=1.0, r=0.0), Point(theta=-2.0, r=0.7), 0.7),
        (LatentSpace.sphere(), Point(theta=0.0, r=0.0), Point(theta=1.0, r=np.pi), np.pi),
        (LatentSpace.sphere(), Point(theta=0.0, r=np.pi / 2), Point(theta=np.pi / 2, r=np.pi / 2), np.pi / 2),
        (LatentSpace.hyperbolic_disk(5.0), Point(theta=0.0, r=0.0), Point(theta=2.0, r=4.0), 4.0),
        (LatentSpace.hyperbolic_disk(5.0), Point(theta=0.5, r=1.0), Point(theta=0.5, r=3.5), 2.5),
    ],
)
def test_distance(space: LatentSpace, p: Point, q: Point, expected: float) -> None:
    assert distance(space, p, q) == pytest.approx(expected, abs=1e-12)
    assert distance(space, q, p) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("space", SPACES[1:])
def test_distance_is_a_metric_on_random_points(space: LatentSpace) -> None:
    rng = np.random.default_rng(11)
    theta = rng.uniform(-np.pi, np.pi, (3, 200))
    r = rng.uniform(0.0, space.radial_max, (3, 200))
    d_xy = space.distance(theta[0], r[0], theta[1], r[1])
    d_yz = space.distance(theta[1], r[1], theta[2], r[2])
    d_xz = space.distance(theta[0], r[0], theta[2], r[2])
    assert np.all(d_xy >= 0)
    assert np.all(d_xz <= d_xy + d_yz + 1e-9)
    assert np.allclose(space.distance(theta[0], r[0], theta[0], r[0]), 0.0, atol=1e-7)


def test_hyperbolic_distance_matches_law_of_cosines() -> None:
    space = LatentSpace.hyperbolic_disk(4.0)
    r1, r2, delta = 1.3, 2.1, 0.9
    expected = np.arccosh(
        np.cosh(r1) * np.cosh(r2) - np.sinh(r1) * np.sinh(r2) * np.cos(delta)
    )
    assert float(space.distance(0.0, r1, delta, r2)) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize(
    "space,alpha,expected",
    [
        (LatentSpace.unit_circle(), 0.5, 0.5 / np.pi),
        (LatentSpace.unit_circle(), 10.0, 1.0),
        (LatentSpace.unit_disk(), 0.1, 0.01),
        (LatentSpace.unit_disk(), 2.0, 1.0),
        (LatentSpace.sphere(), np.pi, 1.0),
        (LatentSpace.sphere(), np.pi / 2, 0.5),
        (LatentSpace.hyperbolic_disk(2.0), 2.0, 1.0),
        (LatentSpace.hyperbolic_disk(2.0), 1.0, (np.cosh(1.0) - 1) / (np.cosh(2.0) - 1)),
    ],
)
def test_ball_measure_normalized(space: LatentSpace, alpha: float, expected: float) -> None:
    assert ball_measure(space, alpha, normalized=True) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("space", SPACES)
def test_ball_measure_rejects_negative_radius(space: LatentSpace) -> None:
    with pytest.raises(DomainError):
        ball_measure(space, -0.1)


@pytest.mark.parametrize(
    "space,theta,r",
    [
        (LatentSpace.unit_disk(), [0.0], [1.5]),
        (LatentSpace.unit_disk(), [0.0], [-0.1]),
        (LatentSpace.unit_disk(), [0.0], None),
        (LatentSpace.sphere(), [0.0], [4.0]),
        (LatentSpace.hyperbolic_disk(2.0), [np.nan], [1.0]),
    ],
)
def test_validate_coordinates_rejects_points_outside(space, theta, r) -> None:
    with pytest.raises(DomainError):
        space.validate_coordinates(theta, r)


def test_space_construction() -> None:
    assert LatentSpace.unit_disk().R == 1.0
    assert LatentSpace.sphere().R is None
    assert LatentSpace(kind=SpaceKind.UNIT_CIRCLE).diameter == pytest.approx(np.pi)
    with pytest.raises(ValueError):
        LatentSpace(kind=SpaceKind.HYPERBOLIC_DISK)
    with pytest.raises(ValueError):
        LatentSpace.hyperbolic_disk(-1.0)


@pytest.mark.parametrize("space", SPACES[1:])
def test_arc_half_width_agrees_with_distance(space: LatentSpace) -> None:
    rng = np.random.default_rng(5)
    rc = 0.4 * space.radial_max
    alpha = 0.3 * space.diameter
    r = rng.uniform(0.0, space.radial_max, 500)
    width = space.arc_half_width(r, rc, alpha)
    inside = space.distance(0.0, rc, width * 0.999, r) <= alpha + 1e-9
    assert np.all(inside[width > 0])
    outside = space.distance(0.0, rc, np.minimum(width * 1.001 + 1e-6, np.pi), r) > alpha - 1e-9
    assert np.all(outside[(width > 0) & (width < np.pi)])


@pytest.mark.parametrize("space", [LatentSpace.unit_circle(), LatentSpace.unit_disk(), LatentSpace.sphere()])
def test_embedding_is_monotone_in_distance(space: LatentSpace) -> None:
    rng = np.random.default_rng(9)
    theta = rng.uniform(-np.pi, np.pi, (2, 300))
    r = rng.uniform(0.0, max(space.radial_max, 1e-9), (2, 300)) if not space.is_circle else np.zeros((2, 300))
    geodesic = space.distance(theta[0], r[0], theta[1], r[1])
    chord = np.linalg.norm(space.embed(theta[0], r[0]) - space.embed(theta[1], r[1]), axis=1)
    expected = np.array([space.embedded_radius(d) for d in geodesic])
    assert np.allclose(chord, expected, atol=1e-9)
