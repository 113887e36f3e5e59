import numpy as np


def chebyshev_u(k: int, x: np.ndarray) -> np.ndarray:
    """Chebyshev polynomial of the second kind U_k by the three-term recurrence."""
    x = np.clip(np.asarray(x, dtype=float), -1.0, 1.0)
    if k < 0:
        return np.zeros_like(x)
    previous = np.ones_like(x)
    if k == 0:
        return previous
    current = 2.0 * x
    for _ in range(k - 1):
        previous, current = current, 2.0 * x * current - previous
    return current


def sin_multiple(n: int, cos_width: np.ndarray) -> np.ndarray:
    """sin(n * arccos(x)) = sqrt(1 - x^2) U_{n-1}(x)."""
    x = np.clip(np.asarray(cos_width, dtype=float), -1.0, 1.0)
    return np.sqrt(1.0 - x**2) * chebyshev_u(n - 1, x)
