"""Explicit (1+n)-dimensional Lorentz matrices, used as independent ground truth.

Signature convention (+, -, ..., -); matrices act on column vectors (t, x).
A boost by velocity v is the hyperbolic rotation of rapidity atanh|v| in the
(t, v-hat) plane, realized directly from gamma rather than by exponentiation.
"""

from __future__ import annotations

import numpy as np

from .calculus import SuperluminalError, SUPERLUMINAL_EDGE

__all__ = [
    "aberrate_ray",
    "axis_projection_shift",
    "boost_matrix",
    "is_lorentz",
    "minkowski_metric",
    "polar_decompose",
]


def minkowski_metric(n: int) -> np.ndarray:
    g = -np.eye(1 + n)
    g[0, 0] = 1.0
    return g


def boost_matrix(v) -> np.ndarray:
    """Pure boost sending the time axis e0 to (gamma, gamma v); fixes the
    orthogonal complement of span{e0, v}."""
    v = np.atleast_1d(np.asarray(v, dtype=float))
    n = v.size
    v2 = float(v @ v)
    if v2 >= SUPERLUMINAL_EDGE ** 2:
        raise SuperluminalError(f"|v| = {np.sqrt(v2)!r} is not strictly below 1")
    g = 1.0 / np.sqrt(1.0 - v2)
    L = np.eye(1 + n)
    L[0, 0] = g
    L[0, 1:] = g * v
    L[1:, 0] = g * v
    # (gamma - 1)/v^2 written as gamma^2/(gamma + 1) to stay finite at v = 0
    L[1:, 1:] += g * g / (g + 1.0) * np.outer(v, v)
    return L


def is_lorentz(L, atol: float = 1e-10) -> bool:
    """Orthochronous proper Lorentz check: L^T G L = G, det +1, L00 >= 1."""
    L = np.asarray(L, dtype=float)
    n = L.shape[0] - 1
    g = minkowski_metric(n)
    if np.abs(L.T @ g @ L - g).max() > atol:
        return False
    return bool(np.linalg.det(L) > 0.0 and L[0, 0] >= 1.0 - atol)


def polar_decompose(L):
    """Split an orthochronous proper Lorentz matrix as rotation @ boost.

    The boost velocity is read off the first row, e0^T L = (gamma, gamma u),
    so that L = R B(u) with R fixing e0 and orthogonal on the spatial block.
    Returns (rotation, velocity).
    """
    L = np.asarray(L, dtype=float)
    if L[0, 0] < 1.0 - 1e-9:
        raise ValueError("matrix is not orthochronous")
    u = L[0, 1:] / L[0, 0]
    rotation = L @ boost_matrix(-u)
    return rotation, u


def aberrate_ray(L, a) -> np.ndarray:
    """Shift of the celestial point a under the Lorentz map L.

    The incoming ray is the null vector (-1, a); it is pulled back through L,
    rescaled to time component -1, and its spatial part returned.  For
    L = boost_matrix(v) the side-most stars (a perpendicular to v) land at
    projection +|v| on the v axis.
    """
    L = np.asarray(L, dtype=float)
    a = np.atleast_1d(np.asarray(a, dtype=float))
    ray = np.concatenate(([-1.0], a))
    w = np.linalg.solve(L, ray)
    out = w[1:] / (-w[0])
    return out / np.linalg.norm(out)


def axis_projection_shift(x: float, v: float) -> float:
    """New axis projection of a star: x' = (x + v)/(1 + v x)."""
    if abs(x) > 1.0:
        raise ValueError("projection must lie in [-1, 1]")
    if abs(v) >= 1.0:
        raise SuperluminalError("speed must lie in (-1, 1)")
    return (x + v) / (1.0 + v * x)
