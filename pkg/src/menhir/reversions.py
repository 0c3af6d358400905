"""Sphere reversions through interior points: the geometric wing.

A reversion through p (|p| < 1) sends a sphere point A to the second
intersection of the line through A and p with the sphere; it is an involution
and p, A, and the image are collinear.  Words of reversions act left to right
(postfix), so `apply_word(a, [p, q])` reverts through p first.  A boost by
velocity v deforms the celestial sphere exactly like the two-letter word
(origin, menhir_of(v)).

The planar constructions at the bottom recover the algebraic composition law
and Thomas angle with chords alone, and are cross-checked against the algebra
in the test suite.  Points here are plain real vectors, menhirs included.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .calculus import menhir_of

__all__ = [
    "ConstructionError",
    "ConstructionTrace",
    "DegenerateConstructionWarning",
    "apply_word",
    "boost_star_shift",
    "butterfly_check",
    "collinear",
    "construct_composite_menhir",
    "construct_rotation",
    "find_conjugate_point",
    "revert",
    "two_boost_fixed_points",
    "two_boost_word",
]


class ConstructionError(RuntimeError):
    """A straightedge construction could not be completed."""


class DegenerateConstructionWarning(UserWarning):
    """Construction degenerated; the algebraic value was returned instead."""


def _interior(p, what: str = "reversion point") -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if np.linalg.norm(p) >= 1.0:
        raise ValueError(f"{what} must lie strictly inside the unit ball")
    return p


def revert(a, p) -> np.ndarray:
    """Second intersection of line(a, p) with the unit sphere.

    The chord parameter is t = 2(1 - a.p)/|p - a|^2, strictly positive for
    interior p, so the second root never collides with a.  Vectorizes over a
    leading batch axis of `a`.
    """
    a = np.asarray(a, dtype=float)
    norms = np.linalg.norm(a, axis=-1)
    if np.abs(norms - 1.0).max() > 1e-9:
        raise ValueError("sphere point must have unit norm")
    p = _interior(p)
    d = p - a
    t = 2.0 * (1.0 - a @ p) / np.sum(d * d, axis=-1)
    if a.ndim > 1:
        return a + np.expand_dims(t, -1) * d
    return a + t * d


def apply_word(a, word) -> np.ndarray:
    """Left fold of reversions: the first listed point acts first."""
    out = np.asarray(a, dtype=float)
    for p in word:
        out = revert(out, p)
    return out


def boost_star_shift(a, v) -> np.ndarray:
    """Star shift under a boost by velocity v: the word (origin, menhir)."""
    a = np.asarray(a, dtype=float)
    e = menhir_of(np.asarray(v, dtype=float))
    if not e.any():  # null boost: the word (o, o) is exactly the identity
        return a.copy()
    return apply_word(a, [np.zeros_like(e), e])


def two_boost_word(e, f) -> list:
    """Two boosts (e first, then f) collapse to the two-letter word (-e, f)."""
    e = _interior(np.asarray(e, dtype=float), "menhir")
    f = _interior(np.asarray(f, dtype=float), "menhir")
    return [-e, f]


def collinear(points, atol: float = 1e-10) -> bool:
    pts = np.asarray(points, dtype=float)
    centered = pts - pts.mean(axis=0)
    s = np.linalg.svd(centered, compute_uv=False)
    return bool(s.size < 2 or s[1] <= atol * max(1.0, s[0]))


def _sphere_samples(n: int, count: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    pts = rng.standard_normal((count, n))
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def butterfly_check(p, q, r, s, samples: int = 100, atol: float = 1e-9, seed: int = 0) -> bool:
    """Porism probe: for collinear p, q, r, s, does the word fix the sphere pointwise?

    The underlying porism says fixing a single point already forces the
    identity; this samples `samples` sphere points and checks them all.
    Non-collinear input is rejected, not decided.
    """
    pts = [np.asarray(x, dtype=float) for x in (p, q, r, s)]
    if not collinear(pts):
        raise ValueError("reversion points must be collinear")
    stars = _sphere_samples(pts[0].size, samples, seed)
    images = apply_word(stars, pts)
    return bool(np.abs(images - stars).max() <= atol)


def _line_intersection(p1, d1, p2, d2):
    """Least-squares meet of two lines p + t d; returns (point, residual)."""
    A = np.column_stack([d1, -d2])
    rhs = p2 - p1
    sol, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    x1 = p1 + sol[0] * d1
    x2 = p2 + sol[1] * d2
    return 0.5 * (x1 + x2), float(np.linalg.norm(x1 - x2))


def find_conjugate_point(a, b, a_new, atol: float = 1e-9) -> np.ndarray:
    """Slide the pair: b' on line(a, b) with word (a, b) == word (a_new, b').

    Solved from one sphere point (b' is where the chord from (A0 reverted
    through a_new) to (A0 reverted through a, b) crosses the line), then
    verified on independent points via the porism.
    """
    a = _interior(np.asarray(a, dtype=float))
    b = _interior(np.asarray(b, dtype=float))
    a_new = _interior(np.asarray(a_new, dtype=float), "replacement point")
    line_dir = b - a if np.linalg.norm(b - a) > 1e-14 else a_new - a
    if np.linalg.norm(line_dir) < 1e-14:
        return b.copy()  # a == b == a_new: nothing to slide
    if not collinear([a, b, a_new]):
        raise ValueError("replacement point must lie on line(a, b)")

    checks = _sphere_samples(a.size, 8, seed=3)
    for a0 in _sphere_samples(a.size, 32, seed=11):
        target = revert(revert(a0, a), b)
        xprime = revert(a0, a_new)
        chord = target - xprime
        if np.linalg.norm(chord) < 1e-9:
            continue  # a0 happens to be (nearly) fixed; pick another
        b_new, resid = _line_intersection(xprime, chord, a, line_dir)
        if resid > 1e-9:
            continue
        if np.linalg.norm(b_new) >= 1.0 - 1e-12:
            raise ConstructionError("conjugate point falls outside the open ball")
        err = np.abs(
            apply_word(checks, [a, b]) - apply_word(checks, [a_new, b_new])
        ).max()
        if err <= atol:
            return b_new
    raise ConstructionError("no conjugate point found on the line")


# -- planar constructions ---------------------------------------------------------

def _as_complex(p) -> complex:
    p = np.asarray(p, dtype=float)
    if p.shape != (2,):
        raise ValueError("planar construction requires 2-vectors")
    return complex(p[0], p[1])


def _from_complex(z: complex) -> np.ndarray:
    return np.array([z.real, z.imag])


def _revert_c(z: complex, p: complex) -> complex:
    return (z - p) / (p.conjugate() * z - 1.0)


def _two_boost_map(e: complex, f: complex):
    """Circle action of boosts e then f, i.e. the word (-e, f), on unit complex z."""
    def act(z):
        return _revert_c(_revert_c(z, -e), f)
    return act


def two_boost_fixed_points(e, f, grid: int = 512) -> tuple[np.ndarray, np.ndarray]:
    """The two fixed circle points of the composite of boosts e then f (planar).

    Located by a sign scan of the angular displacement over a uniform grid and
    bisection to 1e-12; compositions of distinct non-inverse boosts are
    hyperbolic, so exactly two fixed points exist.
    """
    ec, fc = _as_complex(e), _as_complex(f)
    act = _two_boost_map(ec, fc)

    def h(theta: float) -> float:
        z = cmath.exp(1j * theta)
        return (z.conjugate() * act(z)).imag

    def keeps_side(theta: float) -> bool:
        z = cmath.exp(1j * theta)
        return (z.conjugate() * act(z)).real > 0.0

    thetas = np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False)
    vals = np.array([h(t) for t in thetas])
    roots = []
    for i in range(grid):
        t0, t1 = thetas[i], thetas[(i + 1) % grid] + (2.0 * math.pi if i + 1 == grid else 0.0)
        v0, v1 = vals[i], vals[(i + 1) % grid]
        if v0 == 0.0:
            if keeps_side(t0):
                roots.append(t0)
            continue
        if v0 * v1 < 0.0:
            lo, hi, flo = t0, t1, v0
            while hi - lo > 1e-12:
                mid = 0.5 * (lo + hi)
                fm = h(mid)
                if fm == 0.0:
                    lo = hi = mid
                elif flo * fm < 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            root = 0.5 * (lo + hi)
            if keeps_side(root):
                roots.append(root)
    if len(roots) != 2:
        raise ConstructionError(f"expected 2 fixed points, found {len(roots)}")
    roots.sort()
    return tuple(np.array([math.cos(t), math.sin(t)]) for t in roots)


def _thomas_rho(e: complex, f: complex) -> complex:
    return (1.0 + f * e.conjugate()) / (1.0 + f.conjugate() * e)


def _compose_c(e: complex, f: complex) -> complex:
    return (e + f) / (1.0 + e.conjugate() * f)


@dataclass
class ConstructionTrace:
    """Labeled points and segments produced by a construction, for rendering."""

    points: list = field(default_factory=list)    # (label, (x, y))
    segments: list = field(default_factory=list)  # (label, (x1, y1), (x2, y2))

    def point(self, label, p):
        self.points.append((label, (float(p[0]), float(p[1]))))

    def segment(self, label, p, q):
        self.segments.append(
            (label, (float(p[0]), float(p[1])), (float(q[0]), float(q[1])))
        )


def construct_rotation(e, f, trace: ConstructionTrace | None = None):
    """Planar pair (A, B) realized by the rotational part of boosts e then f.

    A is a fixed point of the two-boost map and B its image under the
    rotational factor; the signed central angle from A to B is the Thomas
    angle.  Collinear menhirs give a trivial rotation with A = B.
    """
    e = _interior(np.asarray(e, dtype=float), "menhir")
    f = _interior(np.asarray(f, dtype=float), "menhir")
    ec, fc = _as_complex(e), _as_complex(f)
    if abs(ec.conjugate() * fc - fc.conjugate() * ec) <= 1e-14:  # collinear
        m = _compose_c(ec, fc)
        ref = m if abs(m) > 1e-14 else (ec if abs(ec) > 1e-14 else 1.0 + 0j)
        a = _from_complex(ref / abs(ref))
        if trace is not None:
            trace.point("A", a)
            trace.point("B", a)
        return a, a.copy(), 0.0
    fixed1, fixed2 = two_boost_fixed_points(e, f)
    rho = _thomas_rho(ec, fc)
    a = fixed1
    b = _from_complex(rho * _as_complex(a))
    angle = math.atan2(a[0] * b[1] - a[1] * b[0], float(a @ b))
    if trace is not None:
        trace.point("F1", fixed1)
        trace.point("F2", fixed2)
        trace.point("A", a)
        trace.point("B", b)
        trace.segment("AoB", a, b)
    return a, b, angle


def construct_composite_menhir(e, f, trace: ConstructionTrace | None = None) -> np.ndarray:
    """Composite menhir by straightedge: meet of the chords (B foe, A) and (B' foe, A').

    B is the rotated image of A, primes are antipodes, and `foe` is the word
    (f, origin, e).  Degenerate (collinear) configurations fall back to the
    algebraic value with a DegenerateConstructionWarning.
    """
    e = _interior(np.asarray(e, dtype=float), "menhir")
    f = _interior(np.asarray(f, dtype=float), "menhir")
    ec, fc = _as_complex(e), _as_complex(f)
    algebraic = _from_complex(_compose_c(ec, fc))

    def fallback(reason):
        warnings.warn(
            f"construction degenerated ({reason}); returning the algebraic value",
            DegenerateConstructionWarning,
            stacklevel=2,
        )
        return algebraic

    if abs(ec.conjugate() * fc - fc.conjugate() * ec) <= 1e-14:
        return fallback("collinear menhirs")

    a, b, _ = construct_rotation(e, f, trace)
    a2, b2 = -a, -b
    word = [f, np.zeros(2), e]
    x = apply_word(b, word)
    x2 = apply_word(b2, word)
    meet, resid = _line_intersection(x, a - x, x2, a2 - x2)
    denom = np.linalg.norm(a - x) * np.linalg.norm(a2 - x2)
    if denom < 1e-14 or resid > 1e-9:
        return fallback("parallel chords")
    if np.linalg.norm(meet) >= 1.0:
        return fallback("meet outside the disk")
    if trace is not None:
        trace.point("Bfoe", x)
        trace.point("B'foe", x2)
        trace.segment("alpha", x, a)
        trace.segment("beta", x2, a2)
        trace.point("e[+]f", meet)
    return meet
