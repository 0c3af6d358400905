"""Velocity composition in the unit-ball picture.

A velocity is an element of the open unit ball of an algebra's vector model
(speed of light = 1).  Its *menhir* is the radially rescaled point
e = v/(1 + sqrt(1 - |v|^2)); menhirs compose by the Poincare-like law

    e1 [+] e2 = (e1 + e2) (1 + conj(e1) e2)^{-1}

with e1 the boost applied first.  The residual Thomas rotation is carried by
the pair (1 + e2 conj(e1), 1 + conj(e2) e1) acting as a sandwich z -> a z b^{-1},
and both facts live inside one matrix identity

    M(e2) M(e1) = R(alpha, beta) M(e1 [+] e2),      M(e) = [[1, e], [e*, 1]]

which holds entrywise in every supported algebra.  Functions here operate on
`Element` values; the radial maps also accept plain vectors.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .algebra import Element, vector_embed, vector_part

__all__ = [
    "DecomposedTransform",
    "MoebiusMatrix",
    "RotationDescriptor",
    "SuperluminalError",
    "compose_menhirs",
    "compose_velocities",
    "master_decompose",
    "menhir_gap",
    "menhir_of",
    "moebius_apply",
    "refine_gap_argmax",
    "rotation_axis_angle",
    "thomas_rotation",
    "velocity_of",
]

# The menhir map has a square-root singularity at |v| = 1.
SUPERLUMINAL_EDGE = 1.0 - 1e-12


class SuperluminalError(ValueError):
    """Input speed at or beyond the speed of light."""


def _norm(x) -> float:
    if isinstance(x, Element):
        return x.norm()
    return float(np.linalg.norm(np.asarray(x, dtype=float)))


def _check_ball(x, what: str):
    n = _norm(x)
    if n >= SUPERLUMINAL_EDGE:
        raise SuperluminalError(f"|{what}| = {n!r} is not strictly below 1")
    return n


def menhir_of(v):
    """Menhir of a velocity: e = v / (1 + sqrt(1 - |v|^2)).

    Accepts an `Element` of a vector model or a plain real vector; the result
    is the same kind of object, parallel to the input.
    """
    n = _check_ball(v, "velocity")
    return v * (1.0 / (1.0 + math.sqrt(1.0 - n * n)))


def velocity_of(e):
    """Velocity of a menhir: v = 2 e / (1 + |e|^2).  Inverse of `menhir_of`."""
    n = _check_ball(e, "menhir")
    return e * (2.0 / (1.0 + n * n))


def compose_menhirs(e1: Element, e2: Element) -> Element:
    """Menhir of the composite boost: e1 applied first, then e2.

    (e1 + e2)(1 + conj(e1) e2)^{-1}; over Clifford vectors the denominator is
    the familiar 1 - e1 e2.
    """
    _check_ball(e1, "menhir")
    _check_ball(e2, "menhir")
    return (e1 + e2) / (1.0 + e1.conjugate() * e2)


class RotationDescriptor:
    """The rotational factor of a two-boost composition, as a sandwich pair.

    Acts on sphere points by z -> alpha z beta^{-1}.  Over the complexes this
    collapses to multiplication by the unit number rho = alpha/beta; over
    imaginary quaternions and Clifford vectors alpha = beta and the action is
    the familiar conjugation sandwich.
    """

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha: Element, beta: Element):
        self.alpha = alpha
        self.beta = beta

    @property
    def algebra(self):
        return self.alpha.algebra

    def apply(self, z: Element) -> Element:
        return self.alpha * z * self.beta.inverse()

    def rho(self) -> Element:
        """alpha / beta; over the reals and complexes this is the unit rotation number."""
        return self.alpha / self.beta

    def matrix(self, model_dim: int) -> np.ndarray:
        """Orthogonal matrix of the sandwich action on the model vector space."""
        cols = []
        n = model_dim
        beta_inv = self.beta.inverse()
        for k in range(n):
            basis = vector_embed(np.eye(n)[k], self.algebra)
            cols.append(vector_part(self.alpha * basis * beta_inv, n, atol=1e-6))
        return np.column_stack(cols)

    def angle(self, model_dim: int | None = None) -> float:
        """Rotation angle: signed in the plane for the complex model, else the
        unsigned principal angle (two-boost rotations are simple rotations)."""
        kind = self.algebra.kind
        if kind == "real":
            return 0.0
        if kind == "complex":
            r = self.rho()
            return math.atan2(r.coeffs[1], r.coeffs[0])
        if model_dim is None:
            model_dim = self.algebra.default_model_dim()
        o = self.matrix(model_dim)
        c = (np.trace(o) - (model_dim - 2)) / 2.0
        return float(np.arccos(np.clip(c, -1.0, 1.0)))

    def __repr__(self):
        return f"RotationDescriptor(alpha={self.alpha!r}, beta={self.beta!r})"


def thomas_rotation(e1: Element, e2: Element) -> RotationDescriptor:
    """Rotation left over after composing boost e1 (first) with boost e2."""
    _check_ball(e1, "menhir")
    _check_ball(e2, "menhir")
    alpha = 1.0 + e2 * e1.conjugate()
    beta = 1.0 + e2.conjugate() * e1
    return RotationDescriptor(alpha, beta)


class MoebiusMatrix:
    """2x2 matrix over an algebra acting fractionally: z -> (a z + b)(c z + d)^{-1}."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: Element, b: Element, c: Element, d: Element):
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def boost(cls, eps: Element) -> "MoebiusMatrix":
        one = eps.algebra.one
        return cls(one, eps, eps.conjugate(), one)

    @classmethod
    def rotation(cls, alpha: Element, beta: Element) -> "MoebiusMatrix":
        zero = alpha.algebra.zero
        return cls(alpha, zero, zero, beta)

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "MoebiusMatrix") -> "MoebiusMatrix":
        return MoebiusMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, z: Element, atol: float = 1e-9) -> Element:
        return moebius_apply(self, z, atol=atol)

    def normalized(self) -> "MoebiusMatrix":
        """Projective normal form: rows left-divided by their leading entries."""
        ai = self.a.inverse()
        di = self.d.inverse()
        one = self.a.algebra.one
        return MoebiusMatrix(one, ai * self.b, di * self.c, one)

    def max_diff(self, other: "MoebiusMatrix") -> float:
        return max(p.max_diff(q) for p, q in zip(self.entries, other.entries))

    def allclose(self, other: "MoebiusMatrix", atol: float = 1e-12) -> bool:
        return self.max_diff(other) <= atol

    def __repr__(self):
        return f"[[{self.a!r}, {self.b!r}], [{self.c!r}, {self.d!r}]]"


def moebius_apply(m: MoebiusMatrix, z: Element, atol: float = 1e-9) -> Element:
    """Fractional-linear action of a boost/rotation matrix on a unit sphere point."""
    if abs(z.norm() - 1.0) > atol:
        raise ValueError(f"sphere point must have unit norm, got {z.norm()!r}")
    return (m.a * z + m.b) * (m.c * z + m.d).inverse()


class DecomposedTransform(NamedTuple):
    rotation: MoebiusMatrix
    boost: MoebiusMatrix


def master_decompose(e1: Element, e2: Element) -> DecomposedTransform:
    """Split M(e2) M(e1) into rotation times boost; the product of the returned
    parts reproduces the composed matrix entrywise."""
    rot = thomas_rotation(e1, e2)
    return DecomposedTransform(
        rotation=MoebiusMatrix.rotation(rot.alpha, rot.beta),
        boost=MoebiusMatrix.boost(compose_menhirs(e1, e2)),
    )


def compose_velocities(v: Element, w: Element):
    """Relativistic composition: velocity of (boost v then boost w) plus the
    Thomas rotation, both via the menhir route."""
    ev = menhir_of(v)
    ew = menhir_of(w)
    return velocity_of(compose_menhirs(ev, ew)), thomas_rotation(ev, ew)


def rotation_axis_angle(e1: Element, e2: Element, atol: float = 1e-12):
    """Axis and angle of the Thomas rotation for purely imaginary quaternion menhirs.

    The sandwich element is q = 1 - e2 e1; axis = normalized Im q (None when the
    rotation is trivial), angle = 2 arccos(Re q / |q|) in [0, pi).
    """
    for e in (e1, e2):
        if e.algebra.kind != "quaternion" or abs(e.coeffs[0]) > atol:
            raise ValueError("menhirs must be purely imaginary quaternions")
    q = 1.0 - e2 * e1
    qn = q.norm()
    angle = 2.0 * math.acos(min(1.0, max(-1.0, q.scalar_part() / qn)))
    im = q.coeffs[1:]
    im_norm = float(np.linalg.norm(im))
    if im_norm <= 1e-14 * qn:
        return None, 0.0
    return im / im_norm, angle


# -- menhir/velocity discrepancy ------------------------------------------------

def menhir_gap(v):
    """v - |menhir_of(v)| for speeds v in [0, 1); vectorizes over arrays."""
    v = np.asarray(v, dtype=float)
    return v - v / (1.0 + np.sqrt(1.0 - v * v))


def _gap_slope(v: float) -> float:
    s = math.sqrt(1.0 - v * v)
    return 1.0 - 1.0 / (s * (1.0 + s))


def refine_gap_argmax(lo: float = 0.0, hi: float = 1.0) -> float:
    """Speed maximizing the velocity/menhir discrepancy.

    Golden-section search, polished by a bisection on the derivative sign
    (golden-section alone stalls near sqrt(machine eps) on the flat maximum).
    """
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = menhir_gap(c), menhir_gap(d)
    while b - a > 1e-11:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = menhir_gap(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = menhir_gap(d)
    v = 0.5 * (a + b)
    lo, hi = max(1e-9, v - 1e-6), min(1.0 - 1e-9, v + 1e-6)
    if _gap_slope(lo) > 0.0 > _gap_slope(hi):
        for _ in range(100):
            mid = 0.5 * (lo + hi)
            if _gap_slope(mid) > 0.0:
                lo = mid
            else:
                hi = mid
        v = 0.5 * (lo + hi)
    return v
