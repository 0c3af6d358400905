"""Randomized equivalence trials between the menhir calculus and Lorentz matrices.

Each trial draws a velocity pair, composes it once through menhirs and once by
multiplying explicit boost matrices, and compares the resulting velocity and
rotation.  Trials are independently seeded (master seed XOR trial index) so a
run is deterministic regardless of execution order or parallelism.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import Algebra, COMPLEX, QUATERNION, REAL, clifford, vector_embed, vector_part
from .calculus import (
    MoebiusMatrix,
    compose_menhirs,
    menhir_of,
    moebius_apply,
    thomas_rotation,
    velocity_of,
)
from .lorentz import aberrate_ray, boost_matrix, polar_decompose
from .reversions import boost_star_shift

__all__ = [
    "CONFIGS",
    "RunReport",
    "aberration_trial",
    "composition_trial",
    "run_equivalence",
    "sample_direction",
    "sample_velocity",
]

#: algebra and spatial dimension for each verification lane
CONFIGS: dict[str, tuple[Algebra, int]] = {
    "real": (REAL, 1),
    "complex": (COMPLEX, 2),
    "imquaternion": (QUATERNION, 3),
    "quaternion": (QUATERNION, 4),
    "clifford2": (clifford(2), 2),
    "clifford3": (clifford(3), 3),
    "clifford4": (clifford(4), 4),
    "clifford5": (clifford(5), 5),
}

#: speed ranges and tolerances per tier; conditioning degrades near the cone
TIERS = {
    "normal": (0.0, 0.95, 1e-9),
    "stress": (0.95, 1.0 - 1e-6, 1e-6),
}


def sample_direction(rng: np.random.Generator, n: int) -> np.ndarray:
    while True:
        d = rng.standard_normal(n)
        norm = np.linalg.norm(d)
        if norm > 1e-6:
            return d / norm


def sample_velocity(rng: np.random.Generator, n: int, lo: float, hi: float) -> np.ndarray:
    return sample_direction(rng, n) * rng.uniform(lo, hi)


def composition_trial(rng: np.random.Generator, key: str, tier: str = "normal"):
    """One equivalence trial; returns (velocity error, rotation error, v, w)."""
    algebra, n = CONFIGS[key]
    lo, hi, _ = TIERS[tier]
    v = sample_velocity(rng, n, lo, hi)
    w = sample_velocity(rng, n, lo, hi)

    ev = menhir_of(vector_embed(v, algebra))
    ew = menhir_of(vector_embed(w, algebra))
    u_menhir = vector_part(velocity_of(compose_menhirs(ev, ew)), n, atol=1e-6)
    spatial = thomas_rotation(ev, ew).matrix(n)

    rotation, u_oracle = polar_decompose(boost_matrix(w) @ boost_matrix(v))
    v_err = float(np.abs(u_menhir - u_oracle).max())
    r_err = float(np.abs(spatial - rotation[1:, 1:]).max())
    return v_err, r_err, v, w


def aberration_trial(rng: np.random.Generator, key: str, tier: str = "normal"):
    """Three-way star-shift comparison: reversion word, Moebius map, null-ray oracle."""
    algebra, n = CONFIGS[key]
    lo, hi, _ = TIERS[tier]
    v = sample_velocity(rng, n, lo, hi)
    star = sample_direction(rng, n)

    by_word = boost_star_shift(star, v)
    matrix = MoebiusMatrix.boost(menhir_of(vector_embed(v, algebra)))
    by_moebius = vector_part(moebius_apply(matrix, vector_embed(star, algebra)), n, atol=1e-6)
    by_oracle = aberrate_ray(boost_matrix(v), star)
    spread = max(
        float(np.abs(by_word - by_moebius).max()),
        float(np.abs(by_word - by_oracle).max()),
        float(np.abs(by_moebius - by_oracle).max()),
    )
    return spread, v, star


@dataclass
class RunReport:
    """Outcome of a batch of equivalence trials."""

    trials: int
    max_velocity_error: float = 0.0
    max_rotation_error: float = 0.0
    failures: list = field(default_factory=list)  # (trial_seed, inputs, errors)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_equivalence(
    key: str,
    trials: int,
    seed: int,
    tier: str = "normal",
    tolerance: float | None = None,
) -> RunReport:
    """Run `trials` oracle-equivalence trials for one configuration."""
    if trials < 1:
        raise ValueError("at least one trial is required")
    if key not in CONFIGS:
        raise ValueError(f"unknown configuration {key!r}; choose from {sorted(CONFIGS)}")
    if tier not in TIERS:
        raise ValueError(f"unknown tier {tier!r}")
    tol = TIERS[tier][2] if tolerance is None else tolerance

    report = RunReport(trials=trials)
    for index in range(trials):
        trial_seed = seed ^ index
        rng = np.random.default_rng(trial_seed)
        v_err, r_err, v, w = composition_trial(rng, key, tier)
        report.max_velocity_error = max(report.max_velocity_error, v_err)
        report.max_rotation_error = max(report.max_rotation_error, r_err)
        if v_err > tol or r_err > tol:
            report.failures.append(
                (trial_seed, {"v": v.tolist(), "w": w.tolist()}, {"velocity": v_err, "rotation": r_err})
            )
    return report
