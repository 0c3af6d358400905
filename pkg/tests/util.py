"""Shared sampling helpers for the test suite."""

import numpy as np

from menhir.algebra import vector_embed
from menhir.calculus import menhir_of


def unit_vector(rng, n):
    while True:
        d = rng.standard_normal(n)
        norm = np.linalg.norm(d)
        if norm > 1e-6:
            return d / norm


def ball_vector(rng, n, lo=0.0, hi=0.95):
    return unit_vector(rng, n) * rng.uniform(lo, hi)


def random_element(rng, algebra, scale=1.0):
    return algebra.element(rng.standard_normal(algebra.dim) * scale)


def random_menhir(rng, algebra, n, hi=0.9):
    return menhir_of(vector_embed(ball_vector(rng, n, 0.0, hi), algebra))
