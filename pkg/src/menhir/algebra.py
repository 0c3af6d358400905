"""Dense scalar arithmetic shared by every representation in the package.

Reals, complexes, quaternions and Euclidean Clifford algebras (with the sign
rule v v = -|v|^2 for vectors) are all stored the same way: a flat coefficient
array indexed by basis-blade bitmask, bit i set iff generator e_i is present.
The three division algebras are literally the 0-, 1- and 2-generator Clifford
multiplication tables; what differs between the four kinds is only the *vector
model*, i.e. which coefficients encode a spatial vector:

    real          span{1}                 model dimension 1
    complex       span{1, e1}             model dimension 2
    quaternion    span{e1, e2, e1 e2}     model dimension 3 (imaginary part)
                  full algebra            model dimension 4
    clifford(n)   span{e1, ..., en}       model dimension n

Conjugation reverses products and negates generators, hence acts on a grade-k
blade as the sign (-1)^(k(k+1)/2).  Inversion uses x*/(x x*) and is defined
exactly when x x* lands on a nonzero scalar: every nonzero division-algebra
element, and Clifford scalars, vectors, and scalar-plus-simple-bivector
elements such as the 1 - e f denominators produced by the composition law.
General multivector inversion is deliberately out of scope.
"""

from __future__ import annotations

import functools

import numpy as np

__all__ = [
    "Algebra",
    "AlgebraMismatchError",
    "Element",
    "REAL",
    "COMPLEX",
    "QUATERNION",
    "SingularElementError",
    "UnsupportedDimensionError",
    "clifford",
    "vector_embed",
    "vector_part",
]

# 2**10 blade coefficients; far beyond the desk scale this package targets.
_MAX_GENERATORS = 10


class AlgebraMismatchError(ValueError):
    """Operands live in different algebras."""


class SingularElementError(ZeroDivisionError):
    """Element has no inverse of the supported (rationalizable) form."""


class UnsupportedDimensionError(ValueError):
    """Vector length does not fit the algebra's vector model."""


def _blade_sign_table(n_gen: int) -> np.ndarray:
    """Sign of e_A e_B for blade bitmasks A, B, with every generator squaring to -1."""
    dim = 1 << n_gen
    table = np.empty((dim, dim))
    for a in range(dim):
        for b in range(dim):
            swaps = int(a & b).bit_count()  # each shared generator contributes e_i^2 = -1
            x = a >> 1
            while x:
                swaps += int(x & b).bit_count()
                x >>= 1
            table[a, b] = -1.0 if swaps & 1 else 1.0
    return table


class Algebra:
    """Multiplication and conjugation tables over 2**n_gen basis blades."""

    __slots__ = ("kind", "n_gen", "dim", "_sign", "_xor", "conj_sign", "grades", "blade_names")

    def __init__(self, kind: str, n_gen: int):
        if kind not in ("real", "complex", "quaternion", "clifford"):
            raise ValueError(f"unknown algebra kind {kind!r}")
        if not 0 <= n_gen <= _MAX_GENERATORS:
            raise UnsupportedDimensionError(f"at most {_MAX_GENERATORS} generators supported")
        self.kind = kind
        self.n_gen = n_gen
        self.dim = 1 << n_gen
        self._sign = _blade_sign_table(n_gen)
        idx = np.arange(self.dim)
        self._xor = idx[:, None] ^ idx[None, :]
        self.grades = np.array([int(i).bit_count() for i in idx])
        # (-1)^(k(k+1)/2): + - - + repeating in the grade
        self.conj_sign = np.where(np.isin(self.grades % 4, (0, 3)), 1.0, -1.0)
        self.blade_names = self._names()

    def _names(self):
        if self.kind == "quaternion":
            return ["1", "i", "j", "k"]
        if self.kind == "complex":
            return ["1", "i"]
        if self.kind == "real":
            return ["1"]
        out = []
        for mask in range(self.dim):
            gens = [str(i + 1) for i in range(self.n_gen) if mask >> i & 1]
            out.append("e" + "".join(gens) if gens else "1")
        return out

    def __repr__(self):
        if self.kind == "clifford":
            return f"clifford({self.n_gen})"
        return self.kind.upper()

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.kind == other.kind and self.n_gen == other.n_gen

    def __hash__(self):
        return hash((self.kind, self.n_gen))

    # -- construction -------------------------------------------------------

    def scalar(self, s: float) -> "Element":
        coeffs = np.zeros(self.dim)
        coeffs[0] = s
        return Element(self, coeffs)

    @property
    def one(self) -> "Element":
        return self.scalar(1.0)

    @property
    def zero(self) -> "Element":
        return self.scalar(0.0)

    def element(self, coeffs) -> "Element":
        return Element(self, np.asarray(coeffs, dtype=float))

    def basis_blade(self, mask: int) -> "Element":
        coeffs = np.zeros(self.dim)
        coeffs[mask] = 1.0
        return Element(self, coeffs)

    def model_indices(self, model_dim: int) -> np.ndarray:
        """Coefficient slots representing a vector of the given spatial dimension."""
        kind = self.kind
        if kind == "real" and model_dim == 1:
            return np.array([0])
        if kind == "complex" and model_dim in (1, 2):
            return np.arange(model_dim)
        if kind == "quaternion" and model_dim in (3, 4):
            return np.arange(4 - model_dim, 4)  # (1,2,3) imaginary or (0,1,2,3) full
        if kind == "clifford" and model_dim == self.n_gen:
            return np.array([1 << i for i in range(self.n_gen)])
        raise UnsupportedDimensionError(
            f"{self!r} has no {model_dim}-dimensional vector model"
        )

    def default_model_dim(self) -> int:
        return {"real": 1, "complex": 2, "quaternion": 3, "clifford": self.n_gen}[self.kind]

    # -- coefficient-level product ------------------------------------------

    def mul_coeffs(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = np.zeros(self.dim)
        for i in np.flatnonzero(a):
            out[self._xor[i]] += a[i] * (self._sign[i] * b)
        return out


REAL = Algebra("real", 0)
COMPLEX = Algebra("complex", 1)
QUATERNION = Algebra("quaternion", 2)


@functools.lru_cache(maxsize=None)
def clifford(n: int) -> Algebra:
    """The universal Clifford algebra of Euclidean R^n, generators squaring to -1."""
    if n < 1:
        raise UnsupportedDimensionError("clifford algebra needs at least one generator")
    return Algebra("clifford", n)


class Element:
    """A value in one of the supported algebras, as a flat blade-coefficient array.

    Elements are immutable by convention.  `*` is the algebra product, `/` is
    right division p q^{-1} (the fraction convention used throughout), and
    plain numbers coerce to scalars of the same algebra.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs: np.ndarray):
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.shape != (algebra.dim,):
            raise ValueError(f"expected {algebra.dim} coefficients, got {coeffs.shape}")
        self.algebra = algebra
        self.coeffs = coeffs

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.algebra != self.algebra:
                raise AlgebraMismatchError(
                    f"cannot combine {self.algebra!r} with {other.algebra!r}"
                )
            return other
        if isinstance(other, (int, float, np.integer, np.floating)):
            return self.algebra.scalar(float(other))
        return NotImplemented

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.algebra, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.algebra, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.algebra, other.coeffs - self.coeffs)

    def __neg__(self):
        return Element(self.algebra, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, float, np.integer, np.floating)):
            return Element(self.algebra, self.coeffs * float(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.algebra, self.algebra.mul_coeffs(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.integer, np.floating)):
            return Element(self.algebra, self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other):
        """Right division p/q = p q^{-1}."""
        if isinstance(other, (int, float, np.integer, np.floating)):
            return Element(self.algebra, self.coeffs / float(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, float, np.integer, np.floating)):
            return self.algebra.scalar(float(other)) * self.inverse()
        return NotImplemented

    # -- involutions and norms ------------------------------------------------

    def conjugate(self) -> "Element":
        return Element(self.algebra, self.coeffs * self.algebra.conj_sign)

    def norm_sq(self) -> float:
        """Sum of squared coefficients; equals x x* whenever that product is scalar."""
        return float(self.coeffs @ self.coeffs)

    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq()))

    def inverse(self, rtol: float = 1e-10) -> "Element":
        """x*/(x x*), valid when x x* is a nonzero scalar (division scalars,
        Clifford scalars/vectors, and rationalizable scalar+bivector elements)."""
        conj = self.conjugate()
        prod = self * conj
        s = prod.coeffs[0]
        rest = np.abs(prod.coeffs[1:]).max() if self.algebra.dim > 1 else 0.0
        scale = max(1.0, abs(s))
        if abs(s) < 1e-300 or rest > rtol * scale:
            raise SingularElementError(f"element is not rationalizable: {self!r}")
        return Element(self.algebra, conj.coeffs / s)

    # -- parts ----------------------------------------------------------------

    def scalar_part(self) -> float:
        return float(self.coeffs[0])

    def grade_part(self, k: int) -> "Element":
        coeffs = np.where(self.algebra.grades == k, self.coeffs, 0.0)
        return Element(self.algebra, coeffs)

    def is_scalar(self, atol: float = 1e-12) -> bool:
        return bool(np.abs(self.coeffs[1:]).max(initial=0.0) <= atol)

    # -- comparison helpers -----------------------------------------------------

    def allclose(self, other, atol: float = 1e-12) -> bool:
        other = self._coerce(other)
        return bool(np.abs(self.coeffs - other.coeffs).max() <= atol)

    def max_diff(self, other) -> float:
        other = self._coerce(other)
        return float(np.abs(self.coeffs - other.coeffs).max())

    def __repr__(self):
        terms = []
        for c, name in zip(self.coeffs, self.algebra.blade_names):
            if c != 0.0:
                terms.append(f"{c:g}{'' if name == '1' else name}")
        return "<" + (" + ".join(terms) if terms else "0") + f" in {self.algebra!r}>"


def vector_embed(v, algebra: Algebra) -> Element:
    """Embed a real vector into the algebra's vector model (length selects the model)."""
    v = np.atleast_1d(np.asarray(v, dtype=float))
    idx = algebra.model_indices(len(v))
    coeffs = np.zeros(algebra.dim)
    coeffs[idx] = v
    return Element(algebra, coeffs)


def vector_part(x: Element, model_dim: int | None = None, atol: float = 1e-9) -> np.ndarray:
    """Extract the real vector from an element of the vector model.

    Raises if coefficients outside the model exceed `atol` (the element is not
    a vector of the requested kind).  For quaternions the model dimension is
    ambiguous; it defaults to 3 when the scalar part vanishes, else 4.
    """
    if model_dim is None:
        if x.algebra.kind == "quaternion":
            model_dim = 3 if abs(x.coeffs[0]) <= atol else 4
        else:
            model_dim = x.algebra.default_model_dim()
    idx = x.algebra.model_indices(model_dim)
    rest = np.delete(x.coeffs, idx)
    if rest.size and np.abs(rest).max() > atol:
        raise ValueError(f"element is not a {model_dim}-vector: {x!r}")
    return x.coeffs[idx].copy()
