"""Exact linear algebra over the rationals.

Matrices are dense numpy arrays with dtype=object holding Fractions, so
`@`, slicing and broadcasting work while every value stays exact.
"""
from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Iterable

import numpy as np

try:                                    # gmpy2 rationals are ~10x faster and
    from gmpy2 import mpq as Q          # hash/equality compatible with Fraction
except ImportError:                     # pragma: no cover
    Q = Fraction

# An endomorphism is just a square rational matrix.
Endo = np.ndarray


def qarray(rows) -> np.ndarray:
    """Coerce nested ints/strings/Fractions to an object array of Fractions."""
    arr = np.array(rows, dtype=object)
    flat = arr.reshape(-1)
    for k, v in enumerate(flat):
        flat[k] = v if isinstance(v, Q) else Q(v)
    return flat.reshape(arr.shape)


def zeros(*shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr[...] = Q(0)
    return arr


def eye(n: int) -> np.ndarray:
    arr = zeros(n, n)
    for i in range(n):
        arr[i, i] = Q(1)
    return arr


def is_zero(a: np.ndarray) -> bool:
    return all(v == 0 for v in a.reshape(-1))


def det(a: np.ndarray) -> Q:
    """Determinant by fraction Gaussian elimination."""
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("det needs a square matrix")
    m = a.copy()
    sign = 1
    out = Q(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r, c] != 0), None)
        if piv is None:
            return Q(0)
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
            sign = -sign
        out *= m[c, c]
        inv_p = 1 / m[c, c]
        for r in range(c + 1, n):
            if m[r, c] != 0:
                m[r, c:] = m[r, c:] - (m[r, c] * inv_p) * m[c, c:]
    return sign * out


def _rref(a: np.ndarray):
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    m = a.copy()
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i, c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] / m[r, c]
        for i in range(rows):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return len(_rref(a)[1])


def solve(a: np.ndarray, b: np.ndarray):
    """One exact solution of a x = b, or None if the system is inconsistent.

    Works for any shape; free variables are set to zero.
    """
    rows, cols = a.shape
    vector_rhs = b.ndim == 1
    b = b.reshape(rows, -1)
    aug = np.concatenate([a, b], axis=1)
    red, pivots = _rref(aug)
    for c in pivots:
        if c >= cols:
            return None
    x = zeros(cols, b.shape[1])
    for r, c in enumerate(pivots):
        x[c, :] = red[r, cols:]
    return x[:, 0] if vector_rhs else x


def inv(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    aug = np.concatenate([a, eye(n)], axis=1)
    red, pivots = _rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return red[:, n:]


def nullspace(a: np.ndarray) -> list:
    """Basis of the right kernel, one vector per free column."""
    rows, cols = a.shape
    red, pivots = _rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = zeros(cols)
        v[f] = Q(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r, f]
        basis.append(v)
    return basis


class Span:
    """Incrementally maintained row space with exact membership tests."""

    def __init__(self, dim: int, vectors: Iterable = ()):  # noqa: D401
        self.dim = dim
        self._rows = []   # reduced rows, each with a recorded pivot column
        self._pivots = []
        for v in vectors:
            self.add(v)

    def _reduce(self, vec: np.ndarray) -> np.ndarray:
        v = vec.copy()
        for row, p in zip(self._rows, self._pivots):
            if v[p] != 0:
                v = v - v[p] * row
        return v

    def add(self, vec) -> bool:
        """Insert a vector; True when it enlarged the span."""
        v = self._reduce(np.asarray(vec, dtype=object))
        piv = next((i for i in range(self.dim) if v[i] != 0), None)
        if piv is None:
            return False
        v = v / v[piv]
        for k, row in enumerate(self._rows):
            if row[piv] != 0:
                self._rows[k] = row - row[piv] * v
        self._rows.append(v)
        self._pivots.append(piv)
        return True

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self._reduce(np.asarray(vec, dtype=object)))

    def __len__(self) -> int:
        return len(self._rows)

    def covers(self, other: "Span") -> bool:
        return all(self.contains(r) for r in other._rows)

    def equals(self, other: "Span") -> bool:
        return len(self) == len(other) and self.covers(other)


def rat_str(q: Q) -> str:
    """Serialize a rational as "p/q" in lowest terms, sign on p."""
    q = Q(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(s) -> Q:
    """Parse "p/q", a bare integer string, or any exact rational number."""
    if isinstance(s, numbers.Rational):
        return Q(s)
    return Q(str(s))
