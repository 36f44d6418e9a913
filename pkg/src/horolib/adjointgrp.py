"""Exact group elements acting on an algebra in the adjoint representation.

Everything here is an invertible rational matrix on the algebra basis:
exponentials of nilpotent elements (finite series), torus elements, Weyl
group representatives, and the factorization through the open opposite
cell for gradings of depth one or two.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from math import factorial

import numpy as np

from . import linalg, splitlie
from .linalg import Q
from .splitlie import AlgElement, GradedDecomposition, SplitLieAlgebra


@dataclass(frozen=True)
class GroupElement:
    """Invertible rational matrix acting on the algebra basis."""

    algebra: SplitLieAlgebra
    mat: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=object)
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        self._same(other)
        return GroupElement(self.algebra, self.mat @ other.mat)

    __mul__ = __matmul__

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and other.algebra is self.algebra
                and self.mat.shape == other.mat.shape
                and bool((self.mat == other.mat).all()))

    def __hash__(self):
        return hash(tuple(self.mat.reshape(-1)))

    def _same(self, other):
        if not isinstance(other, GroupElement) or other.algebra is not self.algebra:
            raise ValueError("group elements act on different algebras")

    def inverse(self) -> "GroupElement":
        return GroupElement(self.algebra, linalg.inv(self.mat))

    def apply(self, x: AlgElement) -> AlgElement:
        return AlgElement(self.algebra, tuple(self.mat @ x.vec()))

    def is_automorphism(self) -> bool:
        """Exhaustive bracket-preservation over all basis pairs."""
        alg = self.algebra
        for p in range(alg.dim):
            xp = self.apply(alg.basis_vector(p))
            for q in range(p + 1, alg.dim):
                lhs_terms = alg.bracket_basis(p, q)
                lhs = [Q(0)] * alg.dim
                for k, c in lhs_terms:
                    lhs[k] = c
                lhs_img = self.mat @ np.array(lhs, dtype=object)
                rhs = alg.bracket(xp, self.apply(alg.basis_vector(q)))
                if tuple(lhs_img) != rhs.coeffs:
                    return False
        return True

    def to_json(self) -> dict:
        return {"algebra": self.algebra.describe(),
                "matrix": [[linalg.rat_str(v) for v in row] for row in self.mat]}


def identity(algebra: SplitLieAlgebra) -> GroupElement:
    return GroupElement(algebra, linalg.eye(algebra.dim))


def exp_nilpotent(n: np.ndarray, dim_bound: int) -> np.ndarray:
    """Finite exponential series of a verified-nilpotent matrix."""
    size = n.shape[0]
    out = linalg.eye(size)
    power = linalg.eye(size)
    for k in range(1, dim_bound + 1):
        power = power @ n
        if linalg.is_zero(power):
            return out
        out = out + Q(1, factorial(k)) * power
    raise ValueError(
        f"matrix is not nilpotent: its power {dim_bound} is still nonzero")


def exp_ad(x: AlgElement) -> GroupElement:
    """exp(ad x) as an exact finite sum; rejects non-nilpotent arguments."""
    alg = x.algebra
    n = alg.ad(x)
    return GroupElement(alg, exp_nilpotent(n, alg.dim))


def torus_element(h: AlgElement, t) -> GroupElement:
    """Diagonal automorphism scaling each root space by t**(eigenvalue of ad h)."""
    t = Q(t)
    if t == 0:
        raise ValueError("torus parameter must be nonzero")
    alg = h.algebra
    adh = alg.ad(h)
    mat = linalg.zeros(alg.dim, alg.dim)
    for k in range(alg.dim):
        for l in range(alg.dim):
            if k != l and adh[k, l] != 0:
                raise ValueError("ad(h) is not diagonal on the root-space basis")
        ev = adh[k, k]
        if ev.denominator != 1:
            raise ValueError(f"ad(h) has non-integer eigenvalue {ev}")
        mat[k, k] = t ** int(ev)
    return GroupElement(alg, mat)


def _simple_reflection_rep(algebra: SplitLieAlgebra, i: int) -> GroupElement:
    """exp(e) exp(-f) exp(e) for the i-th simple root pair (0-based)."""
    simple = splitlie.rootsys.Root(
        tuple(1 if t == i else 0 for t in range(algebra.rank)))
    e = algebra.root_vector(simple)
    f = algebra.root_vector(-simple)
    return exp_ad(e) @ exp_ad(-1 * f) @ exp_ad(e)


def weyl_representative(algebra: SplitLieAlgebra, word) -> GroupElement:
    """Product of standard simple-reflection representatives along a word.

    The word lists 0-based simple-root indices, leftmost factor first, so
    the result maps the root space of alpha onto that of word(alpha).
    """
    out = identity(algebra)
    for i in word:
        out = out @ _simple_reflection_rep(algebra, int(i))
    return out


@functools.lru_cache(maxsize=None)
def w0_representative(algebra: SplitLieAlgebra) -> GroupElement:
    """Representative of the longest Weyl element on the canonical greedy word."""
    return weyl_representative(algebra, algebra.rootsystem.w0_word)


# ---------------------------------------------------------------------------
# opposite-cell factorization

def _block(mat, rows, cols):
    return mat[np.ix_(rows, cols)]


def _solve_lower_part(alg, dec, level_from, level_to, target):
    """Find y supported on level (level_to - level_from) with ad(y) matching
    the given (level_to x level_from) block; None when inconsistent."""
    src = dec.indices(level_from)
    dst = dec.indices(level_to)
    unknown = dec.indices(level_to - level_from)
    if not unknown:
        return None if not linalg.is_zero(target) else ()
    cols = []
    for u in unknown:
        block = linalg.zeros(len(dst), len(src))
        for cj, q in enumerate(src):
            for k, c in alg.bracket_basis(u, q):
                if k in dst:
                    block[dst.index(k), cj] = c
        cols.append(block.reshape(-1))
    a = np.stack(cols, axis=1)
    sol = linalg.solve(a, target.reshape(-1))
    if sol is None:
        return None
    return tuple(zip(unknown, sol))


def opposite_cell_factor(g: GroupElement, dec: GradedDecomposition):
    """Factor g = v l u with v, u unipotent of negative/positive level and
    l level-preserving; returns None when g lies outside the open cell.

    Supported for gradings of depth one and two.  The negative factor is
    recovered from the action on the top level, so existence is governed
    by invertibility of the top-level corner of g.
    """
    alg = g.algebra
    s = dec.depth
    if s not in (1, 2):
        raise ValueError(f"factorization supports depth 1 or 2, got {s}")
    z = dec.z_indices
    corner = _block(g.mat, z, z)
    if linalg.det(corner) == 0:
        return None

    # T = columns of g on the top level, normalized to be the identity there;
    # its lower graded components are the series coefficients of the v factor.
    t_cols = g.mat[:, z] @ linalg.inv(corner)
    y_coeffs = {}
    for j in range(1, 2 * s + 1):
        level = s - j
        rows = dec.indices(level)
        if not rows:
            continue
        target = t_cols[np.ix_(rows, range(len(z)))].copy()
        # subtract contributions of already-determined components of y
        target -= _series_block(alg, dec, y_coeffs, rows)
        if j <= s:
            sol = _solve_lower_part(alg, dec, s, level, target)
            if sol is None:
                return None
            for k, c in sol:
                if c != 0:
                    y_coeffs[k] = y_coeffs.get(k, Q(0)) + c
        elif not linalg.is_zero(target):
            return None

    y = [Q(0)] * alg.dim
    for k, c in y_coeffs.items():
        y[k] = c
    v = exp_ad(AlgElement(alg, tuple(y)))
    w = v.inverse().mat @ g.mat

    # the remaining factor l u may only map level j into levels >= j
    levels = sorted(dec.pieces)
    for lj in levels:
        for lk in levels:
            if lk < lj and not linalg.is_zero(
                    _block(w, dec.indices(lk), dec.indices(lj))):
                return None
    lmat = linalg.zeros(alg.dim, alg.dim)
    for lj in levels:
        idx = dec.indices(lj)
        blk = _block(w, idx, idx)
        if linalg.det(blk) == 0:
            return None
        lmat[np.ix_(idx, idx)] = blk
    lfac = GroupElement(alg, lmat)
    ufac = GroupElement(alg, linalg.inv(lmat) @ w)
    for lj in levels:
        for lk in levels:
            blk = _block(ufac.mat, dec.indices(lk), dec.indices(lj))
            if lk < lj and not linalg.is_zero(blk):
                return None
    if not (v @ lfac @ ufac) == g:
        return None                                     # pragma: no cover
    return v, lfac, ufac


def _series_block(alg, dec, y_coeffs, rows):
    """Rows of exp(ad y) restricted to columns from the top level."""
    z = dec.z_indices
    if not y_coeffs:
        return linalg.zeros(len(rows), len(z))
    y = [Q(0)] * alg.dim
    for k, c in y_coeffs.items():
        y[k] = c
    n = alg.ad(AlgElement(alg, tuple(y)))
    cols = linalg.zeros(alg.dim, len(z))
    for j, k in enumerate(z):
        cols[k, j] = Q(1)
    total = cols.copy()
    power = cols
    fact = 1
    for k in range(1, 2 * dec.depth + 1):
        power = n @ power
        fact *= k
        if linalg.is_zero(power):
            break
        total = total + Q(1, fact) * power
    return total[np.ix_(rows, range(len(z)))]
