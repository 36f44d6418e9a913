"""Relative invariants of a graded split algebra with small depth.

For a grading that is either reflexive commutative (depth 1) or Heisenberg
(depth 2, one-root-space top level), the top-level corner of the adjoint
action carries a polynomial semi-invariant.  This module evaluates that
determinant and its relatives exactly, expands it, differentiates it by
interpolation, and builds the sl2 triples it encodes.

The overall scale of the corner determinant against the longest-Weyl
representative depends on the choice of representative and basis
orientation, so every check here is phrased as proportionality, vanishing,
homogeneity, or a ratio, never as an absolute value.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass

import numpy as np

from . import adjointgrp, linalg, rootsys, splitlie
from .adjointgrp import GroupElement
from .linalg import Endo, Q
from .splitlie import AlgElement, GradedDecomposition, SplitLieAlgebra

SAMPLE_BOUND = 7    # numerators and denominators of random rational samples


@dataclass(frozen=True)
class InvariantContext:
    """A split algebra with a depth-1 reflexive or Heisenberg grading."""

    algebra: SplitLieAlgebra
    theta: frozenset
    dec: GradedDecomposition
    w0rep: GroupElement
    kind: str            # "commutative" | "heisenberg"

    @property
    def s(self) -> int:
        return self.dec.depth

    @property
    def d(self) -> int:
        return len(self.dec.z_indices)

    @property
    def z_indices(self):
        return self.dec.z_indices

    def h_grading(self) -> AlgElement:
        return splitlie.h_theta_element(self.algebra, self.theta)

    def describe(self) -> dict:
        out = self.algebra.describe()
        out.update(theta=sorted(self.theta), kind=self.kind,
                   depth=self.s, dim_center=self.d)
        return out


@functools.lru_cache(maxsize=None)
def make_context(algebra: SplitLieAlgebra, theta: frozenset) -> InvariantContext:
    rs = algebra.rootsystem
    theta = rootsys._check_theta(rs, theta)
    dec = splitlie.graded_decomposition(algebra, theta)
    if dec.depth == 1 and rootsys.is_reflexive(rs, theta):
        kind = "commutative"
    elif rootsys.is_heisenberg(rs, theta):
        kind = "heisenberg"
    else:
        raise ValueError(
            f"theta {sorted(theta)} is neither reflexive of depth 1 nor Heisenberg")
    return InvariantContext(algebra, theta, dec, adjointgrp.w0_representative(algebra), kind)


def context(family: str, size: int, theta) -> InvariantContext:
    return make_context(splitlie.build_algebra(family, size), frozenset(theta))


# ---------------------------------------------------------------------------
# sampling

def random_rational(rng: random.Random) -> Q:
    return Q(rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND), rng.randint(1, SAMPLE_BOUND))


def random_element(rng: random.Random, algebra: SplitLieAlgebra, indices) -> AlgElement:
    coeffs = [Q(0)] * algebra.dim
    for k in indices:
        coeffs[k] = random_rational(rng)
    return AlgElement(algebra, tuple(coeffs))


# ---------------------------------------------------------------------------
# corner extraction

def _require_membership(ctx, x: AlgElement, indices, what: str):
    allowed = set(indices)
    for k, c in enumerate(x.coeffs):
        if c != 0 and k not in allowed:
            raise ValueError(f"element is not supported on {what}")


def _exp_rows(algebra, x: AlgElement, rows) -> np.ndarray:
    """The given rows of exp(ad x), via row-by-row series iteration."""
    n = algebra.ad(x)
    out = linalg.zeros(len(rows), algebra.dim)
    for i, r in enumerate(rows):
        out[i, r] = Q(1)
    block = out.copy()
    fact = 1
    for k in range(1, algebra.dim + 1):
        block = block @ n
        if linalg.is_zero(block):
            return out
        fact *= k
        out = out + Q(1, fact) * block
    raise ValueError("ad is not nilpotent")       # pragma: no cover


def _exp_cols(algebra, x: AlgElement, cols) -> np.ndarray:
    n = algebra.ad(x)
    out = linalg.zeros(algebra.dim, len(cols))
    for j, c in enumerate(cols):
        out[c, j] = Q(1)
    block = out.copy()
    fact = 1
    for k in range(1, algebra.dim + 1):
        block = n @ block
        if linalg.is_zero(block):
            return out
        fact *= k
        out = out + Q(1, fact) * block
    raise ValueError("ad is not nilpotent")       # pragma: no cover


def center_block(ctx: InvariantContext, g: GroupElement) -> Endo:
    """Top-level corner of g's matrix in the graded basis."""
    if g.algebra is not ctx.algebra:
        raise ValueError("group element acts on a different algebra")
    z = ctx.z_indices
    return g.mat[np.ix_(z, z)]


def center_det(ctx: InvariantContext, g: GroupElement) -> Q:
    """Determinant of the top-level corner; nonzero exactly on the open cell."""
    return linalg.det(center_block(ctx, g))


def is_level_preserving(ctx: InvariantContext, g: GroupElement) -> bool:
    dec = ctx.dec
    for lj, src in dec.pieces.items():
        for lk, dst in dec.pieces.items():
            if lj != lk and not linalg.is_zero(g.mat[np.ix_(dst, src)]):
                return False
    return True


def levi_character(ctx: InvariantContext, l: GroupElement) -> Q:
    """Determinant of a level-preserving element on the top level."""
    if not is_level_preserving(ctx, l):
        raise ValueError("element does not preserve the grading levels")
    return center_det(ctx, l)


def character_differential(ctx: InvariantContext, h: AlgElement) -> Q:
    """Trace of ad(h) on the top level: the character's derivative at e."""
    z = ctx.z_indices
    adh = ctx.algebra.ad(h)
    return sum(adh[k, k] for k in z)


def relative_invariant(ctx: InvariantContext, x: AlgElement) -> Q:
    """The corner determinant of exp(ad x) against the w0 representative."""
    _require_membership(ctx, x, ctx.dec.u_indices, "the positive part")
    z = ctx.z_indices
    rows = _exp_rows(ctx.algebra, x, z)
    return linalg.det(rows @ ctx.w0rep.mat[:, z])


def pairing_invariant(ctx: InvariantContext, x: AlgElement, y: AlgElement) -> Q:
    """The corner determinant of exp(ad x) exp(ad y), x positive, y negative."""
    _require_membership(ctx, x, ctx.dec.u_indices, "the positive part")
    _require_membership(ctx, y, ctx.dec.uminus_indices, "the negative part")
    z = ctx.z_indices
    return linalg.det(_exp_rows(ctx.algebra, x, z) @ _exp_cols(ctx.algebra, y, z))


def duality_form(ctx: InvariantContext, x: AlgElement, y: AlgElement) -> Q:
    """Trace over the top level of ad(x) ad(y)."""
    _require_membership(ctx, x, ctx.dec.u_indices, "the positive part")
    _require_membership(ctx, y, ctx.dec.uminus_indices, "the negative part")
    alg = ctx.algebra
    z = ctx.z_indices
    adx, ady = alg.ad(x), alg.ad(y)
    total = Q(0)
    for k in z:
        total += sum(adx[k, t] * ady[t, k] for t in range(alg.dim))
    return total


def duality_gram(ctx: InvariantContext) -> np.ndarray:
    """Gram matrix of the duality form on basis(u) x basis(u-); full rank
    is the nondegeneracy statement, a deficiency is reported as violation."""
    alg = ctx.algebra
    u, um = ctx.dec.u_indices, ctx.dec.uminus_indices
    gram = linalg.zeros(len(u), len(um))
    for a, p in enumerate(u):
        for b, q in enumerate(um):
            total = Q(0)
            for k in ctx.z_indices:
                for t, c1 in alg.bracket_basis(q, k):
                    for k2, c2 in alg.bracket_basis(p, t):
                        if k2 == k:
                            total += c1 * c2
            gram[a, b] = total
    return gram


@dataclass(frozen=True)
class HeisenbergTerms:
    """Corner determinants of the depth-2 series expansion of exp(ad(V+Z)).

    ``full`` uses every term that can climb from the bottom to the top
    level, ``z_term`` only the center square, ``v_term`` only the fourth
    power of the level-1 part.
    """

    full: Q
    z_term: Q     # lowest homogeneous component, degree 2 per center dimension
    v_term: Q     # highest homogeneous component, degree 4 per center dimension


def heisenberg_expansion(ctx: InvariantContext, v: AlgElement, z: AlgElement) -> HeisenbergTerms:
    if ctx.kind != "heisenberg":
        raise ValueError("expansion requires a Heisenberg context")
    dec = ctx.dec
    _require_membership(ctx, v, dec.indices(1), "level 1")
    _require_membership(ctx, z, dec.indices(2), "level 2")
    alg = ctx.algebra
    zi = ctx.z_indices
    adv, adz = alg.ad(v), alg.ad(z)
    rows_id = linalg.zeros(len(zi), alg.dim)
    for i, r in enumerate(zi):
        rows_id[i, r] = Q(1)
    rz = rows_id @ adz
    rzz = rz @ adz
    rzvv = rz @ adv @ adv
    rv4 = ((rows_id @ adv) @ adv @ adv) @ adv
    w0cols = ctx.w0rep.mat[:, zi]
    full_rows = Q(1, 2) * rzz + Q(1, 2) * rzvv + Q(1, 24) * rv4
    return HeisenbergTerms(
        full=linalg.det(full_rows @ w0cols),
        z_term=linalg.det((Q(1, 2) * rzz) @ w0cols),
        v_term=linalg.det((Q(1, 24) * rv4) @ w0cols),
    )


# ---------------------------------------------------------------------------
# differentiation and sl2 triples

def invariant_degree(ctx: InvariantContext) -> int:
    return 2 * ctx.d * ctx.s


def _interpolate(values_at, degree):
    """Exact polynomial coefficients from values at 0, 1, -1, 2, -2, ..."""
    nodes = [Q(0)]
    k = 1
    while len(nodes) < degree + 1:
        nodes.append(Q(k))
        if len(nodes) < degree + 1:
            nodes.append(Q(-k))
        k += 1
    vand = linalg.qarray([[t ** j for j in range(degree + 1)] for t in nodes])
    vals = linalg.qarray([values_at(t) for t in nodes])
    return linalg.solve(vand, vals)


def restriction_poly(ctx: InvariantContext, x: AlgElement, direction: AlgElement):
    """Coefficients of t -> invariant(x + t * direction)."""
    deg = invariant_degree(ctx)
    return _interpolate(lambda t: relative_invariant(ctx, x + t * direction), deg)


def invariant_gradient(ctx: InvariantContext, x: AlgElement) -> tuple:
    """Exact gradient of the invariant at x, as a covector on basis(u).

    Each directional derivative is the linear coefficient of the univariate
    restriction, recovered by interpolation at degree+1 rational nodes.
    """
    out = []
    for k in ctx.dec.u_indices:
        coeffs = restriction_poly(ctx, x, ctx.algebra.basis_vector(k))
        out.append(coeffs[1])
    return tuple(out)


def _search_vectors(dim: int, box: int = 2):
    """Small integer coefficient vectors ordered by increasing sup-norm."""
    for norm in range(1, box + 1):
        for vec in itertools.product(range(-norm, norm + 1), repeat=dim):
            if max(abs(t) for t in vec) == norm:
                yield vec


def sl2_triple_commutative(ctx: InvariantContext, box: int = 2):
    """An sl2 triple through the grading element of a depth-1 context.

    The positive member is the first small-integer vector where the
    invariant does not vanish; the negative member is the Killing dual of
    the scaled logarithmic gradient there.  The middle member comes out as
    twice the grading element.
    """
    if ctx.kind != "commutative":
        raise ValueError("requires a reflexive commutative context")
    alg = ctx.algebra
    u = ctx.dec.u_indices
    x0 = None
    for vec in _search_vectors(len(u), box):
        coeffs = [Q(0)] * alg.dim
        for k, c in zip(u, vec):
            coeffs[k] = Q(c)
        cand = AlgElement(alg, tuple(coeffs))
        if relative_invariant(ctx, cand) != 0:
            x0 = cand
            break
    if x0 is None:
        raise ValueError(
            f"invariant vanished on the whole search box (sup-norm <= {box}); "
            "it should be a nonzero polynomial")
    fx = relative_invariant(ctx, x0)
    grad = invariant_gradient(ctx, x0)
    h = ctx.h_grading()
    scale = alg.killing(h, h) / character_differential(ctx, h)
    um = ctx.dec.uminus_indices
    pair = linalg.qarray([[alg.killing_matrix[q][p] for q in um] for p in u])
    rhs = linalg.qarray([scale * g / fx for g in grad])
    sol = linalg.solve(pair, rhs)
    if sol is None:
        raise AssertionError("Killing pairing is degenerate")      # pragma: no cover
    coeffs = [Q(0)] * alg.dim
    for q, c in zip(um, sol):
        coeffs[q] = c
    y0 = AlgElement(alg, tuple(coeffs))
    h0 = alg.bracket(x0, y0)
    _assert_sl2(alg, x0, h0, y0)
    return x0, h0, y0


def sl2_triple_center(ctx: InvariantContext, box: int = 2):
    """An sl2 triple through the center of a Heisenberg context.

    Searches small-integer top-level vectors and solves the bottom-level
    partner linearly so the bracket is exactly the grading element.
    """
    if ctx.kind != "heisenberg":
        raise ValueError("requires a Heisenberg context")
    alg = ctx.algebra
    top, bot = ctx.dec.indices(2), ctx.dec.indices(-2)
    h = ctx.h_grading()
    hvec = h.vec()
    for vec in _search_vectors(len(top), box):
        x_coeffs = [Q(0)] * alg.dim
        for k, c in zip(top, vec):
            x_coeffs[k] = Q(c)
        x0 = AlgElement(alg, tuple(x_coeffs))
        cols = []
        for q in bot:
            col = linalg.zeros(alg.dim)
            for p, a in enumerate(x0.coeffs):
                if a == 0:
                    continue
                for k, c in alg.bracket_basis(p, q):
                    col[k] += a * c
            cols.append(col)
        sol = linalg.solve(np.stack(cols, axis=1), hvec)
        if sol is None:
            continue
        y_coeffs = [Q(0)] * alg.dim
        for q, c in zip(bot, sol):
            y_coeffs[q] = c
        y0 = AlgElement(alg, tuple(y_coeffs))
        h0 = alg.bracket(x0, y0)
        _assert_sl2(alg, x0, h0, y0)
        return x0, h0, y0
    raise ValueError(
        f"no top-level vector with sup-norm <= {box} pairs onto the grading element")


def _assert_sl2(alg, x, h, y):
    if alg.bracket(h, x) != 2 * x or alg.bracket(h, y) != Q(-2) * y:
        raise AssertionError("candidate triple fails the bracket relations")
    if alg.bracket(x, y) != h:
        raise AssertionError("candidate triple fails the bracket relations")


# ---------------------------------------------------------------------------
# report-producing checks

def _counterexample(**elements):
    return {name: el.to_json() if isinstance(el, AlgElement) else el
            for name, el in elements.items()}


def _random_levi(ctx, rng) -> GroupElement:
    """Random level-preserving element: torus factors times level-0 unipotents."""
    alg = ctx.algebra
    out = adjointgrp.torus_element(ctx.h_grading(), _nonzero_rational(rng))
    for i in range(1, alg.rank + 1):
        if rng.random() < 0.5:
            out = out @ adjointgrp.torus_element(alg.coroot(i), _nonzero_rational(rng))
    # level-0 unipotent part: root vectors of one sign only stay nilpotent
    sign = 1 if rng.random() < 0.5 else -1
    zero_roots = [k for k in ctx.dec.indices(0)
                  if k not in alg.cartan_indices
                  and (alg.root_of_index[k].is_positive) == (sign == 1)]
    if zero_roots:
        w = random_element(rng, alg, rng.sample(zero_roots, min(2, len(zero_roots))))
        out = out @ adjointgrp.exp_ad(w)
    return out


def _nonzero_rational(rng) -> Q:
    while True:
        q = random_rational(rng)
        if q != 0:
            return q


def _random_group_element(ctx, rng) -> GroupElement:
    alg = ctx.algebra
    out = adjointgrp.identity(alg)
    for _ in range(rng.randint(1, 3)):
        pick = rng.random()
        if pick < 0.4:
            out = out @ adjointgrp.exp_ad(random_element(rng, alg, ctx.dec.u_indices))
        elif pick < 0.8:
            out = out @ adjointgrp.exp_ad(random_element(rng, alg, ctx.dec.uminus_indices))
        else:
            out = out @ adjointgrp.torus_element(ctx.h_grading(), _nonzero_rational(rng))
    return out


def semiinvariance_check(ctx: InvariantContext, samples: int = 100, seed: int = 42) -> dict:
    """Exact two-sided semi-invariance of the corner determinant, plus the
    equivariance of both polynomial invariants, on random samples."""
    rng = random.Random(seed)
    alg = ctx.algebra
    failures = []
    for k in range(samples):
        v = adjointgrp.exp_ad(random_element(rng, alg, ctx.dec.uminus_indices))
        u = adjointgrp.exp_ad(random_element(rng, alg, ctx.dec.u_indices))
        l1, l2 = _random_levi(ctx, rng), _random_levi(ctx, rng)
        g = _random_group_element(ctx, rng)
        lhs = center_det(ctx, v @ l1 @ g @ l2 @ u)
        rhs = levi_character(ctx, l1) * levi_character(ctx, l2) * center_det(ctx, g)
        if lhs != rhs:
            failures.append({"check": "two_sided", "sample": k})
        x = random_element(rng, alg, ctx.dec.u_indices)
        y = random_element(rng, alg, ctx.dec.uminus_indices)
        lx = l1.apply(x)
        if relative_invariant(ctx, lx) != levi_character(ctx, l1) ** 2 * relative_invariant(ctx, x):
            failures.append({"check": "invariant_equivariance",
                             "counterexample": _counterexample(x=x)})
        if pairing_invariant(ctx, l1.apply(x), l1.apply(y)) != pairing_invariant(ctx, x, y):
            failures.append({"check": "pairing_invariance",
                             "counterexample": _counterexample(x=x, y=y)})
    return {"name": "semi_invariance", "samples": samples, "seed": seed,
            "status": "pass" if not failures else "fail", "failures": failures}


def omega_criterion_check(ctx: InvariantContext, samples: int = 200, seed: int = 42) -> dict:
    """Presence of the cell factorization must match a nonzero corner
    determinant; half of the samples are sandwiched longest-Weyl translates
    which are guaranteed absent."""
    rng = random.Random(seed)
    alg = ctx.algebra
    failures = []
    absent_seen = 0
    for k in range(samples):
        g = _random_group_element(ctx, rng)
        if k % 2 == 1:
            v = adjointgrp.exp_ad(random_element(rng, alg, ctx.dec.uminus_indices))
            u = adjointgrp.exp_ad(random_element(rng, alg, ctx.dec.u_indices))
            g = v @ _random_levi(ctx, rng) @ ctx.w0rep @ _random_levi(ctx, rng) @ u
        fac = adjointgrp.opposite_cell_factor(g, ctx.dec)
        phi = center_det(ctx, g)
        if (fac is not None) != (phi != 0):
            failures.append({"check": "presence_vs_determinant", "sample": k})
        if fac is not None:
            v, l, u = fac
            if not (v @ l @ u) == g:
                failures.append({"check": "factor_product", "sample": k})
            if center_block(ctx, l).tolist() != center_block(ctx, g).tolist():
                failures.append({"check": "corner_is_levi_action", "sample": k})
        else:
            absent_seen += 1
        if k % 2 == 1 and fac is not None:
            failures.append({"check": "w0_translate_must_be_absent", "sample": k})
    return {"name": "opposite_cell_criterion", "samples": samples, "seed": seed,
            "absent": absent_seen,
            "status": "pass" if not failures else "fail", "failures": failures}


# ---------------------------------------------------------------------------
# closed forms for the classical depth-1 rows

def _flip_eye(n):
    k = linalg.zeros(n, n)
    for i in range(n):
        k[i, n - 1 - i] = Q(1)
    return k


def _closed_form_data(ctx: InvariantContext):
    """Block extraction plus the model polynomial for a classical row."""
    alg = ctx.algebra
    fam, size, rank = alg.family, alg.size, alg.rank
    theta = ctx.theta

    if fam == "sl" and size % 2 == 0 and theta == {size // 2}:
        n = size // 2
        rows, cols = range(n), range(n, size)

        def fpoly(x):
            return linalg.det(alg.defining_matrix(x)[np.ix_(rows, cols)]) ** (2 * n)

        def gpoly(x, y):
            b = alg.defining_matrix(x)[np.ix_(rows, cols)]
            c = alg.defining_matrix(y)[np.ix_(cols, rows)]
            return linalg.det(linalg.eye(n) + b @ c) ** (2 * n)

        return fpoly, gpoly, None

    if fam == "sp" and theta == {rank}:
        n = rank
        rows, cols = range(n), range(n, size)
        flip = _flip_eye(n)

        def fpoly(x):
            s = flip @ alg.defining_matrix(x)[np.ix_(rows, cols)]
            if any(s[i, j] != s[j, i] for i in range(n) for j in range(n)):
                raise AssertionError("positive block is not symmetric")
            return linalg.det(s) ** (n + 1)

        def gpoly(x, y):
            b = alg.defining_matrix(x)[np.ix_(rows, cols)]
            c = alg.defining_matrix(y)[np.ix_(cols, rows)]
            return linalg.det(linalg.eye(n) + b @ c) ** (n + 1)

        return fpoly, gpoly, None

    if fam in ("so_odd", "so_even") and theta == {1}:
        m = size
        n = m - 2

        def coords_pos(x):
            dm = alg.defining_matrix(x)
            return [dm[0, j] for j in range(1, m - 1)]

        def coords_neg(y):
            dm = alg.defining_matrix(y)
            return [dm[j, 0] for j in range(1, m - 1)]

        def qform(v):
            return sum(v[j] * v[n - 1 - j] for j in range(n))

        def fpoly(x):
            return qform(coords_pos(x)) ** n

        def gpoly(x, y):
            xv, yv = coords_pos(x), coords_neg(y)
            b = -sum(a * c for a, c in zip(xv, yv))
            return (1 - b + Q(1, 4) * qform(xv) * qform(yv)) ** n

        return fpoly, gpoly, n

    if fam == "so_even" and theta == {rank}:
        n = rank
        rows, cols = range(n), range(n, size)
        flip = _flip_eye(n)

        def fpoly(x):
            b = alg.defining_matrix(x)[np.ix_(rows, cols)]
            om = flip @ b
            if any(om[i, j] != -om[j, i] for i in range(n) for j in range(n)):
                raise AssertionError("positive block is not antisymmetric")
            return linalg.det(b) ** (n - 1)

        def gpoly(x, y):
            b = alg.defining_matrix(x)[np.ix_(rows, cols)]
            c = alg.defining_matrix(y)[np.ix_(cols, rows)]
            return linalg.det(linalg.eye(n) + b @ c) ** (n - 1)

        return fpoly, gpoly, None

    raise ValueError(
        f"no closed form registered for {fam}({size}) with theta {sorted(theta)}")


def _nth_root_quadratic(poly, n):
    """Formal n-th root of a monic-at-0 polynomial, truncated to degree 2;
    returns the quadratic or None when the root is not a quadratic."""
    if poly[0] == 0:
        return None
    norm = [c / poly[0] for c in poly]
    r1 = norm[1] / n
    r2 = (norm[2] - Q(n * (n - 1), 2) * r1 * r1) / n
    root = [Q(1), r1, r2]
    # expand (1 + r1 t + r2 t^2)^n and compare against the normalized input
    acc = [Q(1)]
    for _ in range(n):
        nxt = [Q(0)] * (len(acc) + 2)
        for i, a in enumerate(acc):
            for j, b in enumerate(root):
                nxt[i + j] += a * b
        acc = nxt
    acc = acc + [Q(0)] * (len(norm) - len(acc))
    if list(acc[: len(norm)]) != list(norm):
        return None
    return root


def closed_form_check(ctx: InvariantContext, samples: int = 20, seed: int = 42) -> dict:
    """Cross-multiplied proportionality of both invariants against the
    classical closed forms, plus the perfect-power test for the quadric row."""
    rng = random.Random(seed)
    fpoly, gpoly, power_n = _closed_form_data(ctx)
    alg = ctx.algebra
    failures = []
    ref = None
    for k in range(samples):
        x = random_element(rng, alg, ctx.dec.u_indices)
        y = random_element(rng, alg, ctx.dec.uminus_indices)
        fv, fc = relative_invariant(ctx, x), fpoly(x)
        if (fv == 0) != (fc == 0):
            failures.append({"check": "invariant_zero_locus",
                             "counterexample": _counterexample(x=x)})
        if ref is None and fv != 0 and fc != 0:
            ref = (fv, fc)
        if ref is not None and fv * ref[1] != fc * ref[0]:
            failures.append({"check": "invariant_closed_form",
                             "counterexample": _counterexample(x=x)})
        gv, gc = pairing_invariant(ctx, x, y), gpoly(x, y)
        if gv != gc:
            failures.append({"check": "pairing_closed_form",
                             "counterexample": _counterexample(x=x, y=y)})
    if ref is None:
        failures.append({"check": "invariant_closed_form",
                         "detail": "no nonzero sample found"})
    if power_n is not None:
        done = 0
        while done < 3:
            x = random_element(rng, alg, ctx.dec.u_indices)
            direction = random_element(rng, alg, ctx.dec.u_indices)
            if relative_invariant(ctx, x) == 0:
                continue
            poly = restriction_poly(ctx, x, direction)
            if _nth_root_quadratic(list(poly), power_n) is None:
                failures.append({"check": "perfect_power",
                                 "counterexample": _counterexample(x=x, direction=direction)})
            done += 1
    return {"name": "closed_forms", "context": ctx.describe(), "seed": seed,
            "status": "pass" if not failures else "fail", "failures": failures}
