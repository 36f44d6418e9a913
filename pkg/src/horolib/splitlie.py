"""Split classical Lie algebras over the rationals with exact structure data.

Algebras are realized as matrix algebras in the defining representation,
using the antidiagonal bilinear form for the orthogonal and symplectic
families so that the Cartan subalgebra is diagonal.  Structure constants,
the Killing form and the root-space decomposition are then extracted once
and all later computation happens on coefficient vectors.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg, rootsys
from .linalg import Endo, Q
from .rootsys import Root, RootSystem

FAMILIES = ("sl", "so_odd", "so_even", "sp")

_SIZE_RULES = {
    "sl": lambda m: 2 <= m <= 9,
    "so_odd": lambda m: m % 2 == 1 and 5 <= m <= 17,
    "so_even": lambda m: m % 2 == 0 and 8 <= m <= 16,
    "sp": lambda m: m % 2 == 0 and 4 <= m <= 16,
}


def _family_type(family: str, size: int):
    if family == "sl":
        return "A", size - 1
    if family == "so_odd":
        return "B", (size - 1) // 2
    if family == "so_even":
        return "D", size // 2
    if family == "sp":
        return "C", size // 2
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class AlgElement:
    """Exact coefficient vector over the algebra basis."""

    algebra: "SplitLieAlgebra"
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.algebra.dim:
            raise ValueError("coefficient vector has wrong length")
        object.__setattr__(self, "coeffs", tuple(Q(c) for c in self.coeffs))

    def __add__(self, other):
        self._same(other)
        return AlgElement(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._same(other)
        return AlgElement(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgElement(self.algebra, tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar):
        s = Q(scalar)
        return AlgElement(self.algebra, tuple(s * a for a in self.coeffs))

    def __eq__(self, other):
        return (isinstance(other, AlgElement) and self.algebra is other.algebra
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def vec(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=object)

    def _same(self, other):
        if not isinstance(other, AlgElement) or other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def to_json(self) -> dict:
        return {lab: linalg.rat_str(c)
                for lab, c in zip(self.algebra.basis_labels, self.coeffs) if c != 0}


class SplitLieAlgebra:
    """Structure constants, Killing form and root indexing of a split form."""

    def __init__(self, family: str, size: int):
        if family not in FAMILIES or not _SIZE_RULES[family](size):
            raise ValueError(f"unsupported algebra {family}({size})")
        self.family = family
        self.size = size
        typ, rank = _family_type(family, size)
        self.rootsystem: RootSystem = rootsys.root_system(typ, rank)
        self.rank = rank
        self._build()

    # -- construction ------------------------------------------------------

    def _weight_basis(self):
        """Defining-rep basis matrices grouped into diagonal and root parts.

        Returns (cartan_diags, root_mats) where root_mats maps a weight
        vector in the e-coordinates to its basis matrix.
        """
        m = self.size
        fam = self.family

        def unit(i, j):
            mat = linalg.zeros(m, m)
            mat[i, j] = Q(1)
            return mat

        if fam == "sl":
            evec = {k: tuple(1 if t == k else 0 for t in range(m)) for k in range(m)}
            diags = [unit(i, i) - unit(i + 1, i + 1) for i in range(m - 1)]
            roots = {}
            for i in range(m):
                for j in range(m):
                    if i != j:
                        w = tuple(a - b for a, b in zip(evec[i], evec[j]))
                        roots[w] = unit(i, j)
            return diags, roots

        n = m // 2
        if fam == "sp":
            eps = [1 if k < n else -1 for k in range(m)]
        else:
            eps = [1] * m

        def wvec(k):
            if k < n:
                return tuple(1 if t == k else 0 for t in range(n))
            if fam == "so_odd" and k == n:
                return tuple(0 for _ in range(n))
            return tuple(-1 if t == m - 1 - k else 0 for t in range(n))

        diags = [unit(i, i) - unit(m - 1 - i, m - 1 - i) for i in range(n)]
        roots = {}
        for i in range(m):
            for j in range(m):
                if i == j:
                    continue
                fi, fj = m - 1 - j, m - 1 - i   # flip across the antidiagonal
                if (fi, fj) == (i, j):
                    if fam == "sp":
                        roots[tuple(a - b for a, b in zip(wvec(i), wvec(j)))] = unit(i, j)
                    continue                    # self-paired entries vanish in so
                if (i, j) > (fi, fj):
                    continue
                sign = Q(-eps[i] * eps[j]) if fam == "sp" else Q(-1)
                w = tuple(a - b for a, b in zip(wvec(i), wvec(j)))
                roots[w] = unit(i, j) + sign * unit(fi, fj)
        return diags, roots

    def _simple_root_vectors(self):
        """Simple roots of the family in the e-coordinates, Bourbaki order."""
        n = self.rank
        fam = self.family

        def e(k):
            return [1 if t == k else 0 for t in range(n + (1 if fam == "sl" else 0))]

        if fam == "sl":
            # functionals on diag(d_0..d_{m-1}); alpha_i = e_i - e_{i+1}
            return [[a - b for a, b in zip(e(i), e(i + 1))] for i in range(n)]
        out = [[a - b for a, b in zip(e(i), e(i + 1))] for i in range(n - 1)]
        if fam == "so_odd":
            out.append(e(n - 1))
        elif fam == "sp":
            out.append([2 * x for x in e(n - 1)])
        else:
            out.append([a + b for a, b in zip(e(n - 2), e(n - 1))])
        return out

    def _build(self):
        rs = self.rootsystem
        diags, root_mats = self._weight_basis()
        simple = self._simple_root_vectors()
        ncoord = len(simple[0])
        smat = linalg.qarray([[simple[j][i] for j in range(self.rank)]
                              for i in range(ncoord)])

        decomposed = {}
        for w, mat in root_mats.items():
            sol = linalg.solve(smat, linalg.qarray(list(w)))
            if sol is None or any(c.denominator != 1 for c in sol):
                raise AssertionError("weight outside the root lattice")  # pragma: no cover
            decomposed[Root(tuple(int(c) for c in sol))] = mat
        if set(decomposed) != set(rs.positive_roots) | {-r for r in rs.positive_roots}:
            raise AssertionError(
                "matrix root decomposition disagrees with the abstract system")

        # weight of a diagonal h on a root: pair the e-functional with h's diagonal
        def root_eval(root, diag_mat):
            w = smat @ linalg.qarray(list(root.coords))
            if self.family == "sl":
                vals = [diag_mat[k, k] for k in range(self.size)]
            else:
                vals = [diag_mat[k, k] for k in range(self.size // 2)]
            return sum(a * b for a, b in zip(w, vals))

        # normalize F_alpha so that [E_alpha, F_alpha] is the coroot of alpha
        pos_e, neg_f, coroot_mat = {}, {}, {}
        for r in rs.positive_roots:
            e_mat = decomposed[r]
            f_raw = decomposed[-r]
            comm = e_mat @ f_raw - f_raw @ e_mat
            lam = root_eval(r, comm)
            if lam == 0:
                raise AssertionError("degenerate root pairing")     # pragma: no cover
            pos_e[r] = e_mat
            neg_f[r] = (Q(2) / lam) * f_raw
            coroot_mat[r] = (Q(2) / lam) * comm

        simple_roots = [Root(tuple(1 if t == i else 0 for t in range(self.rank)))
                        for i in range(self.rank)]
        cartan_mats = [coroot_mat[a] for a in simple_roots]

        order = list(rs.positive_roots)
        self.basis_mats = tuple(cartan_mats
                                + [pos_e[r] for r in order]
                                + [neg_f[r] for r in order])
        self.dim = len(self.basis_mats)
        self.cartan_indices = tuple(range(self.rank))
        self.basis_labels = tuple(
            [f"H[{i + 1}]" for i in range(self.rank)]
            + [f"E[{','.join(map(str, r.coords))}]" for r in order]
            + [f"F[{','.join(map(str, r.coords))}]" for r in order])
        self.root_index = {}
        self.root_of_index = {}
        for k, r in enumerate(order):
            self.root_index[r] = self.rank + k
            self.root_index[-r] = self.rank + len(order) + k
            self.root_of_index[self.rank + k] = r
            self.root_of_index[self.rank + len(order) + k] = -r

        # expansion data: lead positions of root vectors + diagonal solver
        self._lead = {}
        for k in range(self.rank, self.dim):
            mat = self.basis_mats[k]
            pos = next((i, j) for i in range(self.size) for j in range(self.size)
                       if mat[i, j] != 0)
            self._lead[k] = (pos, mat[pos])
        diag_cols = linalg.qarray([[cartan_mats[j][i, i] for j in range(self.rank)]
                                   for i in range(self.size)])
        gram = diag_cols.T @ diag_cols
        self._diag_solver = linalg.inv(gram) @ diag_cols.T

        self._brackets = {}
        for p in range(self.dim):
            for q in range(p + 1, self.dim):
                mp, mq = self.basis_mats[p], self.basis_mats[q]
                terms = self._expand(mp @ mq - mq @ mp)
                if terms:
                    self._brackets[(p, q)] = terms
                    self._brackets[(q, p)] = tuple((k, -c) for k, c in terms)

        self.killing_matrix = self._killing_matrix()
        self._frozen = True

    def _expand(self, mat) -> tuple:
        """Coordinates of an algebra-member matrix over the chosen basis."""
        terms = []
        residual_diag = [mat[i, i] for i in range(self.size)]
        for k in range(self.rank, self.dim):
            (i, j), lead = self._lead[k]
            if mat[i, j] != 0:
                terms.append((k, mat[i, j] / lead))
        coords = self._diag_solver @ linalg.qarray(residual_diag)
        for k, c in enumerate(coords):
            if c != 0:
                terms.append((k, c))
        return tuple(sorted(terms))

    def _killing_matrix(self) -> np.ndarray:
        # columns of ad(b_p) as sparse maps l -> {k: c}
        ad = [dict() for _ in range(self.dim)]
        for (p, l), terms in self._brackets.items():
            ad[p][l] = dict(terms)
        km = linalg.zeros(self.dim, self.dim)
        for p in range(self.dim):
            for q in range(p, self.dim):
                total = Q(0)
                for l, col in ad[p].items():
                    back = ad[q]
                    for k, c1 in col.items():
                        c2 = back.get(k, {}).get(l)
                        if c2 is not None:
                            total += c1 * c2
                km[p, q] = km[q, p] = total
        km.setflags(write=False)
        return km

    # -- elements ----------------------------------------------------------

    def zero(self) -> AlgElement:
        return AlgElement(self, (Q(0),) * self.dim)

    def element(self, coeffs) -> AlgElement:
        return AlgElement(self, tuple(coeffs))

    def basis_vector(self, k: int) -> AlgElement:
        return AlgElement(self, tuple(Q(1) if t == k else Q(0) for t in range(self.dim)))

    def root_vector(self, root: Root) -> AlgElement:
        return self.basis_vector(self.root_index[root])

    def coroot(self, i: int) -> AlgElement:
        """The coroot of the i-th simple root (1-based)."""
        return self.basis_vector(i - 1)

    def bracket_basis(self, p: int, q: int) -> tuple:
        return self._brackets.get((p, q), ())

    def bracket(self, x: AlgElement, y: AlgElement) -> AlgElement:
        x._same(y)
        if y.algebra is not self:
            raise ValueError("elements belong to a different algebra")
        out = [Q(0)] * self.dim
        for p, a in enumerate(x.coeffs):
            if a == 0:
                continue
            for q, b in enumerate(y.coeffs):
                if b == 0:
                    continue
                for k, c in self._brackets.get((p, q), ()):
                    out[k] += a * b * c
        return AlgElement(self, tuple(out))

    def ad(self, x: AlgElement) -> Endo:
        """Matrix of ad(x) on the basis: column q is [x, b_q]."""
        out = linalg.zeros(self.dim, self.dim)
        for (p, q), terms in self._brackets.items():
            a = x.coeffs[p]
            if a == 0:
                continue
            for k, c in terms:
                out[k, q] += a * c
        return out

    def killing(self, x: AlgElement, y: AlgElement) -> Q:
        x._same(y)
        total = Q(0)
        for p, a in enumerate(x.coeffs):
            if a == 0:
                continue
            row = self.killing_matrix[p]
            for q, b in enumerate(y.coeffs):
                if b != 0:
                    total += a * b * row[q]
        return total

    def defining_matrix(self, x: AlgElement) -> np.ndarray:
        out = linalg.zeros(self.size, self.size)
        for c, mat in zip(x.coeffs, self.basis_mats):
            if c != 0:
                out = out + c * mat
        return out

    def element_from_json(self, payload: dict) -> AlgElement:
        index = {lab: k for k, lab in enumerate(self.basis_labels)}
        coeffs = [Q(0)] * self.dim
        for lab, val in payload.items():
            if lab not in index:
                raise ValueError(f"unknown basis label {lab!r}")
            coeffs[index[lab]] = linalg.parse_rat(val)
        return AlgElement(self, tuple(coeffs))

    def describe(self) -> dict:
        typ, rank = _family_type(self.family, self.size)
        return {"family": self.family, "size": self.size,
                "type": typ, "rank": rank, "dim": self.dim}

    def __repr__(self):
        return f"SplitLieAlgebra({self.family!r}, {self.size})"


@functools.lru_cache(maxsize=None)
def build_algebra(family: str, size: int) -> SplitLieAlgebra:
    """Construct (and cache) a split classical algebra."""
    return SplitLieAlgebra(family, size)


def bracket(x: AlgElement, y: AlgElement) -> AlgElement:
    return x.algebra.bracket(x, y)


def ad_matrix(x: AlgElement) -> Endo:
    return x.algebra.ad(x)


def killing(x: AlgElement, y: AlgElement) -> Q:
    return x.algebra.killing(x, y)


def h_theta_element(algebra: SplitLieAlgebra, theta) -> AlgElement:
    """Cartan element pairing to 1 with the simple roots in theta, 0 off it.

    Its ad-eigenvalue on a root space is the theta-level of the root.
    """
    rs = algebra.rootsystem
    theta = rootsys._check_theta(rs, theta)
    a = linalg.qarray([list(row) for row in rs.cartan.entries])
    rhs = linalg.qarray([1 if i + 1 in theta else 0 for i in range(rs.rank)])
    sol = linalg.solve(a, rhs)
    coeffs = [Q(0)] * algebra.dim
    for i, c in enumerate(sol):
        coeffs[i] = c
    return AlgElement(algebra, tuple(coeffs))


@dataclass(frozen=True)
class GradedDecomposition:
    """Partition of the basis by theta-level, with the top-level projection."""

    algebra: SplitLieAlgebra
    grading: rootsys.ThetaGrading
    pieces: dict

    @property
    def depth(self) -> int:
        return self.grading.depth

    def indices(self, level: int) -> tuple:
        return self.pieces.get(level, ())

    @property
    def z_indices(self) -> tuple:
        return self.pieces[self.depth]

    @property
    def u_indices(self) -> tuple:
        return tuple(k for j in range(1, self.depth + 1) for k in self.pieces.get(j, ()))

    @property
    def uminus_indices(self) -> tuple:
        return tuple(k for j in range(1, self.depth + 1) for k in self.pieces.get(-j, ()))

    def level_of_index(self, k: int) -> int:
        root = self.algebra.root_of_index.get(k)
        return self.grading.level(root)

    def pi(self) -> Endo:
        """Projection onto the top level along every other level."""
        dim = self.algebra.dim
        out = linalg.zeros(dim, dim)
        for k in self.z_indices:
            out[k, k] = Q(1)
        return out

    def element_level(self, x: AlgElement):
        """The single level supporting x, or None for 0 / mixed support."""
        levels = {self.level_of_index(k) for k, c in enumerate(x.coeffs) if c != 0}
        if len(levels) == 1:
            return levels.pop()
        return None

    def member(self, x: AlgElement, levels) -> bool:
        levels = set(levels)
        return all(c == 0 or self.level_of_index(k) in levels
                   for k, c in enumerate(x.coeffs))


def graded_decomposition(algebra: SplitLieAlgebra, theta) -> GradedDecomposition:
    g = rootsys.grading(algebra.rootsystem, theta)
    pieces = {}
    for k in range(algebra.dim):
        root = algebra.root_of_index.get(k)
        lv = g.level(root)
        pieces.setdefault(lv, []).append(k)
    return GradedDecomposition(algebra, g, {j: tuple(v) for j, v in pieces.items()})


def _span_of_brackets(algebra, idx_a, idx_b) -> linalg.Span:
    span = linalg.Span(algebra.dim)
    for p in idx_a:
        for q in idx_b:
            terms = algebra.bracket_basis(p, q)
            if terms:
                v = linalg.zeros(algebra.dim)
                for k, c in terms:
                    v[k] = c
                span.add(v)
    return span


def _index_span(algebra, indices) -> linalg.Span:
    span = linalg.Span(algebra.dim)
    for k in indices:
        v = linalg.zeros(algebra.dim)
        v[k] = Q(1)
        span.add(v)
    return span


def verify_structure(algebra: SplitLieAlgebra, theta) -> dict:
    """Check the structural facts of the theta-grading on a built algebra.

    (a) level 1 brackets generate each higher level,
    (b) the positive part is exactly depth-step nilpotent,
    (c) its centralizer inside itself is the top level,
    (d) the corner subalgebra spanned by the extreme levels and their
        bracket is closed and simple in the generated-ideal sense.
    """
    dec = graded_decomposition(algebra, theta)
    s = dec.depth
    if s == 0:
        raise ValueError("theta must be nonempty")
    checks = {}

    ok_a = True
    for j in range(1, s):
        got = _span_of_brackets(algebra, dec.indices(1), dec.indices(j))
        want = _index_span(algebra, dec.indices(j + 1))
        if not got.equals(want):
            ok_a = False
    checks["level_generation"] = {"status": "pass" if ok_a else "fail"}

    u_idx = dec.u_indices
    current = _index_span(algebra, u_idx)
    steps = 0
    while len(current) > 0:
        steps += 1
        if steps > s + 1:
            break
        nxt = linalg.Span(algebra.dim)
        for p in u_idx:
            for row in current._rows:
                img = linalg.zeros(algebra.dim)
                for q, b in enumerate(row):
                    if b == 0:
                        continue
                    for k, c in algebra.bracket_basis(p, q):
                        img[k] += b * c
                nxt.add(img)
        current = nxt
    checks["nilpotency_step"] = {
        "status": "pass" if steps == s and len(current) == 0 else "fail",
        "steps": steps}

    rows = []
    for p in u_idx:
        block = linalg.zeros(algebra.dim, len(u_idx))
        for col, q in enumerate(u_idx):
            for k, c in algebra.bracket_basis(q, p):
                block[k, col] = c
        rows.append(block)
    stacked = np.concatenate(rows, axis=0) if rows else linalg.zeros(0, len(u_idx))
    kernel = linalg.nullspace(stacked)
    center = linalg.Span(algebra.dim)
    for v in kernel:
        full = linalg.zeros(algebra.dim)
        for col, q in enumerate(u_idx):
            full[q] = v[col]
        center.add(full)
    checks["center_is_top_level"] = {
        "status": "pass" if center.equals(_index_span(algebra, dec.z_indices)) else "fail",
        "dim_center": len(center)}

    corner = _index_span(algebra, dec.indices(-s) + dec.z_indices)
    mid = _span_of_brackets(algebra, dec.indices(-s), dec.z_indices)
    for row in mid._rows:
        corner.add(row)
    basis = list(corner._rows)
    closed = True
    for va, vb in itertools.combinations_with_replacement(basis, 2):
        if not corner.contains(_bracket_vec(algebra, va, vb)):
            closed = False
    simple = True
    for v in basis:
        ideal = linalg.Span(algebra.dim, [v])
        grew = True
        while grew:
            grew = False
            for w in basis:
                for r in list(ideal._rows):
                    if ideal.add(_bracket_vec(algebra, w, r)):
                        grew = True
        if len(ideal) != len(corner):
            simple = False
    checks["corner_subalgebra_simple"] = {
        "status": "pass" if closed and simple else "fail",
        "closed": closed, "dim": len(corner)}

    ok = all(c["status"] == "pass" for c in checks.values())
    return {"ok": ok, "depth": s, "checks": checks}


def _bracket_vec(algebra, va, vb) -> np.ndarray:
    out = linalg.zeros(algebra.dim)
    for p, a in enumerate(va):
        if a == 0:
            continue
        for q, b in enumerate(vb):
            if b == 0:
                continue
            for k, c in algebra.bracket_basis(p, q):
                out[k] += a * b * c
    return out
