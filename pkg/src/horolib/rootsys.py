"""Abstract root systems: generation, Weyl combinatorics, theta gradings.

Conventions. Simple roots are numbered in the Bourbaki order and theta
subsets use 1-based indices.  The Cartan matrix entry A[i][j] is the
pairing of the i-th simple root against the j-th simple coroot, so the
reflection s_j sends a root with coordinates k to k - (sum_i k_i A[i][j])
at position j.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Optional

ROOT_CAP = 10000

_CLASSICAL_RANGES = {
    "A": (1, None), "B": (2, None), "C": (2, None), "D": (3, None),
    "E": (6, 8), "F": (4, 4), "G": (2, 2),
}


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix of a (possibly reducible) crystallographic system."""

    entries: tuple

    def __post_init__(self):
        ent = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", ent)
        n = len(ent)
        if n == 0 or any(len(row) != n for row in ent):
            raise ValueError("Cartan matrix must be square and nonempty")
        for i in range(n):
            if ent[i][i] != 2:
                raise ValueError("diagonal Cartan entries must equal 2")
            for j in range(n):
                if i != j:
                    if ent[i][j] > 0:
                        raise ValueError("off-diagonal Cartan entries must be <= 0")
                    if (ent[i][j] == 0) != (ent[j][i] == 0):
                        raise ValueError("zero pattern must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.entries)


def cartan_matrix(typ: str, rank: int) -> CartanMatrix:
    """Standard Cartan matrix of the given simple type, Bourbaki numbering."""
    typ = typ.upper()
    lo, hi = _CLASSICAL_RANGES.get(typ, (None, None))
    if lo is None or rank < lo or (hi is not None and rank > hi):
        raise ValueError(f"unsupported type {typ}_{rank}")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if typ in ("A", "B", "C"):
        for i in range(rank - 1):
            link(i, i + 1)
        if typ == "B" and rank >= 2:
            link(rank - 2, rank - 1, -2, -1)
        if typ == "C" and rank >= 2:
            link(rank - 2, rank - 1, -1, -2)
    elif typ == "D":
        if rank == 3:
            link(0, 1), link(1, 2)
        else:
            for i in range(rank - 2):
                link(i, i + 1)
            link(rank - 3, rank - 1)
    elif typ == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for u, v in zip(chain, chain[1:]):
            link(u, v)
        link(1, 3)
    elif typ == "F":
        link(0, 1), link(1, 2, -2, -1), link(2, 3)
    elif typ == "G":
        link(0, 1, -1, -3)
    return CartanMatrix(tuple(tuple(row) for row in a))


@dataclass(frozen=True, order=True)
class Root:
    """A root as integer coordinates in the simple-root basis."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if all(x == 0 for x in self.coords):
            raise ValueError("a root is nonzero")

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def is_positive(self) -> bool:
        return all(x >= 0 for x in self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-x for x in self.coords))


def _reflect(cartan: CartanMatrix, coords: tuple, j: int) -> tuple:
    pairing = sum(k * cartan.entries[i][j] for i, k in enumerate(coords))
    out = list(coords)
    out[j] -= pairing
    return tuple(out)


@dataclass(frozen=True)
class Component:
    """Irreducible component: type label plus its simple-root positions.

    ``indices`` lists 0-based positions in Pi ordered so that position k
    plays the role of Bourbaki node k+1 of the named type.
    """

    type: str
    rank: int
    indices: tuple


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanMatrix
    components: tuple
    positive_roots: tuple
    w0_word: tuple
    w0_perm: tuple      # 0-based: w0_perm[i] is iota(alpha_{i+1}) as a position

    _root_set: frozenset = field(repr=False, default=frozenset())

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def is_root(self, coords) -> bool:
        return tuple(coords) in self._root_set

    def contains(self, root: Root) -> bool:
        return root.coords in self._root_set

    def iota(self, i: int) -> int:
        """The diagram involution -w0 on 1-based simple-root indices."""
        return self.w0_perm[i - 1] + 1

    def iota_set(self, theta) -> frozenset:
        return frozenset(self.iota(i) for i in theta)

    def component_of(self, index_1b: int) -> Component:
        for comp in self.components:
            if index_1b - 1 in comp.indices:
                return comp
        raise ValueError(f"no simple root numbered {index_1b}")

    def to_json(self) -> dict:
        roots = [list(r.coords) for r in self.positive_roots]
        perm = [i + 1 for i in self.w0_perm]
        if len(self.components) == 1:
            c = self.components[0]
            return {"type": c.type, "rank": self.rank,
                    "positive_roots": roots, "w0_perm": perm}
        return {
            "components": [{"type": c.type, "rank": c.rank,
                            "indices": [i + 1 for i in c.indices]}
                           for c in self.components],
            "rank": self.rank, "positive_roots": roots, "w0_perm": perm,
        }


@dataclass(frozen=True)
class ThetaGrading:
    """Levels n_theta(alpha) for every root, and the depth of the grading."""

    theta: frozenset
    levels: dict
    depth: int

    def level(self, root: Optional[Root]) -> int:
        if root is None:
            return 0
        return self.levels[root.coords]


def _check_theta(rs: RootSystem, theta) -> frozenset:
    theta = frozenset(int(i) for i in theta)
    if not theta <= set(range(1, rs.rank + 1)):
        raise ValueError(f"theta {sorted(theta)} is not a subset of 1..{rs.rank}")
    return theta


# ---------------------------------------------------------------------------
# generation and recognition

def _positive_closure(cartan: CartanMatrix):
    n = cartan.rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        coords = queue.pop()
        for j in range(n):
            new = _reflect(cartan, coords, j)
            if new not in seen and all(x >= 0 for x in new):
                if 2 * (len(seen) + 1) > ROOT_CAP:
                    raise ValueError(
                        "root generation exceeded the finite-type cap of "
                        f"{ROOT_CAP} roots; the Cartan matrix is not of finite type")
                seen.add(new)
                queue.append(new)
    return sorted(seen, key=lambda c: (sum(c), c))


def _connected_components(cartan: CartanMatrix):
    n = cartan.rank
    remaining = set(range(n))
    comps = []
    while remaining:
        start = min(remaining)
        block = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for j in range(n):
                if j in remaining and j not in block and cartan.entries[i][j] != 0:
                    block.add(j)
                    frontier.append(j)
        remaining -= block
        comps.append(sorted(block))
    return comps


def _identify_component(cartan: CartanMatrix, block) -> Component:
    """Match an irreducible diagram against the standard types by backtracking."""
    n = len(block)
    sub = [[cartan.entries[i][j] for j in block] for i in block]
    candidates = [t for t, (lo, hi) in _CLASSICAL_RANGES.items()
                  if lo <= n and (hi is None or n <= hi)]
    for typ in candidates:
        std = cartan_matrix(typ, n).entries

        def extend(assign):
            k = len(assign)
            if k == n:
                return assign
            for cand in range(n):
                if cand in assign:
                    continue
                ok = all(std[k][m] == sub[cand][assign[m]]
                         and std[m][k] == sub[assign[m]][cand]
                         for m in range(k))
                if ok:
                    res = extend(assign + [cand])
                    if res is not None:
                        return res
            return None

        perm = extend([])
        if perm is not None:
            return Component(typ, n, tuple(block[p] for p in perm))
    raise ValueError("finite root system of unrecognized type")   # pragma: no cover


def _longest_element(cartan: CartanMatrix, n_positive: int):
    """Greedy reduced word for w0 plus the induced permutation -w0 of Pi.

    At each step the lowest-index simple reflection still sending its own
    simple root to a positive root is appended on the right.
    """
    n = cartan.rank
    # w tracked as a matrix acting on root coordinates (columns = images of Pi)
    w = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    word = []
    while True:
        for i in range(n):
            img = tuple(w[r][i] for r in range(n))
            if any(x > 0 for x in img):
                break
        else:
            break
        word.append(i)
        # w <- w s_i : new column j of w is w(s_i e_j)
        new = [row[:] for row in w]
        for j in range(n):
            col = [1 if r == j else 0 for r in range(n)]
            col = list(_reflect(cartan, tuple(col), i))
            for r in range(n):
                new[r][j] = sum(w[r][m] * col[m] for m in range(n))
        w = new
    if len(word) != n_positive:
        raise AssertionError("greedy w0 word has wrong length")   # pragma: no cover
    perm = []
    for i in range(n):
        img = tuple(-w[r][i] for r in range(n))
        target = next((j for j in range(n)
                       if img == tuple(1 if r == j else 0 for r in range(n))), None)
        if target is None:
            raise AssertionError("-w0 does not permute Pi")       # pragma: no cover
        perm.append(target)
    return tuple(word), tuple(perm)


@functools.lru_cache(maxsize=None)
def generate_roots(cartan: CartanMatrix) -> RootSystem:
    """All positive roots of a finite-type Cartan matrix, canonically ordered.

    Roots are generated by closing Pi under the simple reflections; growth
    past the cap rejects non-finite-type input.
    """
    positive = _positive_closure(cartan)
    comps = tuple(_identify_component(cartan, b) for b in _connected_components(cartan))
    word, perm = _longest_element(cartan, len(positive))
    roots = tuple(Root(c) for c in positive)
    allroots = frozenset(c for c in positive) | frozenset(
        tuple(-x for x in c) for c in positive)
    return RootSystem(cartan, comps, roots, word, perm, allroots)


def root_system(typ: str, rank: int) -> RootSystem:
    """Convenience: the root system of a standard simple type."""
    return generate_roots(cartan_matrix(typ, rank))


# ---------------------------------------------------------------------------
# queries

def _only_component(rs: RootSystem, component) -> Component:
    if component is None:
        if len(rs.components) != 1:
            raise ValueError("system is reducible; pass an explicit component")
        return rs.components[0]
    if isinstance(component, Component):
        return component
    return rs.components[int(component)]


def highest_root(rs: RootSystem, component=None) -> Root:
    """The unique dominance-maximal root of an irreducible component."""
    comp = _only_component(rs, component)
    inside = [r for r in rs.positive_roots
              if all(r.coords[i] == 0 for i in range(rs.rank) if i not in comp.indices)]
    best = max(inside, key=lambda r: r.height)
    for r in inside:
        if any(b < c for b, c in zip(best.coords, r.coords)):
            raise AssertionError("dominance order has no maximum")  # pragma: no cover
    return best


def n_theta(theta, root: Root) -> int:
    """Sum of the root coordinates over the theta positions (1-based)."""
    return sum(root.coords[i - 1] for i in theta)


def longest_element(rs: RootSystem):
    """Canonical greedy reduced word for w0 and the permutation -w0 of Pi."""
    return rs.w0_word, rs.w0_perm


def apply_word(rs: RootSystem, word, root: Root) -> Root:
    """Apply a product of simple reflections (leftmost acts last) to a root."""
    coords = root.coords
    for i in reversed(word):
        coords = _reflect(rs.cartan, coords, i)
    return Root(coords)


def grading(rs: RootSystem, theta) -> ThetaGrading:
    theta = _check_theta(rs, theta)
    levels = {}
    depth = 0
    for r in rs.positive_roots:
        lv = n_theta(theta, r)
        levels[r.coords] = lv
        levels[(-r).coords] = -lv
        depth = max(depth, lv)
    return ThetaGrading(theta, levels, depth)


def is_reflexive(rs: RootSystem, theta) -> bool:
    theta = _check_theta(rs, theta)
    return rs.iota_set(theta) == theta


def is_heisenberg(rs: RootSystem, theta) -> bool:
    """Two-step grading whose top level is the single highest-root space."""
    theta = _check_theta(rs, theta)
    if not theta:
        return False
    comps = {rs.component_of(i) for i in theta}
    if len(comps) != 1:
        return False
    comp = comps.pop()
    g = grading(rs, theta)
    if g.depth != 2:
        return False
    top = [r for r in rs.positive_roots if g.level(r) == 2]
    return top == [highest_root(rs, comp)]


def heisenberg_theta(rs: RootSystem, component=None) -> frozenset:
    """The unique theta whose horospherical subalgebra is Heisenberg."""
    comp = _only_component(rs, component)
    if comp.rank == 1 and comp.type == "A":
        raise ValueError(
            "type A_1 has no Heisenberg horospherical subalgebra: "
            "its largest root is a simple root")
    alpha = highest_root(rs, comp)
    theta = frozenset(
        i + 1 for i in comp.indices
        if rs.is_root(tuple(alpha.coords[k] - (1 if k == i else 0)
                            for k in range(rs.rank))))
    if not is_heisenberg(rs, theta):
        raise AssertionError("computed theta is not Heisenberg")  # pragma: no cover
    return theta


def check_heisenberg_sum(rs: RootSystem, theta) -> int:
    """Sum of highest-root coefficients over theta; equals 2 for Heisenberg."""
    theta = _check_theta(rs, theta)
    comp = {rs.component_of(i) for i in theta}
    if len(comp) != 1:
        raise ValueError("theta must lie in one irreducible component")
    alpha = highest_root(rs, comp.pop())
    return n_theta(theta, alpha)


def classify_reflexive_commutative(rs: RootSystem):
    """All singleton thetas giving a reflexive commutative subalgebra.

    Per irreducible component these are the simple roots that carry
    coefficient 1 in the highest root and are fixed by -w0.
    """
    out = []
    for comp in rs.components:
        alpha = highest_root(rs, comp)
        for i in comp.indices:
            if alpha.coords[i] == 1 and rs.w0_perm[i] == i:
                out.append(frozenset({i + 1}))
    return out


def _sub_iota(rs: RootSystem, subset_0b):
    """The involution -w0' of the subsystem spanned by the given positions."""
    subset = sorted(subset_0b)
    if not subset:
        return {}
    sub_cartan = CartanMatrix(tuple(
        tuple(rs.cartan.entries[i][j] for j in subset) for i in subset))
    sub = generate_roots(sub_cartan)
    return {subset[k]: subset[sub.w0_perm[k]] for k in range(len(subset))}


def reduction_step_theta(rs: RootSystem, theta) -> frozenset:
    """One enlargement step towards a reflexive theta.

    Adds the image, under the complement subsystem's own involution, of the
    part of iota(theta) falling outside theta.  Fixed points are exactly the
    reflexive thetas.
    """
    theta = _check_theta(rs, theta)
    if not theta:
        raise ValueError("theta must be nonempty")
    complement = [i for i in range(rs.rank) if i + 1 not in theta]
    overflow = {i - 1 for i in rs.iota_set(theta)} & set(complement)
    if not overflow:
        return theta
    j = _sub_iota(rs, complement)
    return theta | frozenset(j[i] + 1 for i in overflow)


def theta_zero_reduction(rs: RootSystem, theta) -> frozenset:
    """Strip from theta the simple roots adjacent to the highest root.

    Defined when the grading is at least three-step with a one-root-space
    top level; the stripped set must be contained in theta.
    """
    theta = _check_theta(rs, theta)
    comps = {rs.component_of(i) for i in theta}
    if len(comps) != 1:
        raise ValueError("theta must lie in one irreducible component")
    comp = comps.pop()
    if grading(rs, theta).depth < 3:
        raise ValueError("reduction applies to gradings of depth at least 3")
    alpha = highest_root(rs, comp)
    theta0 = frozenset(
        i + 1 for i in comp.indices
        if rs.is_root(tuple(alpha.coords[k] - (1 if k == i else 0)
                            for k in range(rs.rank))))
    if not theta0 <= theta:
        raise ValueError(
            f"theta_0 = {sorted(theta0)} is not contained in theta = {sorted(theta)}; "
            "the center of the horospherical subalgebra is not a root space here")
    return theta - theta0
