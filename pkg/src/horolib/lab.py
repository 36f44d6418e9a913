"""Desk-scale empirical witnesses: value-set discreteness and lattice probes.

Everything rational-valued here (lattice enumeration, the corner
determinant along group words, the invariant over lattice points) is
exact.  The one floating-point surface is the orbit probe, whose Gram
computation carries a stated 1e-9 relative tolerance and whose outputs are
labeled approximate.

Discreteness can only be witnessed, not proven, by sampling: reports carry
their bounds (word length, height) and a common-denominator cap, and a
failure to find a denominator under the cap is flagged, never swallowed.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import adjointgrp, invariants, linalg, splitlie
from .invariants import InvariantContext
from .linalg import Q
from .splitlie import AlgElement, SplitLieAlgebra

ENUMERATION_CAP = 200_000
DEFAULT_DENOMINATOR_CAP = 10 ** 6


@dataclass(frozen=True)
class LatticeSample:
    """Integer span of some algebra elements, with an enumeration height."""

    basis: tuple
    height_bound: int

    def __post_init__(self):
        if not self.basis:
            raise ValueError("lattice needs at least one basis vector")
        alg = self.basis[0].algebra
        stacked = np.stack([b.vec() for b in self.basis], axis=1)
        if linalg.rank(stacked) != len(self.basis):
            raise ValueError("lattice basis is linearly dependent")

    @property
    def algebra(self) -> SplitLieAlgebra:
        return self.basis[0].algebra

    def is_lie_lattice(self) -> bool:
        """Brackets of basis vectors must have integer coordinates in the basis."""
        alg = self.algebra
        stacked = np.stack([b.vec() for b in self.basis], axis=1)
        for x, y in itertools.combinations_with_replacement(self.basis, 2):
            coords = linalg.solve(stacked, alg.bracket(x, y).vec())
            if coords is None or any(c.denominator != 1 for c in coords):
                return False
        return True


def integer_lattice(algebra: SplitLieAlgebra, indices, height_bound: int) -> LatticeSample:
    """The integer span of the chosen basis vectors."""
    return LatticeSample(tuple(algebra.basis_vector(k) for k in indices), height_bound)


def enumerate_lattice(lattice: LatticeSample):
    """All integer combinations with coefficients bounded by the height."""
    b = lattice.height_bound
    n = len(lattice.basis)
    total = (2 * b + 1) ** n
    if total > ENUMERATION_CAP:
        raise ValueError(f"enumeration of {total} points exceeds the cap")
    out = []
    for combo in itertools.product(range(-b, b + 1), repeat=n):
        vec = lattice.algebra.zero()
        for c, base in zip(combo, lattice.basis):
            if c:
                vec = vec + c * base
        out.append(vec)
    return out


def value_set_discreteness(values, cap: int = DEFAULT_DENOMINATOR_CAP) -> dict:
    """Minimum gap and common denominator of an exact value set.

    The desk-scale discreteness witness is a denominator D under the cap
    with every value in (1/D) * Z; min_gap is then at least 1/D.
    """
    values = [linalg.parse_rat(v) for v in values]
    distinct = sorted(set(values))
    min_gap = None
    if len(distinct) >= 2:
        min_gap = min(b - a for a, b in zip(distinct, distinct[1:]))
    denom = reduce(math.lcm, (int(v.denominator) for v in distinct), 1)
    return {
        "count": len(values),
        "distinct": len(distinct),
        "min_gap": linalg.rat_str(min_gap) if min_gap is not None else None,
        "denominator": denom,
        "within_cap": denom <= cap,
        "cap": cap,
    }


@dataclass(frozen=True)
class GroupSampler:
    """Random bounded words over a fixed generator list."""

    generators: tuple
    word_length: int
    seed: int

    def words(self, count: int):
        rng = random.Random(self.seed)
        gens = list(self.generators) + [g.inverse() for g in self.generators]
        alg = self.generators[0].algebra
        for _ in range(count):
            g = adjointgrp.identity(alg)
            for _ in range(rng.randint(0, self.word_length)):
                g = g @ rng.choice(gens)
            yield g


def standard_generators(ctx: InvariantContext) -> tuple:
    """Exponentials of the integer root-vector lattice bases of both sides.

    These act integrally on the adjoint basis, so determinant values along
    words stay integers.
    """
    alg = ctx.algebra
    gens = [adjointgrp.exp_ad(alg.basis_vector(k))
            for k in ctx.dec.u_indices + ctx.dec.uminus_indices]
    return tuple(gens)


def sample_word_values(ctx: InvariantContext, sampler: GroupSampler, count: int):
    """Corner determinants over random bounded words."""
    return [invariants.center_det(ctx, g) for g in sampler.words(count)]


def invariant_over_lattice(ctx: InvariantContext, lattice: LatticeSample):
    """The relative invariant at every bounded lattice point."""
    return [invariants.relative_invariant(ctx, x) for x in enumerate_lattice(lattice)]


def orbit_probe(lattice: LatticeSample, h: AlgElement, t_values,
                normalize: bool = False) -> list:
    """Covolume and shortest vector of the torus-transformed lattice.

    Floating point with ~1e-9 Gram tolerance.  The shortest vector comes
    from exhaustive enumeration inside the height box; the result is
    certified only when nothing outside the box can be shorter.
    """
    b = lattice.height_bound
    n = len(lattice.basis)
    out = []
    for t in t_values:
        g = adjointgrp.torus_element(h, t)
        cols = [g.apply(v).vec() for v in lattice.basis]
        m = np.array([[float(x) for x in col] for col in cols]).T
        if normalize:
            # rescale the transformed basis to determinant one on its span
            gram0 = m.T @ m
            m = m * np.linalg.det(gram0) ** (-0.5 / n)
        gram = m.T @ m
        covol = math.sqrt(abs(np.linalg.det(gram)))
        sigma_min = min(np.linalg.svd(m, compute_uv=False))
        shortest = None
        for combo in itertools.product(range(-b, b + 1), repeat=n):
            if not any(combo):
                continue
            vec = m @ np.array(combo, dtype=float)
            norm = float(np.linalg.norm(vec))
            if shortest is None or norm < shortest:
                shortest = norm
        certified = bool(shortest is not None
                         and shortest <= sigma_min * (b + 1) + 1e-12)
        out.append({"t": linalg.rat_str(Q(t)), "covolume": covol,
                    "shortest": shortest, "certified": certified})
    return out


# ---------------------------------------------------------------------------
# config-driven experiments (CLI surface)

def _context_from_config(config: dict) -> InvariantContext:
    if "family" in config:
        family, size = config["family"], int(config["size"])
    else:
        from .checks import SCOPE_ALGEBRAS
        family, size = SCOPE_ALGEBRAS[config["algebra"]]
    return invariants.context(family, size, frozenset(int(i) for i in config["theta"]))


def run_experiment(config: dict) -> dict:
    """Run the experiments described by a config mapping.

    Keys: algebra (scope token) or family+size, theta, lattice ("integer"),
    height, words, seed, denominator_cap, orbit ({"t_values": [...],
    "normalize": bool} optional).
    """
    seed = int(config.get("seed", 42))
    cap = int(config.get("denominator_cap", DEFAULT_DENOMINATOR_CAP))
    ctx = _context_from_config(config)
    height = int(config.get("height", 3))
    if config.get("lattice", "integer") != "integer":
        raise ValueError("only the integer root-vector lattice is supported")
    report = {"seed": seed, "context": ctx.describe(), "height": height}

    if "words" in config:
        sampler = GroupSampler(standard_generators(ctx),
                               int(config.get("word_length", 6)), seed)
        values = sample_word_values(ctx, sampler, int(config["words"]))
        report["word_values"] = value_set_discreteness(values, cap)
        report["word_values"]["word_length"] = sampler.word_length

    lattice = integer_lattice(ctx.algebra, ctx.dec.u_indices, height)
    report["lie_lattice"] = lattice.is_lie_lattice()
    values = invariant_over_lattice(ctx, lattice)
    report["invariant_values"] = value_set_discreteness(values, cap)

    orbit_cfg = config.get("orbit")
    if orbit_cfg:
        ts = [linalg.parse_rat(t) for t in orbit_cfg.get("t_values", [1, 2, 4])]
        report["orbit"] = orbit_probe(lattice, ctx.h_grading(), ts,
                                      normalize=bool(orbit_cfg.get("normalize", False)))
    report["ok"] = all(
        report[k]["within_cap"] for k in ("word_values", "invariant_values")
        if k in report)
    return report
