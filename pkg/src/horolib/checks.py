"""Registered verification checks aggregated by suite and scope.

Every check is a thin callable returning a JSON-ready report with a
"status" of "pass" or "fail"; the CLI verify and tables verbs run these
and nothing else, so no verification logic lives only in the CLI.
"""
from __future__ import annotations

import itertools
import random

import numpy as np

from . import catalog, invariants, lab, linalg, rootsys, splitlie
from .linalg import Q

SCOPE_ALGEBRAS = {
    "sl3": ("sl", 3), "sl4": ("sl", 4), "sl5": ("sl", 5),
    "sp6": ("sp", 6), "so7": ("so_odd", 7), "so8": ("so_even", 8),
}

# (scope key, theta) pairs with an invariant context, and their role
CONTEXT_CASES = {
    "sl4": ("sl4", frozenset({2})),
    "sl3h": ("sl3", frozenset({1, 2})),
    "sp6h": ("sp6", frozenset({1})),
    "so7": ("so7", frozenset({1})),
    "so7h": ("so7", frozenset({2})),
    "so8": ("so8", frozenset({1})),
}

STRUCTURE_CASES = [
    ("sl3", frozenset({1, 2})), ("sl4", frozenset({2})),
    ("sl5", frozenset({1, 2, 3, 4})), ("sp6", frozenset({1})),
    ("so7", frozenset({1})), ("so8", frozenset({1})),
]

CLOSED_FORM_CASES = {
    "sl4": ("sl4", frozenset({2})),
    "sp6c": ("sp6", frozenset({3})),
    "so7": ("so7", frozenset({1})),
    "so8": ("so8", frozenset({1})),
    "so8e": ("so8", frozenset({4})),
}

SEMI_INVARIANCE_KEYS = ("sl4", "sl3h", "sp6h")
CELL_CRITERION_KEYS = ("sl4", "sl3h", "sp6h")
EXPANSION_KEYS = ("sl3h", "sp6h")


def _algebra(key: str) -> splitlie.SplitLieAlgebra:
    family, size = SCOPE_ALGEBRAS[key]
    return splitlie.build_algebra(family, size)


def _context(case: str) -> invariants.InvariantContext:
    key, theta = CONTEXT_CASES[case]
    return invariants.make_context(_algebra(key), theta)


# ---------------------------------------------------------------------------
# root system suite

def check_root_tables(seed: int = 42) -> dict:
    bad = []
    for typ, rank in catalog.SIMPLE_TYPES:
        rs = rootsys.root_system(typ, rank)
        if len(rs.positive_roots) != catalog.POSITIVE_ROOT_COUNTS[typ](rank):
            bad.append({"type": typ, "rank": rank, "what": "count"})
        if rootsys.highest_root(rs).coords != catalog.HIGHEST_ROOTS[typ](rank):
            bad.append({"type": typ, "rank": rank, "what": "highest_root"})
        if len(rs.w0_word) != len(rs.positive_roots):
            bad.append({"type": typ, "rank": rank, "what": "w0_length"})
    return {"name": "rootsys.tables", "status": "pass" if not bad else "fail",
            "failures": bad}


def check_commutative_classification(seed: int = 42) -> dict:
    bad = []
    for typ, rank in catalog.SIMPLE_TYPES:
        rs = rootsys.root_system(typ, rank)
        got = sorted(sorted(t) for t in rootsys.classify_reflexive_commutative(rs))
        want = sorted(sorted(t) for t in catalog.expected_commutative(typ, rank))
        if got != want:
            bad.append({"type": typ, "rank": rank, "got": got, "want": want})
        for theta in rootsys.classify_reflexive_commutative(rs):
            if not rootsys.is_reflexive(rs, theta) or rootsys.grading(rs, theta).depth != 1:
                bad.append({"type": typ, "rank": rank, "theta": sorted(theta),
                            "what": "not reflexive depth-1"})
    return {"name": "rootsys.commutative_classification",
            "status": "pass" if not bad else "fail", "failures": bad}


def check_heisenberg_classification(seed: int = 42) -> dict:
    bad = []
    for typ, rank in catalog.SIMPLE_TYPES:
        rs = rootsys.root_system(typ, rank)
        want = catalog.expected_heisenberg(typ, rank)
        if want is None:
            try:
                rootsys.heisenberg_theta(rs)
                bad.append({"type": typ, "rank": rank, "what": "A_1 not rejected"})
            except ValueError:
                pass
            continue
        got = rootsys.heisenberg_theta(rs)
        if got != frozenset(want):
            bad.append({"type": typ, "rank": rank, "got": sorted(got), "want": sorted(want)})
        if rootsys.check_heisenberg_sum(rs, got) != 2:
            bad.append({"type": typ, "rank": rank, "what": "coefficient sum != 2"})
        if not rootsys.is_heisenberg(rs, got):
            bad.append({"type": typ, "rank": rank, "what": "not Heisenberg"})
    return {"name": "rootsys.heisenberg_classification",
            "status": "pass" if not bad else "fail", "failures": bad}


def check_reduction_fixed_points(seed: int = 42) -> dict:
    """Iterated enlargement reaches a reflexive fixed point within rank steps."""
    bad = []
    for typ, rank in catalog.SIMPLE_TYPES:
        if rank > 6:
            continue
        rs = rootsys.root_system(typ, rank)
        for bits in range(1, 2 ** rank):
            theta = frozenset(i + 1 for i in range(rank) if bits >> i & 1)
            cur = theta
            for _ in range(rank + 1):
                nxt = rootsys.reduction_step_theta(rs, cur)
                if nxt == cur:
                    break
                cur = nxt
            if not rootsys.is_reflexive(rs, cur) or not theta <= cur:
                bad.append({"type": typ, "rank": rank, "theta": sorted(theta),
                            "reached": sorted(cur)})
            if rootsys.reduction_step_theta(rs, cur) != cur:
                bad.append({"type": typ, "rank": rank, "theta": sorted(theta),
                            "what": "not a fixed point"})
    return {"name": "rootsys.reduction_fixed_points",
            "status": "pass" if not bad else "fail", "failures": bad}


def check_theta_zero(seed: int = 42) -> dict:
    """Compare the stripping step against a scan over the root list."""
    bad = []
    for typ, rank in catalog.SIMPLE_TYPES:
        if rank > 6:
            continue
        rs = rootsys.root_system(typ, rank)
        alpha = rootsys.highest_root(rs)
        roots = {r.coords for r in rs.positive_roots}
        theta0 = {i + 1 for i in range(rank)
                  if tuple(a - b for a, b in zip(
                      alpha.coords, (1 if k == i else 0 for k in range(rank)))) in roots}
        for bits in range(1, 2 ** rank):
            theta = frozenset(i + 1 for i in range(rank) if bits >> i & 1)
            defined = rootsys.grading(rs, theta).depth >= 3 and theta0 <= theta
            try:
                got = rootsys.theta_zero_reduction(rs, theta)
                if not defined or got != theta - theta0:
                    bad.append({"type": typ, "rank": rank, "theta": sorted(theta)})
            except ValueError:
                if defined:
                    bad.append({"type": typ, "rank": rank, "theta": sorted(theta),
                                "what": "rejected but defined"})
    return {"name": "rootsys.theta_zero_reduction",
            "status": "pass" if not bad else "fail", "failures": bad}


# ---------------------------------------------------------------------------
# structure suite

def check_structure(key: str, theta: frozenset, seed: int = 42) -> dict:
    rep = splitlie.verify_structure(_algebra(key), theta)
    rep["name"] = f"structure.grading[{key}:{'+'.join(map(str, sorted(theta)))}]"
    rep["status"] = "pass" if rep.pop("ok") else "fail"
    return rep


def check_jacobi(key: str, seed: int = 42) -> dict:
    alg = _algebra(key)
    failures = []
    if alg.dim <= 40:
        triples = itertools.combinations(range(alg.dim), 3)
    else:
        rng = random.Random(seed)
        triples = (tuple(rng.sample(range(alg.dim), 3)) for _ in range(1000))
    for i, j, k in triples:
        x, y, z = (alg.basis_vector(t) for t in (i, j, k))
        total = (alg.bracket(x, alg.bracket(y, z))
                 + alg.bracket(y, alg.bracket(z, x))
                 + alg.bracket(z, alg.bracket(x, y)))
        if not total.is_zero():
            failures.append([i, j, k])
    return {"name": f"structure.jacobi[{key}]",
            "status": "pass" if not failures else "fail", "failures": failures}


def check_root_decomposition(key: str, seed: int = 42) -> dict:
    """ad-Cartan weights of the built algebra match the abstract system."""
    alg = _algebra(key)
    rs = alg.rootsystem
    failures = []
    for k in range(alg.rank, alg.dim):
        root = alg.root_of_index[k]
        vec = alg.basis_vector(k)
        for i in range(1, alg.rank + 1):
            h = alg.coroot(i)
            expect = sum(root.coords[t] * rs.cartan.entries[t][i - 1]
                         for t in range(alg.rank))
            if alg.bracket(h, vec) != Q(expect) * vec:
                failures.append({"index": k, "coroot": i})
    counted = {r.coords for r in rs.positive_roots}
    seen = {alg.root_of_index[k].coords for k in range(alg.rank, alg.dim)
            if alg.root_of_index[k].is_positive}
    if counted != seen:
        failures.append({"what": "root sets differ"})
    return {"name": f"structure.root_decomposition[{key}]",
            "status": "pass" if not failures else "fail", "failures": failures}


def check_killing_level_pairing(key: str, theta: frozenset, seed: int = 42) -> dict:
    """The Killing form pairs opposite levels nondegenerately."""
    alg = _algebra(key)
    dec = splitlie.graded_decomposition(alg, theta)
    failures = []
    for j in range(0, dec.depth + 1):
        a, b = dec.indices(j), dec.indices(-j)
        block = alg.killing_matrix[np.ix_(a, b)]
        if linalg.rank(block) != len(a):
            failures.append({"level": j})
        for j2 in dec.pieces:
            if j2 != -j and not linalg.is_zero(
                    alg.killing_matrix[np.ix_(a, dec.indices(j2))]):
                failures.append({"level": j, "against": j2})
    return {"name": f"structure.killing_pairing[{key}:{'+'.join(map(str, sorted(theta)))}]",
            "status": "pass" if not failures else "fail", "failures": failures}


# ---------------------------------------------------------------------------
# invariants suite

def check_semi_invariance(case: str, samples: int = 100, seed: int = 42) -> dict:
    rep = invariants.semiinvariance_check(_context(case), samples=samples, seed=seed)
    rep["name"] = f"invariants.semi_invariance[{case}]"
    return rep


def check_opposite_cell(case: str, samples: int = 200, seed: int = 42) -> dict:
    rep = invariants.omega_criterion_check(_context(case), samples=samples, seed=seed)
    rep["name"] = f"invariants.opposite_cell[{case}]"
    return rep


def check_sl2_triples(case: str, seed: int = 42) -> dict:
    ctx = _context(case)
    failures = []
    try:
        if ctx.kind == "commutative":
            x0, h0, y0 = invariants.sl2_triple_commutative(ctx)
            if h0 != 2 * ctx.h_grading():
                failures.append({"what": "middle member is not twice the grading element"})
        else:
            x0, h0, y0 = invariants.sl2_triple_center(ctx)
            if h0 != ctx.h_grading():
                failures.append({"what": "middle member is not the grading element"})
            adh = ctx.algebra.ad(h0)
            for k in range(ctx.algebra.dim):
                if adh[k, k] != ctx.dec.level_of_index(k):
                    failures.append({"what": "grading eigenvalues", "index": k})
    except (ValueError, AssertionError) as exc:
        failures.append({"error": str(exc)})
    return {"name": f"invariants.sl2_triples[{case}]",
            "status": "pass" if not failures else "fail", "failures": failures}


def check_heisenberg_expansion(case: str, samples: int = 50, seed: int = 42) -> dict:
    ctx = _context(case)
    rng = random.Random(seed)
    alg = ctx.algebra
    failures = []
    top_nonzero = False
    for _ in range(samples):
        v = invariants.random_element(rng, alg, ctx.dec.indices(1))
        z = invariants.random_element(rng, alg, ctx.dec.indices(2))
        terms = invariants.heisenberg_expansion(ctx, v, z)
        if terms.full != invariants.relative_invariant(ctx, v + z):
            failures.append({"check": "expansion_identity"})
        if terms.v_term != 0:
            top_nonzero = True
        at_zero = invariants.heisenberg_expansion(ctx, alg.zero(), z)
        if at_zero.full != at_zero.z_term:
            failures.append({"check": "pure_center_reduction"})
    # the top homogeneous term separates the two Heisenberg families
    is_long_root_case = case != "sp6h"
    if top_nonzero != is_long_root_case:
        failures.append({"check": "top_term_vanishing",
                         "nonzero_seen": top_nonzero})
    return {"name": f"invariants.heisenberg_expansion[{case}]",
            "status": "pass" if not failures else "fail",
            "top_term_nonzero": top_nonzero, "failures": failures}


def check_duality(case: str, samples: int = 50, seed: int = 42) -> dict:
    ctx = _context(case)
    rng = random.Random(seed)
    failures = []
    gram = invariants.duality_gram(ctx)
    if linalg.rank(gram) != len(ctx.dec.u_indices):
        failures.append({"check": "gram_rank", "rank": linalg.rank(gram)})
    if ctx.kind == "commutative":
        for _ in range(samples):
            x = invariants.random_element(rng, ctx.algebra, ctx.dec.u_indices)
            y = invariants.random_element(rng, ctx.algebra, ctx.dec.uminus_indices)
            coeffs = invariants._interpolate(
                lambda t: invariants.pairing_invariant(ctx, t * x, t * y),
                2 * invariants.invariant_degree(ctx))
            if coeffs[2] != invariants.duality_form(ctx, x, y):
                failures.append({"check": "quadratic_coefficient"})
    return {"name": f"invariants.duality[{case}]",
            "status": "pass" if not failures else "fail", "failures": failures}


# ---------------------------------------------------------------------------
# tables suite

def check_closed_form(label: str, samples: int = 20, seed: int = 42) -> dict:
    key, theta = CLOSED_FORM_CASES[label]
    ctx = invariants.make_context(_algebra(key), theta)
    rep = invariants.closed_form_check(ctx, samples=samples, seed=seed)
    rep["name"] = f"tables.closed_form[{label}]"
    return rep


def classification_rows() -> list:
    """Machine classification next to the hand-entered expectation, per type."""
    rows = []
    for typ, rank in catalog.SIMPLE_TYPES:
        rs = rootsys.root_system(typ, rank)
        got_c = sorted(sorted(t) for t in rootsys.classify_reflexive_commutative(rs))
        want_c = sorted(sorted(t) for t in catalog.expected_commutative(typ, rank))
        want_h = catalog.expected_heisenberg(typ, rank)
        if want_h is None:
            got_h = None
        else:
            got_h = sorted(rootsys.heisenberg_theta(rs))
        row = {"type": typ, "rank": rank,
               "commutative": got_c, "commutative_expected": want_c,
               "heisenberg": got_h,
               "heisenberg_expected": sorted(want_h) if want_h else None,
               "match": got_c == want_c and got_h == (sorted(want_h) if want_h else None)}
        if want_h is not None:
            row["coefficient_sum"] = rootsys.check_heisenberg_sum(
                rs, frozenset(want_h))
        rows.append(row)
    for fixture in catalog.RESTRICTED_HEISENBERG_FIXTURES:
        row = dict(fixture)
        row["source"] = "fixture"
        if fixture["reduced"]:
            typ, rank = fixture["restricted_type"]
            rs = rootsys.root_system(typ, rank)
            got = sorted(rootsys.heisenberg_theta(rs))
            row["computed_nodes"] = got
            row["match"] = got == sorted(fixture["theta_nodes"])
        else:
            row["match"] = True     # echoed, not computable in a reduced system
        rows.append(row)
    return rows


def check_tables(seed: int = 42) -> dict:
    rows = classification_rows()
    bad = [r for r in rows if not r["match"]]
    return {"name": "tables.classification",
            "status": "pass" if not bad else "fail",
            "rows": len(rows), "failures": bad}


# ---------------------------------------------------------------------------
# registry

def _registry():
    reg = []

    def add(suite, scopes, fn):
        reg.append({"suite": suite, "scopes": scopes, "fn": fn})

    add("rootsys", None, check_root_tables)
    add("rootsys", None, check_commutative_classification)
    add("rootsys", None, check_heisenberg_classification)
    add("rootsys", None, check_reduction_fixed_points)
    add("rootsys", None, check_theta_zero)

    for key, theta in STRUCTURE_CASES:
        add("structure", {key},
            lambda seed=42, key=key, theta=theta: check_structure(key, theta, seed=seed))
        add("structure", {key},
            lambda seed=42, key=key, theta=theta: check_killing_level_pairing(key, theta, seed=seed))
    for key in SCOPE_ALGEBRAS:
        add("structure", {key}, lambda seed=42, key=key: check_jacobi(key, seed=seed))
        add("structure", {key}, lambda seed=42, key=key: check_root_decomposition(key, seed=seed))

    for case in SEMI_INVARIANCE_KEYS:
        add("invariants", {CONTEXT_CASES[case][0]},
            lambda seed=42, case=case: check_semi_invariance(case, seed=seed))
    for case in CELL_CRITERION_KEYS:
        add("invariants", {CONTEXT_CASES[case][0]},
            lambda seed=42, case=case: check_opposite_cell(case, seed=seed))
    for case in CONTEXT_CASES:
        add("invariants", {CONTEXT_CASES[case][0]},
            lambda seed=42, case=case: check_sl2_triples(case, seed=seed))
        add("invariants", {CONTEXT_CASES[case][0]},
            lambda seed=42, case=case: check_duality(case, seed=seed))
    for case in EXPANSION_KEYS:
        add("invariants", {CONTEXT_CASES[case][0]},
            lambda seed=42, case=case: check_heisenberg_expansion(case, seed=seed))

    for label in CLOSED_FORM_CASES:
        add("tables", {CLOSED_FORM_CASES[label][0]},
            lambda seed=42, label=label: check_closed_form(label, seed=seed))
    add("tables", None, check_tables)
    return reg


SUITES = ("rootsys", "structure", "invariants", "tables", "all")


def run_checks(suite: str = "all", scope=None, seed: int = 42) -> dict:
    """Run every registered check in the suite and scope, reports sorted by name."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    scope_set = set(scope) if scope else None
    if scope_set is not None:
        unknown = scope_set - set(SCOPE_ALGEBRAS)
        if unknown:
            raise ValueError(f"unknown scope keys {sorted(unknown)}")
    reports = []
    for entry in _registry():
        if suite != "all" and entry["suite"] != suite:
            continue
        if scope_set is not None and entry["scopes"] is not None \
                and not (entry["scopes"] & scope_set):
            continue
        reports.append(entry["fn"](seed=seed))
    reports.sort(key=lambda r: r["name"])
    ok = all(r["status"] == "pass" for r in reports)
    return {"suite": suite, "scope": sorted(scope_set) if scope_set else None,
            "seed": seed, "ok": ok, "checks": reports}
