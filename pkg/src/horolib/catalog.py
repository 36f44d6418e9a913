"""Hand-maintained classification facts used as independent ground truth.

The patterns below are entered from the classical tables, not computed, so
comparing them against the library's classification routines is a real
cross-check.  Simple-root numbering is Bourbaki's.
"""
from __future__ import annotations

SIMPLE_TYPES = (
    [("A", r) for r in range(1, 9)]
    + [("B", r) for r in range(2, 9)]
    + [("C", r) for r in range(2, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("E", r) for r in range(6, 9)]
    + [("F", 4), ("G", 2)]
)

POSITIVE_ROOT_COUNTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}

HIGHEST_ROOTS = {
    "A": lambda r: (1,) * r,
    "B": lambda r: (1,) + (2,) * (r - 1),
    "C": lambda r: (2,) * (r - 1) + (1,),
    "D": lambda r: (1,) + (2,) * (r - 3) + (1, 1),
    "E": lambda r: {6: (1, 2, 2, 3, 2, 1),
                    7: (2, 2, 3, 4, 3, 2, 1),
                    8: (2, 3, 4, 6, 5, 4, 3, 2)}[r],
    "F": lambda r: (2, 3, 4, 2),
    "G": lambda r: (3, 2),
}


def expected_commutative(typ: str, rank: int):
    """Reflexive commutative singleton thetas of a simple type, 1-based."""
    if typ == "A":
        return [{(rank + 1) // 2}] if rank % 2 == 1 else []
    if typ == "B":
        return [{1}]
    if typ == "C":
        return [{rank}]
    if typ == "D":
        out = [{1}]
        if rank % 2 == 0:
            out += [{rank - 1}, {rank}]
        return out
    if typ == "E":
        return [{7}] if rank == 7 else []
    return []


def expected_heisenberg(typ: str, rank: int):
    """The Heisenberg theta of a simple type; None for A_1."""
    if typ == "A":
        return None if rank == 1 else {1, rank}
    if typ == "B":
        return {2}
    if typ == "C":
        return {1}
    if typ == "D":
        return {2}
    if typ == "E":
        return {6: {2}, 7: {1}, 8: {8}}[rank]
    if typ == "F":
        return {1}
    if typ == "G":
        return {2}
    raise ValueError(typ)


# Restricted-root expectations for the non-split Heisenberg rows with a
# higher-dimensional center.  Rows whose restricted system is reduced can be
# cross-checked at the root-system level; the non-reduced one is echoed as a
# fixture only.
RESTRICTED_HEISENBERG_FIXTURES = (
    {"label": "quaternionic special linear, 3 quaternionic dims",
     "restricted_type": ["A", 2], "theta_nodes": [1, 2],
     "dim_center": 4, "root_multiplicity": 4, "reduced": True},
    {"label": "quaternionic special linear, 4 quaternionic dims",
     "restricted_type": ["A", 3], "theta_nodes": [1, 3],
     "dim_center": 4, "root_multiplicity": 4, "reduced": True},
    {"label": "quaternionic unitary, signature (2,3)",
     "restricted_type": ["BC", 2], "theta_nodes": [1],
     "dim_center": 3, "root_multiplicity": None, "reduced": False},
    {"label": "exceptional rank-two form acting on the octonionic plane",
     "restricted_type": ["A", 2], "theta_nodes": [1, 2],
     "dim_center": 8, "root_multiplicity": 8, "reduced": True},
)
