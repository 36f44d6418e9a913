"""Fault-injection helpers: corrupted copies of algebras for teeth tests."""
import copy

from horolib import rootsys
from horolib.linalg import Q


def corrupt_structure_constant(algebra, p, q, k, delta=1):
    """A copy of the algebra with one bracket-table entry shifted by delta."""
    out = copy.copy(algebra)
    table = dict(algebra._brackets)
    terms = dict(table.get((p, q), ()))
    terms[k] = terms.get(k, Q(0)) + Q(delta)
    if terms[k] == 0:
        del terms[k]
    if terms:
        table[(p, q)] = tuple(sorted(terms.items()))
    else:
        table.pop((p, q), None)
    out._brackets = table
    return out


def corrupt_cartan_entry(algebra, i, j, delta=-1):
    """A copy whose claimed root system comes from a perturbed Cartan matrix.

    Raises if the perturbed matrix is rejected outright (invalid or not of
    finite type); the caller treats that as the corruption being caught.
    """
    entries = [list(row) for row in algebra.rootsystem.cartan.entries]
    entries[i][j] += delta
    bad = rootsys.generate_roots(
        rootsys.CartanMatrix(tuple(tuple(r) for r in entries)))
    out = copy.copy(algebra)
    out.rootsystem = bad
    return out
