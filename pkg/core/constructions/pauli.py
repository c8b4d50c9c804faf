"""Clock-and-shift gradings of matrix algebras.

P = diag(1, z, ..., z^(n-1)) with z = zeta_n and Q the cyclic shift
(Q e_r = e_(r-1), a single 1 at (r, r+1 mod n)) satisfy QP = z PQ, so
P^i Q^j P^k Q^l = z^(jk - il) P^k Q^l P^i Q^j.
"""

from __future__ import annotations

from typing import List

from core.algebra.constructors import matrix_algebra
from core.algebra.structure import Element
from core.constructions.base import ConstructionError, NamedConstruction, build_decomposition
from core.decomp.decomposition import ThetaTable
from core.exactnum.cyclotomic import ZERO, make_root
from core.gradedgroup.cocycles import pauli_bicharacter
from core.gradedgroup.groups import AbelianType


def pauli_monomial(n: int, i: int, j: int) -> Element:
    """P^i Q^j in M_n: entry z^(i r) at (r, r + j mod n)."""
    coords = [ZERO] * (n * n)
    for r in range(n):
        coords[r * n + (r + j) % n] = make_root(n, i * r)
    return Element(tuple(coords))


def pauli_labels(n: int) -> List[str]:
    return [f"({i},{j})" for i in range(n) for j in range(n)]


def pauli_decomposition(n: int = 2) -> NamedConstruction:
    """M_n split into the n^2 lines K P^i Q^j, row-major in (i, j)."""
    if n < 1:
        raise ConstructionError(f"Matrix size must be positive, got {n}")
    algebra = matrix_algebra(n)
    components = [[pauli_monomial(n, i, j)] for i in range(n) for j in range(n)]
    labels = pauli_labels(n)
    expected = ThetaTable.from_entries(pauli_bicharacter(n).values, labels)
    group = AbelianType((n, n) if n > 1 else ())
    return NamedConstruction(
        name="pauli",
        decomposition=build_decomposition(algebra, components, labels),
        expected_theta=expected,
        expected_group=group,
        params={"n": n},
    )
