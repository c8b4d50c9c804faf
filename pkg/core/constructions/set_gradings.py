"""Two decompositions that separate minimality, set gradings and group gradings.

``minimal_non_set_grading``: M_2 + M_4 with sixteen components indexed by
(k, l) in Z_4^2. The four components at (0,0), (2,0), (0,1), (2,1) pair a
Pauli monomial of M_4 with D, N or DN in M_2 (D = diag(1,-1), N the swap).
The theta table is xi^(jk - il) with xi = zeta_4, so it is minimal, but
(N,0)^2 lands in R_(0,0) while (0,Q)^2 lands in R_(0,2).

``non_realizable_set_grading``: the six-dimensional subalgebra of M_6
generated by L = diag(D,D,D) and J = diag(0,0,N), split into the lines
I, J^2, LJ, LJ^2, J, L. Every product of lines is a line, yet
J^2 * LJ^2 = LJ^2 = I * LJ^2, so no group realizes it.
"""

from __future__ import annotations

from typing import List, Tuple

from core.algebra.constructors import (
    direct_sum,
    element_from_matrix,
    embed_component,
    matrix_algebra,
)
from core.algebra.structure import Element
from core.algebra.subalgebra import subalgebra_closure
from core.constructions.base import NamedConstruction, build_decomposition
from core.constructions.pauli import pauli_labels, pauli_monomial
from core.decomp.decomposition import ThetaTable
from core.exactnum.linalg import BasisSolver
from core.gradedgroup.cocycles import pauli_bicharacter

D = [[1, 0], [0, -1]]
N = [[0, 1], [1, 0]]

# (k, l) in Z_4^2 -> (i, j) of the paired M_2 monomial D^i N^j
_PAIRED = {(0, 0): (0, 0), (2, 0): (1, 0), (0, 1): (0, 1), (2, 1): (1, 1)}


def minimal_non_set_grading() -> NamedConstruction:
    small, large = matrix_algebra(2), matrix_algebra(4)
    algebra = direct_sum(small, large)
    components: List[List[Element]] = []
    for k in range(4):
        for l in range(4):
            vectors = [embed_component(algebra, small.dim, pauli_monomial(4, k, l))]
            if (k, l) in _PAIRED:
                i, j = _PAIRED[(k, l)]
                vectors.append(embed_component(algebra, 0, pauli_monomial(2, i, j)))
            components.append(vectors)
    labels = pauli_labels(4)
    return NamedConstruction(
        name="minimal-non-set-grading",
        decomposition=build_decomposition(algebra, components, labels),
        expected_theta=ThetaTable.from_entries(pauli_bicharacter(4).values, labels),
    )


def _block_diag(*blocks: List[List[int]]) -> List[List[int]]:
    size = sum(len(b) for b in blocks)
    matrix = [[0] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for r, row in enumerate(block):
            for c, value in enumerate(row):
                matrix[offset + r][offset + c] = value
        offset += len(block)
    return matrix


def _matmul(left: List[List[int]], right: List[List[int]]) -> List[List[int]]:
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*right)] for row in left]


NON_REALIZABLE_THETA = [
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, -1, -1, -1],
    [1, 1, -1, 1, -1, 1],
    [1, 1, -1, -1, 1, -1],
    [1, 1, -1, 1, -1, 1],
]


def non_realizable_generators() -> Tuple[List[List[int]], List[List[int]]]:
    """L = diag(D,D,D) and J = diag(0,0,N) as 6x6 matrices."""
    zero = [[0, 0], [0, 0]]
    return _block_diag(D, D, D), _block_diag(zero, zero, N)


def non_realizable_set_grading() -> NamedConstruction:
    ambient = matrix_algebra(6)
    identity = [[1, 0], [0, 1]]
    L, J = non_realizable_generators()
    J2 = _matmul(J, J)
    words = {
        "I6": _block_diag(identity, identity, identity),
        "J^2": J2,
        "LJ": _matmul(L, J),
        "LJ^2": _matmul(L, J2),
        "J": J,
        "L": L,
    }
    algebra, basis = subalgebra_closure(ambient, [element_from_matrix(L), element_from_matrix(J)])
    solver = BasisSolver([b.coords for b in basis])
    components = []
    for matrix in words.values():
        coords = solver.coordinates(element_from_matrix(matrix).coords)
        if coords is None:
            raise AssertionError("word outside the generated subalgebra")
        components.append([Element(tuple(coords))])
    labels = list(words)
    return NamedConstruction(
        name="non-realizable-set-grading",
        decomposition=build_decomposition(algebra, components, labels),
        expected_theta=ThetaTable.from_entries(NON_REALIZABLE_THETA, labels),
        ambient=ambient,
        embedding=tuple(basis),
    )


example_6_1 = minimal_non_set_grading
example_6_2 = non_realizable_set_grading
