from __future__ import annotations

import logging
from typing import List, Sequence, Tuple

from core.algebra.structure import Algebra, Element, StructureMap, multiply_elements
from core.exactnum.cyclotomic import ZERO, Cyclotomic, common_order
from core.exactnum.linalg import BasisSolver, IncrementalSpan, solve_linear

logger = logging.getLogger(__name__)


def subalgebra_closure(
    algebra: Algebra, gens: Sequence[Element], include_unit: bool = True
) -> Tuple[Algebra, List[Element]]:
    """Subalgebra generated by ``gens`` plus the embedding of its basis into ``algebra``.

    Words are grown by right multiplication with the generators until the
    span stops growing.
    """
    if not gens:
        raise ValueError("subalgebra_closure needs at least one generator")
    span = IncrementalSpan(algebra.dim)
    basis: List[Element] = []
    seeds = ([algebra.unit_element] if include_unit else []) + list(gens)
    frontier: List[Element] = []
    for candidate in seeds:
        if span.add(candidate.coords):
            basis.append(candidate)
            frontier.append(candidate)

    rounds = 0
    while frontier:
        rounds += 1
        if rounds > algebra.dim:
            raise AssertionError("closure did not stabilise within dim rounds")
        fresh: List[Element] = []
        for word in frontier:
            for gen in gens:
                product = multiply_elements(algebra, word, gen)
                if span.add(product.coords):
                    basis.append(product)
                    fresh.append(product)
        frontier = fresh
    logger.debug("closure reached dim %s after %s rounds", len(basis), rounds)
    return restrict_to_basis(algebra, basis), basis


def restrict_to_basis(algebra: Algebra, basis: Sequence[Element]) -> Algebra:
    """Structure constants of a multiplicatively closed span in the given basis."""
    solver = BasisSolver([b.coords for b in basis])
    size = len(basis)
    structure: StructureMap = {}
    for i, left in enumerate(basis):
        for j, right in enumerate(basis):
            product = multiply_elements(algebra, left, right)
            if product.is_zero():
                continue
            coords = solver.coordinates(product.coords)
            if coords is None:
                raise ValueError(f"Span is not closed: b{i} * b{j} leaves it")
            structure[(i, j)] = tuple((k, c) for k, c in enumerate(coords) if c)

    unit_coords = solver.coordinates(algebra.unit)
    if unit_coords is None:
        unit_coords = _solve_unit(structure, size)
    values = [c for entries in structure.values() for _, c in entries] + list(unit_coords)
    return Algebra(size, common_order(values), structure, tuple(unit_coords), None, name=algebra.name + "|sub")


def _solve_unit(structure: StructureMap, size: int) -> List[Cyclotomic]:
    # e b_i = b_i and b_i e = b_i, linear in the coordinates of e
    rows: List[List[Cyclotomic]] = []
    rhs: List[Cyclotomic] = []
    for i in range(size):
        for side in ("left", "right"):
            block = [[ZERO] * size for _ in range(size)]
            for j in range(size):
                key = (j, i) if side == "left" else (i, j)
                for k, c in structure.get(key, ()):
                    block[k][j] = block[k][j] + c
            for k in range(size):
                rows.append(block[k])
                rhs.append(Cyclotomic.from_int(1 if k == i else 0))
    solution = solve_linear(rows, rhs)
    if solution is None:
        raise ValueError("Generated subalgebra has no unit; pass include_unit=True")
    return solution
