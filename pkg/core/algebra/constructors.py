"""Standard algebras and the ways of combining them."""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from core.algebra.structure import Algebra, DimensionMismatchError, Element, StructureMap
from core.exactnum.cyclotomic import ONE, ZERO, Cyclotomic, common_order
from core.gradedgroup.cocycles import Cocycle, require_cocycle, trivial_cocycle
from core.gradedgroup.groups import CayleyTable, validate_table

Matrix = List[List[Cyclotomic]]


def _freeze(entries: Dict[Tuple[int, int], List[Tuple[int, Cyclotomic]]]) -> StructureMap:
    return {key: tuple(value) for key, value in entries.items() if value}


def _conductor(structure: StructureMap, unit: Sequence[Cyclotomic]) -> int:
    values = [c for entries in structure.values() for _, c in entries]
    return common_order(list(values) + list(unit))


def matrix_algebra(n: int) -> Algebra:
    """M_n with basis e_ij at index i*n + j."""
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got {n}")
    structure: StructureMap = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                structure[(i * n + j, j * n + l)] = ((i * n + l, ONE),)
    unit = tuple(ONE if i == j else ZERO for i in range(n) for j in range(n))
    return Algebra(n * n, 1, structure, unit, ((0, n * n),), name=f"M{n}")


def element_from_matrix(matrix: Sequence[Sequence[object]]) -> Element:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("Matrix must be square")
    return Element.from_values([value for row in matrix for value in row])


def matrix_from_element(x: Element) -> Matrix:
    n = int(round(len(x.coords) ** 0.5))
    if n * n != len(x.coords):
        raise DimensionMismatchError(n * n, len(x.coords))
    return [list(x.coords[i * n : (i + 1) * n]) for i in range(n)]


def direct_sum(first: Algebra, second: Algebra) -> Algebra:
    offset = first.dim
    structure: StructureMap = dict(first.structure)
    for (i, j), entries in second.structure.items():
        structure[(i + offset, j + offset)] = tuple((k + offset, c) for k, c in entries)
    components = None
    if first.components is not None and second.components is not None:
        components = tuple(first.components) + tuple(
            (o + offset, s) for o, s in second.components
        )
    name = f"{first.name}+{second.name}" if first.name and second.name else ""
    return Algebra(
        first.dim + second.dim,
        _conductor(structure, first.unit + second.unit),
        structure,
        first.unit + second.unit,
        components,
        name=name,
    )


def embed_component(total: Algebra, offset: int, x: Element) -> Element:
    """Place a summand element at ``offset`` inside a direct sum."""
    if offset + x.dim > total.dim:
        raise DimensionMismatchError(total.dim, offset + x.dim)
    coords = [ZERO] * total.dim
    coords[offset : offset + x.dim] = x.coords
    return Element(tuple(coords))


def tensor_product(first: Algebra, second: Algebra) -> Algebra:
    """Kronecker basis ordering: a (x) b has index a * second.dim + b."""
    width = second.dim
    entries: Dict[Tuple[int, int], List[Tuple[int, Cyclotomic]]] = {}
    for (i1, j1), left in first.structure.items():
        for (i2, j2), right in second.structure.items():
            key = (i1 * width + i2, j1 * width + j2)
            bucket = entries.setdefault(key, [])
            for k1, c1 in left:
                for k2, c2 in right:
                    bucket.append((k1 * width + k2, c1 * c2))
    structure = _freeze(entries)
    unit = tuple(a * b for a in first.unit for b in second.unit)
    components = None
    if first.components is not None and second.components is not None and len(second.components) == 1:
        components = tuple((o * width, s * width) for o, s in first.components)
    name = f"{first.name}(x){second.name}" if first.name and second.name else ""
    return Algebra(first.dim * width, _conductor(structure, unit), structure, unit, components, name=name)


def tensor_elements(x: Element, y: Element) -> Element:
    return Element(tuple(a * b for a in x.coords for b in y.coords))


def twisted_group_algebra(group: CayleyTable, alpha: Cocycle) -> Algebra:
    """X_g X_h = alpha(g,h) X_gh; the unit is alpha(e,e)^-1 X_e."""
    validate_table(group)
    if alpha.group != group:
        raise ValueError("Cocycle is defined on a different group")
    require_cocycle(alpha)
    structure: StructureMap = {
        (g, h): ((group.mul(g, h), alpha(g, h)),) for g in range(group.m) for h in range(group.m)
    }
    unit = [ZERO] * group.m
    unit[group.identity] = alpha(group.identity, group.identity).inverse()
    return Algebra(group.m, _conductor(structure, unit), structure, tuple(unit), None, name="KaG")


def group_algebra(group: CayleyTable) -> Algebra:
    algebra = twisted_group_algebra(group, trivial_cocycle(group))
    return Algebra(algebra.dim, 1, algebra.structure, algebra.unit, None, name="KG")


def _grassmann_sign(left: int, right: int) -> int:
    """Sign of e_S e_T for disjoint bitmasks S, T: (-1)^#{(s,t): s > t}."""
    swaps = 0
    t = right
    while t:
        low = t & -t
        swaps += bin(left & ~((low << 1) - 1)).count("1")
        t ^= low
    return -1 if swaps % 2 else 1


def grassmann_truncated(k: int) -> Algebra:
    """Exterior algebra on k generators; basis index = bitmask of the generator set."""
    if k < 1:
        raise ValueError(f"Generator count must be positive, got {k}")
    size = 1 << k
    minus = Cyclotomic.from_int(-1)
    structure: StructureMap = {}
    for left in range(size):
        for right in range(size):
            if left & right:
                continue
            sign = _grassmann_sign(left, right)
            structure[(left, right)] = ((left | right, ONE if sign > 0 else minus),)
    unit = tuple(ONE if i == 0 else ZERO for i in range(size))
    return Algebra(size, 1, structure, unit, None, name=f"E{k}")


def generator_mask(*generators: int) -> int:
    """Basis index of e_{g1} ... e_{gr} (1-based generator numbers)."""
    mask = 0
    for g in generators:
        mask |= 1 << (g - 1)
    return mask
