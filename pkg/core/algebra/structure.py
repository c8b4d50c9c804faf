"""Finite-dimensional unital associative algebras given by structure constants."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from core.exactnum.cyclotomic import ONE, ZERO, Cyclotomic
from core.exactnum.linalg import kernel_basis, rank, solve_linear
from core.schema.report import CheckReport

logger = logging.getLogger(__name__)

StructureMap = Dict[Tuple[int, int], Tuple[Tuple[int, Cyclotomic], ...]]


class DimensionMismatchError(ValueError):
    def __init__(self, expected: int, actual: int) -> None:
        super().__init__(f"Expected {expected} coordinates, got {actual}")
        self.expected = expected
        self.actual = actual


@dataclass(frozen=True)
class Element:
    coords: Tuple[Cyclotomic, ...]

    @classmethod
    def from_values(cls, values: Sequence[object]) -> "Element":
        return cls(tuple(Cyclotomic.coerce(v) for v in values))  # type: ignore[arg-type]

    @classmethod
    def from_integers(cls, values: Sequence[int]) -> "Element":
        element = cls(tuple(Cyclotomic.from_int(v) for v in values))
        element.__dict__["integer_coords"] = tuple(values)
        return element

    @classmethod
    def zero(cls, dim: int) -> "Element":
        return cls.from_integers([0] * dim)

    @classmethod
    def basis(cls, dim: int, index: int) -> "Element":
        values = [0] * dim
        values[index] = 1
        return cls.from_integers(values)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @cached_property
    def integer_coords(self) -> Optional[Tuple[int, ...]]:
        values = []
        for c in self.coords:
            value = c.integer_value()
            if value is None:
                return None
            values.append(value)
        return tuple(values)

    def is_zero(self) -> bool:
        ints = self.integer_coords
        if ints is not None:
            return not any(ints)
        return not any(self.coords)

    def support(self) -> List[int]:
        return [i for i, c in enumerate(self.coords) if c]

    def __add__(self, other: "Element") -> "Element":
        _check_same(self, other)
        a, b = self.integer_coords, other.integer_coords
        if a is not None and b is not None:
            return Element.from_integers([x + y for x, y in zip(a, b)])
        return Element(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return self.scale(-1)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, factor: object) -> "Element":
        factor = Cyclotomic.coerce(factor)  # type: ignore[arg-type]
        ints = self.integer_coords
        as_int = factor.integer_value()
        if ints is not None and as_int is not None:
            return Element.from_integers([as_int * x for x in ints])
        return Element(tuple(factor * x if x else ZERO for x in self.coords))


def _check_same(x: Element, y: Element) -> None:
    if len(x.coords) != len(y.coords):
        raise DimensionMismatchError(len(x.coords), len(y.coords))


@dataclass(frozen=True, eq=False)
class Algebra:
    dim: int
    conductor: int
    structure: StructureMap
    unit: Tuple[Cyclotomic, ...]
    components: Optional[Tuple[Tuple[int, int], ...]] = None
    name: str = field(default="")

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError(f"Algebra dimension must be positive, got {self.dim}")
        if len(self.unit) != self.dim:
            raise DimensionMismatchError(self.dim, len(self.unit))

    @property
    def unit_element(self) -> Element:
        return Element(self.unit)

    def basis_element(self, index: int) -> Element:
        return Element.basis(self.dim, index)

    def basis_elements(self) -> List[Element]:
        return [Element.basis(self.dim, i) for i in range(self.dim)]

    def product_of_basis(self, i: int, j: int) -> Element:
        coords = [ZERO] * self.dim
        for k, c in self.structure.get((i, j), ()):
            coords[k] = coords[k] + c
        return Element(tuple(coords))

    @cached_property
    def integer_structure(self) -> Optional[Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]]]:
        table: Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]] = {}
        for key, entries in self.structure.items():
            converted = []
            for k, c in entries:
                value = c.integer_value()
                if value is None:
                    return None
                converted.append((k, value))
            table[key] = tuple(converted)
        return table


def multiply_elements(algebra: Algebra, x: Element, y: Element) -> Element:
    if x.dim != algebra.dim:
        raise DimensionMismatchError(algebra.dim, x.dim)
    if y.dim != algebra.dim:
        raise DimensionMismatchError(algebra.dim, y.dim)
    table = algebra.integer_structure
    xi, yi = x.integer_coords, y.integer_coords
    if table is not None and xi is not None and yi is not None:
        acc = [0] * algebra.dim
        right = [(j, b) for j, b in enumerate(yi) if b]
        for i, a in enumerate(xi):
            if not a:
                continue
            for j, b in right:
                entries = table.get((i, j))
                if entries:
                    ab = a * b
                    for k, c in entries:
                        acc[k] += ab * c
        return Element.from_integers(acc)

    coords: List[Cyclotomic] = [ZERO] * algebra.dim
    right_generic = [(j, b) for j, b in enumerate(y.coords) if b]
    for i, a in enumerate(x.coords):
        if not a:
            continue
        for j, b in right_generic:
            entries = algebra.structure.get((i, j))
            if not entries:
                continue
            ab = a * b
            for k, c in entries:
                coords[k] = coords[k] + ab * c
    return Element(tuple(coords))


def multiply_chain(algebra: Algebra, factors: Sequence[Element]) -> Element:
    if not factors:
        return algebra.unit_element
    result = factors[0]
    for factor in factors[1:]:
        result = multiply_elements(algebra, result, factor)
    return result


def power(algebra: Algebra, x: Element, exponent: int) -> Element:
    if exponent < 0:
        return power(algebra, inverse(algebra, x), -exponent)
    result = algebra.unit_element
    base = x
    while exponent:
        if exponent & 1:
            result = multiply_elements(algebra, result, base)
        exponent >>= 1
        if exponent:
            base = multiply_elements(algebra, base, base)
    return result


def is_nilpotent(algebra: Algebra, x: Element) -> bool:
    """x^d = 0 for d = dim, tested by squaring until the exponent reaches d."""
    current = x
    exponent = 1
    while True:
        if current.is_zero():
            return True
        if exponent >= algebra.dim:
            return False
        current = multiply_elements(algebra, current, current)
        exponent *= 2


def commutator(algebra: Algebra, x: Element, y: Element) -> Element:
    return multiply_elements(algebra, x, y) - multiply_elements(algebra, y, x)


def left_multiplication_matrix(algebra: Algebra, x: Element) -> List[List[Cyclotomic]]:
    """Matrix of b -> x*b; column j holds the coordinates of x*b_j."""
    columns = [multiply_elements(algebra, x, b).coords for b in algebra.basis_elements()]
    return [[columns[j][k] for j in range(algebra.dim)] for k in range(algebra.dim)]


def is_invertible(algebra: Algebra, x: Element) -> bool:
    return rank(left_multiplication_matrix(algebra, x)) == algebra.dim


def inverse(algebra: Algebra, x: Element) -> Element:
    solution = solve_linear(left_multiplication_matrix(algebra, x), list(algebra.unit))
    if solution is None:
        raise ZeroDivisionError("Element is not invertible")
    return Element(tuple(solution))


def is_central(algebra: Algebra, x: Element) -> bool:
    return all(commutator(algebra, x, b).is_zero() for b in algebra.basis_elements())


def center(algebra: Algebra) -> List[Element]:
    """Basis of {x : x b_i = b_i x}, the kernel of the stacked commutator system."""
    d = algebra.dim
    rows: List[List[Cyclotomic]] = []
    for i in range(d):
        block = [[ZERO] * d for _ in range(d)]
        for j in range(d):
            for k, c in algebra.structure.get((j, i), ()):
                block[k][j] = block[k][j] + c
            for k, c in algebra.structure.get((i, j), ()):
                block[k][j] = block[k][j] - c
        rows.extend(row for row in block if any(row))
    if not rows:
        return algebra.basis_elements()
    return [Element(tuple(v)) for v in kernel_basis(rows, d)]


def check_associativity(algebra: Algebra) -> CheckReport:
    basis = algebra.basis_elements()
    products = {
        (i, j): algebra.product_of_basis(i, j) for i in range(algebra.dim) for j in range(algebra.dim)
    }
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            left_pair = products[(i, j)]
            for k in range(algebra.dim):
                left = multiply_elements(algebra, left_pair, basis[k])
                right = multiply_elements(algebra, basis[i], products[(j, k)])
                if left != right:
                    logger.info("associativity fails at %s", (i, j, k))
                    return CheckReport.fail("associativity", {"triple": [i, j, k]})
    return CheckReport.ok("associativity", {"dim": algebra.dim})


def check_unit(algebra: Algebra) -> CheckReport:
    unit = algebra.unit_element
    for i, b in enumerate(algebra.basis_elements()):
        if multiply_elements(algebra, unit, b) != b:
            return CheckReport.fail("unit", {"side": "left", "basis": i})
        if multiply_elements(algebra, b, unit) != b:
            return CheckReport.fail("unit", {"side": "right", "basis": i})
    return CheckReport.ok("unit")


def check_components(algebra: Algebra) -> CheckReport:
    if algebra.components is None:
        return CheckReport.skipped("components", "no component metadata", vacuous=True)
    cursor = 0
    owner: Dict[int, int] = {}
    for index, (offset, size) in enumerate(algebra.components):
        root = int(round(size**0.5))
        if offset != cursor or root * root != size:
            return CheckReport.fail("components", {"component": index, "offset": offset, "size": size})
        for b in range(offset, offset + size):
            owner[b] = index
        cursor += size
    if cursor != algebra.dim:
        return CheckReport.fail("components", {"covered": cursor, "dim": algebra.dim})
    for (i, j), entries in algebra.structure.items():
        if owner[i] != owner[j]:
            if any(c for _, c in entries):
                return CheckReport.fail("components", {"cross_product": [i, j]})
            continue
        if any(owner[k] != owner[i] for k, c in entries if c):
            return CheckReport.fail("components", {"leaves_component": [i, j]})
    return CheckReport.ok("components", {"sizes": [size for _, size in algebra.components]})


def unit_coordinates(dim: int, indices: Sequence[int]) -> Tuple[Cyclotomic, ...]:
    coords = [ZERO] * dim
    for index in indices:
        coords[index] = ONE
    return tuple(coords)
