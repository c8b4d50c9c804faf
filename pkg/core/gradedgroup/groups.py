"""Finite groups as Cayley tables, plus abelian-group classification."""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import factorint

from core.config import get_settings


class InvalidTableError(ValueError):
    pass


class NotAGroup(ValueError):
    def __init__(self, reason: str) -> None:
        super().__init__(f"Not a group: {reason}")
        self.reason = reason


@dataclass(frozen=True)
class CayleyTable:
    m: int
    table: Tuple[Tuple[int, ...], ...]
    identity: int = 0
    labels: Optional[Tuple[str, ...]] = None

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def label(self, g: int) -> str:
        return self.labels[g] if self.labels else str(g)


@dataclass(frozen=True)
class AbelianType:
    invariant_factors: Tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z{d}" for d in self.invariant_factors)


def group_table_defect(m: int, table: Sequence[Sequence[int]], identity: Optional[int] = None) -> Optional[str]:
    """Reason the table fails the group axioms, or None when it is a group."""
    if len(table) != m or any(len(row) != m for row in table):
        return "table is not square"
    if any(not 0 <= v < m for row in table for v in row):
        return "entry out of range"
    for g in range(m):
        if len(set(table[g])) != m:
            return f"row {g} repeats an entry"
        if len({table[h][g] for h in range(m)}) != m:
            return f"column {g} repeats an entry"
    if identity is None:
        identity = find_identity_element(m, table)
        if identity is None:
            return "no identity element"
    if any(table[identity][g] != g or table[g][identity] != g for g in range(m)):
        return f"{identity} is not an identity"
    for g, h, k in itertools.product(range(m), repeat=3):
        if table[table[g][h]][k] != table[g][table[h][k]]:
            return f"associativity fails at ({g},{h},{k})"
    return None


def find_identity_element(m: int, table: Sequence[Sequence[int]]) -> Optional[int]:
    for e in range(m):
        if all(table[e][g] == g and table[g][e] == g for g in range(m)):
            return e
    return None


def validate_table(group: CayleyTable) -> None:
    limit = get_settings().max_group_order
    if group.m > limit:
        raise InvalidTableError(f"Group order {group.m} exceeds the configured limit {limit}")
    defect = group_table_defect(group.m, group.table, group.identity)
    if defect:
        raise InvalidTableError(defect)


def make_table(
    elements: Sequence, multiply, labels: Optional[Sequence[str]] = None
) -> CayleyTable:
    index = {element: i for i, element in enumerate(elements)}
    table = tuple(tuple(index[multiply(a, b)] for b in elements) for a in elements)
    identity = find_identity_element(len(elements), table)
    if identity is None:
        raise InvalidTableError("Generated table has no identity")
    return CayleyTable(len(elements), table, identity, tuple(labels) if labels else None)


def cyclic_group(n: int) -> CayleyTable:
    if n < 1:
        raise InvalidTableError(f"Cyclic group order must be positive, got {n}")
    return make_table(list(range(n)), lambda a, b: (a + b) % n, [str(i) for i in range(n)])


def direct_product(first: CayleyTable, second: CayleyTable) -> CayleyTable:
    """Element (g, h) has index g * second.m + h."""
    table = tuple(
        tuple(
            first.mul(g1, g2) * second.m + second.mul(h1, h2)
            for g2 in range(first.m)
            for h2 in range(second.m)
        )
        for g1 in range(first.m)
        for h1 in range(second.m)
    )
    labels = tuple(
        f"({first.label(g)},{second.label(h)})" for g in range(first.m) for h in range(second.m)
    )
    return CayleyTable(first.m * second.m, table, first.identity * second.m + second.identity, labels)


def abelian_group(factors: Sequence[int]) -> CayleyTable:
    """Z_{d1} x ... x Z_{dr}, lexicographic index order."""
    group = cyclic_group(1)
    for i, d in enumerate(factors):
        group = cyclic_group(d) if i == 0 else direct_product(group, cyclic_group(d))
    return group


def klein_four() -> CayleyTable:
    return abelian_group([2, 2])


_QUATERNION_UNITS = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}  # fmt: skip


def quaternion_group() -> CayleyTable:
    elements = [(s, u) for s in (1, -1) for u in ("1", "i", "j", "k")]

    def multiply(a, b):
        sign, unit = _QUATERNION_UNITS[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    labels = [("" if s > 0 else "-") + u for s, u in elements]
    return make_table(elements, multiply, labels)


def symmetric_group_3() -> CayleyTable:
    elements = list(itertools.permutations(range(3)))

    def compose(a, b):
        return tuple(a[b[i]] for i in range(3))

    labels = ["".join(str(x + 1) for x in p) for p in elements]
    return make_table(elements, compose, labels)


def element_power(group: CayleyTable, g: int, exponent: int) -> int:
    result = group.identity
    for _ in range(exponent):
        result = group.mul(result, g)
    return result


def element_order(group: CayleyTable, g: int) -> int:
    current, order = g, 1
    while current != group.identity:
        current = group.mul(current, g)
        order += 1
    return order


def inverse_of(group: CayleyTable, g: int) -> int:
    return next(h for h in range(group.m) if group.mul(g, h) == group.identity)


def is_abelian(group: CayleyTable) -> bool:
    return all(
        group.mul(g, h) == group.mul(h, g) for g in range(group.m) for h in range(g + 1, group.m)
    )


def centralizer(group: CayleyTable, g: int) -> List[int]:
    return [h for h in range(group.m) if group.mul(g, h) == group.mul(h, g)]


def conjugacy_classes(group: CayleyTable) -> List[Tuple[int, ...]]:
    seen: set = set()
    classes: List[Tuple[int, ...]] = []
    for g in range(group.m):
        if g in seen:
            continue
        orbit = sorted({group.mul(group.mul(h, g), inverse_of(group, h)) for h in range(group.m)})
        seen.update(orbit)
        classes.append(tuple(orbit))
    return classes


def _combine_primary(partitions: Dict[int, List[int]]) -> Tuple[int, ...]:
    width = max((len(parts) for parts in partitions.values()), default=0)
    factors = []
    for t in range(width):
        d = 1
        for p, parts in partitions.items():
            if t < len(parts):
                d *= p ** parts[t]
        factors.append(d)
    return tuple(sorted(factors))


def invariant_factors_of(cyclic_orders: Sequence[int]) -> AbelianType:
    """Invariant factors of a product of cyclic groups of the given orders."""
    partitions: Dict[int, List[int]] = defaultdict(list)
    for n in cyclic_orders:
        for p, e in factorint(n).items():
            partitions[int(p)].append(int(e))
    for parts in partitions.values():
        parts.sort(reverse=True)
    return AbelianType(_combine_primary(partitions))


def classify_abelian(group: CayleyTable) -> AbelianType:
    """Invariant factors from counts of elements killed by p^k.

    #{g : g^(p^k) = e} = p^(sum_i min(k, lambda_i)) recovers each p-primary
    partition lambda.
    """
    if not is_abelian(group):
        raise NotAGroup("classification needs an abelian table")
    partitions: Dict[int, List[int]] = {}
    orders = [element_order(group, g) for g in range(group.m)]
    for p, exponent in factorint(group.m).items():
        p = int(p)
        levels = [0]
        for k in range(1, int(exponent) + 1):
            killed = sum(1 for o in orders if (p**k) % o == 0)
            levels.append(_exact_log(killed, p))
        counts_at_least = [levels[k] - levels[k - 1] for k in range(1, len(levels))]
        parts = []
        for part_index in range(counts_at_least[0] if counts_at_least else 0):
            parts.append(sum(1 for c in counts_at_least if c > part_index))
        partitions[p] = parts
    return AbelianType(_combine_primary(partitions))


def _exact_log(value: int, base: int) -> int:
    exponent = 0
    while value > 1:
        value, remainder = divmod(value, base)
        if remainder:
            raise NotAGroup("element counts are not prime powers")
        exponent += 1
    return exponent
