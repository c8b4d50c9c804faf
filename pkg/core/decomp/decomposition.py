"""Vector-space decompositions of an algebra and their commutation scalars."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from core.algebra.structure import Algebra, Element, multiply_elements
from core.exactnum.cyclotomic import ONE, Cyclotomic
from core.exactnum.linalg import BasisSolver, rank

logger = logging.getLogger(__name__)


class ThetaDetectionError(ValueError):
    def __init__(self, message: str, i: int, j: int, pair: Optional[Tuple[int, int]] = None) -> None:
        super().__init__(message)
        self.i = i
        self.j = j
        self.pair = pair


class NotScalarMultiple(ThetaDetectionError):
    def __init__(self, i: int, j: int, pair: Tuple[int, int]) -> None:
        super().__init__(
            f"Components ({i},{j}): a*b is not a scalar multiple of b*a for basis pair {pair}",
            i,
            j,
            pair,
        )


class OneSidedZero(ThetaDetectionError):
    def __init__(self, i: int, j: int, pair: Tuple[int, int]) -> None:
        super().__init__(
            f"Components ({i},{j}): exactly one of a*b, b*a vanishes for basis pair {pair}", i, j, pair
        )


class InconsistentScalar(ThetaDetectionError):
    def __init__(
        self, i: int, j: int, pair: Tuple[int, int], first: Cyclotomic, second: Cyclotomic
    ) -> None:
        super().__init__(
            f"Components ({i},{j}): basis pair {pair} forces {second}, an earlier pair forced {first}",
            i,
            j,
            pair,
        )
        self.first = first
        self.second = second


@dataclass(frozen=True, eq=False)
class Decomposition:
    algebra: Algebra
    components: Tuple[Tuple[Element, ...], ...]
    labels: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("A decomposition needs at least one component")
        for index, component in enumerate(self.components):
            if not component or all(v.is_zero() for v in component):
                raise ValueError(f"Component {index} is zero")
            for vector in component:
                if vector.dim != self.algebra.dim:
                    raise ValueError(
                        f"Component {index} has a vector of length {vector.dim}, "
                        f"algebra dimension is {self.algebra.dim}"
                    )
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i + 1) for i in range(len(self.components))))
        elif len(self.labels) != len(self.components):
            raise ValueError("One label per component is required")

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def sizes(self) -> List[int]:
        return [len(component) for component in self.components]

    @cached_property
    def flat_basis(self) -> List[Element]:
        return [v for component in self.components for v in component]

    @cached_property
    def owners(self) -> List[int]:
        return [index for index, component in enumerate(self.components) for _ in component]

    @cached_property
    def solver(self) -> BasisSolver:
        return BasisSolver([v.coords for v in self.flat_basis])

    def component_support(self, x: Element) -> List[int]:
        """Components carrying a nonzero part of x in the decomposition basis."""
        coords = self.solver.coordinates(x.coords)
        if coords is None:
            raise ValueError("Element is outside the span of the decomposition")
        return sorted({self.owners[k] for k, c in enumerate(coords) if c})

    def component_part(self, x: Element, index: int) -> List[Cyclotomic]:
        coords = self.solver.coordinates(x.coords)
        if coords is None:
            raise ValueError("Element is outside the span of the decomposition")
        return [c for k, c in enumerate(coords) if self.owners[k] == index]

    def label(self, index: int) -> str:
        return self.labels[index]


@dataclass(frozen=True)
class ThetaTable:
    entries: Tuple[Tuple[Cyclotomic, ...], ...]
    constrained: Tuple[Tuple[bool, ...], ...]
    labels: Tuple[str, ...] = ()

    @property
    def m(self) -> int:
        return len(self.entries)

    def __call__(self, i: int, j: int) -> Cyclotomic:
        return self.entries[i][j]

    def matrix(self) -> List[List[Cyclotomic]]:
        return [list(row) for row in self.entries]

    @property
    def fully_constrained(self) -> bool:
        return all(all(row) for row in self.constrained)

    def label(self, index: int) -> str:
        return self.labels[index] if self.labels else str(index + 1)

    @classmethod
    def from_entries(
        cls, entries: Sequence[Sequence[object]], labels: Sequence[str] = ()
    ) -> "ThetaTable":
        values = tuple(tuple(Cyclotomic.coerce(v) for v in row) for row in entries)  # type: ignore[arg-type]
        flags = tuple(tuple(True for _ in row) for row in values)
        return cls(values, flags, tuple(labels))


def check_direct_sum(decomposition: Decomposition) -> bool:
    vectors = [v.coords for v in decomposition.flat_basis]
    if len(vectors) != decomposition.algebra.dim:
        return False
    return rank(vectors) == decomposition.algebra.dim


def _scalar_ratio(ab: Element, ba: Element) -> Optional[Cyclotomic]:
    """theta with ab = theta * ba, or None when ab is not a multiple of ba."""
    pivot = next(k for k, c in enumerate(ba.coords) if c)
    theta = ab.coords[pivot] / ba.coords[pivot]
    if ba.scale(theta) != ab:
        return None
    return theta


def detect_theta(decomposition: Decomposition) -> ThetaTable:
    """theta(i,j) from basis pairs; raises a ThetaDetectionError naming the failing pair."""
    algebra = decomposition.algebra
    cache: Dict[Tuple[int, int, int, int], Element] = {}

    def product(ci: int, a: int, cj: int, b: int) -> Element:
        key = (ci, a, cj, b)
        if key not in cache:
            cache[key] = multiply_elements(
                algebra, decomposition.components[ci][a], decomposition.components[cj][b]
            )
        return cache[key]

    entries: List[List[Cyclotomic]] = []
    constrained: List[List[bool]] = []
    for i, left in enumerate(decomposition.components):
        row: List[Cyclotomic] = []
        flags: List[bool] = []
        for j, right in enumerate(decomposition.components):
            theta: Optional[Cyclotomic] = None
            for a in range(len(left)):
                for b in range(len(right)):
                    ab = product(i, a, j, b)
                    ba = product(j, b, i, a)
                    ab_zero, ba_zero = ab.is_zero(), ba.is_zero()
                    if ab_zero and ba_zero:
                        continue
                    if ab_zero or ba_zero:
                        raise OneSidedZero(i, j, (a, b))
                    candidate = _scalar_ratio(ab, ba)
                    if candidate is None:
                        raise NotScalarMultiple(i, j, (a, b))
                    if theta is None:
                        theta = candidate
                    elif theta != candidate:
                        raise InconsistentScalar(i, j, (a, b), theta, candidate)
            row.append(theta if theta is not None else ONE)
            flags.append(theta is not None)
        entries.append(row)
        constrained.append(flags)
    unconstrained = sum(1 for flags in constrained for f in flags if not f)
    if unconstrained:
        logger.info("theta table has %s unconstrained entries", unconstrained)
    return ThetaTable(
        tuple(tuple(r) for r in entries), tuple(tuple(f) for f in constrained), decomposition.labels
    )
