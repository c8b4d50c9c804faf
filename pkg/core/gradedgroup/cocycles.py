"""2-cocycles, bicharacters and ray classes on finite groups."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from core.exactnum.cyclotomic import ONE, Cyclotomic, make_root
from core.gradedgroup.groups import (
    CayleyTable,
    NotAGroup,
    abelian_group,
    centralizer,
    conjugacy_classes,
    is_abelian,
)
from core.schema.report import CheckReport

logger = logging.getLogger(__name__)

ScalarTable = Tuple[Tuple[Cyclotomic, ...], ...]


class CocycleViolation(ValueError):
    def __init__(self, g: int, h: int, k: int) -> None:
        super().__init__(f"Cocycle identity fails at ({g},{h},{k})")
        self.g, self.h, self.k = g, h, k


@dataclass(frozen=True)
class Cocycle:
    group: CayleyTable
    values: ScalarTable

    def __call__(self, g: int, h: int) -> Cyclotomic:
        return self.values[g][h]


@dataclass(frozen=True)
class Bicharacter:
    group: CayleyTable
    values: ScalarTable

    def __call__(self, g: int, h: int) -> Cyclotomic:
        return self.values[g][h]


def tabulate(group: CayleyTable, fn: Callable[[int, int], Cyclotomic]) -> ScalarTable:
    return tuple(tuple(Cyclotomic.coerce(fn(g, h)) for h in range(group.m)) for g in range(group.m))


def trivial_cocycle(group: CayleyTable) -> Cocycle:
    return Cocycle(group, tabulate(group, lambda g, h: ONE))


def heisenberg_cocycle(n: int) -> Cocycle:
    """alpha((a1,a2),(b1,b2)) = zeta_n^(a2*b1) on Z_n x Z_n (index a1*n + a2)."""
    group = abelian_group([n, n])
    return Cocycle(group, tabulate(group, lambda g, h: make_root(n, (g % n) * (h // n))))


def first_cocycle_violation(alpha: Cocycle) -> Optional[Tuple[int, int, int]]:
    group = alpha.group
    for g, h, k in itertools.product(range(group.m), repeat=3):
        left = alpha(g, h) * alpha(group.mul(g, h), k)
        right = alpha(g, group.mul(h, k)) * alpha(h, k)
        if left != right:
            return g, h, k
    return None


def validate_cocycle(alpha: Cocycle) -> CheckReport:
    if any(not value for row in alpha.values for value in row):
        return CheckReport.fail("cocycle", {"reason": "zero value"})
    violation = first_cocycle_violation(alpha)
    if violation is not None:
        g, h, k = violation
        return CheckReport.fail("cocycle", {"triple": [g, h, k]})
    return CheckReport.ok("cocycle", {"order": alpha.group.m})


def require_cocycle(alpha: Cocycle) -> None:
    violation = first_cocycle_violation(alpha)
    if violation is not None:
        raise CocycleViolation(*violation)


def coboundary(group: CayleyTable, eta: Sequence[Cyclotomic]) -> Cocycle:
    """alpha(g,h) = eta(g) eta(h) eta(gh)^-1."""
    return Cocycle(group, tabulate(group, lambda g, h: eta[g] * eta[h] / eta[group.mul(g, h)]))


def check_bicharacter(beta: Bicharacter) -> CheckReport:
    group = beta.group
    for g, h, k in itertools.product(range(group.m), repeat=3):
        if beta(group.mul(g, h), k) != beta(g, k) * beta(h, k):
            return CheckReport.fail("bicharacter", {"argument": "first", "triple": [g, h, k]})
        if beta(g, group.mul(h, k)) != beta(g, h) * beta(g, k):
            return CheckReport.fail("bicharacter", {"argument": "second", "triple": [g, h, k]})
    return CheckReport.ok("bicharacter")


def check_skew_symmetric(beta: Bicharacter) -> CheckReport:
    for g in range(beta.group.m):
        for h in range(g, beta.group.m):
            if beta(g, h) * beta(h, g) != ONE:
                return CheckReport.fail("skew-symmetric", {"pair": [g, h]})
    return CheckReport.ok("skew-symmetric")


def induced_bicharacter(alpha: Cocycle) -> Bicharacter:
    """beta(g,h) = alpha(g,h) alpha(h,g)^-1, scanned for multiplicativity and skew-symmetry."""
    if not is_abelian(alpha.group):
        raise NotAGroup("induced bicharacter needs an abelian group")
    beta = Bicharacter(alpha.group, tabulate(alpha.group, lambda g, h: alpha(g, h) / alpha(h, g)))
    for report in (check_bicharacter(beta), check_skew_symmetric(beta)):
        if not report.passed:
            raise ValueError(f"Induced table fails the {report.check} scan: {report.certificate}")
    return beta


def is_nondegenerate(beta: Bicharacter) -> bool:
    group = beta.group
    for g in range(group.m):
        if g == group.identity:
            continue
        if all(beta(g, h) == ONE for h in range(group.m)):
            return False
    return True


def pauli_bicharacter(n: int) -> Bicharacter:
    """beta((i,j),(k,l)) = zeta_n^(jk - il) on Z_n x Z_n (index i*n + j)."""
    group = abelian_group([n, n])

    def value(g: int, h: int) -> Cyclotomic:
        i, j = divmod(g, n)
        k, l = divmod(h, n)
        return make_root(n, j * k - i * l)

    return Bicharacter(group, tabulate(group, value))


def theta_as_bicharacter(entries: Sequence[Sequence[Cyclotomic]], group: CayleyTable) -> Bicharacter:
    if len(entries) != group.m:
        raise ValueError(f"Table of size {len(entries)} does not match group order {group.m}")
    return Bicharacter(group, tuple(tuple(row) for row in entries))


def cohomologous_abelian(first: Cocycle, second: Cocycle) -> bool:
    """Cohomology classes on abelian groups coincide iff induced bicharacters do."""
    if first.group != second.group:
        raise ValueError("Cocycles live on different groups")
    return induced_bicharacter(first).values == induced_bicharacter(second).values


def is_regular_element(alpha: Cocycle, g: int) -> bool:
    return all(alpha(g, h) == alpha(h, g) for h in centralizer(alpha.group, g))


def ray_classes(alpha: Cocycle) -> List[Tuple[int, ...]]:
    """Conjugacy classes made of alpha-regular elements."""
    classes = []
    for cls in conjugacy_classes(alpha.group):
        flags = [is_regular_element(alpha, g) for g in cls]
        if all(flags):
            classes.append(cls)
        elif any(flags):
            logger.warning("class %s is only partly alpha-regular", cls)
    return classes
