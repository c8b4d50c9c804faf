"""Set gradings: decompositions whose component products land in one component.

f(i, j) is None when R_i R_j = 0.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from core.algebra.structure import multiply_elements
from core.decomp.decomposition import Decomposition
from core.gradedgroup.groups import CayleyTable, classify_abelian, group_table_defect, is_abelian
from core.schema.report import CheckReport

logger = logging.getLogger(__name__)


class NotASetGrading(ValueError):
    def __init__(self, i: int, j: int, components: List[int], labels: Tuple[str, ...] = ()) -> None:
        names = [labels[c] if labels else str(c) for c in components]
        super().__init__(f"Products of components ({i},{j}) hit several components: {names}")
        self.i = i
        self.j = j
        self.components = components


@dataclass(frozen=True)
class SetGradingTable:
    f: Tuple[Tuple[Optional[int], ...], ...]
    labels: Tuple[str, ...] = ()

    @property
    def m(self) -> int:
        return len(self.f)

    def __call__(self, i: int, j: int) -> Optional[int]:
        return self.f[i][j]

    @property
    def is_total(self) -> bool:
        return all(v is not None for row in self.f for v in row)

    def label(self, index: int) -> str:
        return self.labels[index] if self.labels else str(index + 1)

    def as_cayley(self, identity: int) -> CayleyTable:
        if not self.is_total:
            raise ValueError("Partial set-grading table has no Cayley table")
        return CayleyTable(
            self.m,
            tuple(tuple(v for v in row) for row in self.f),  # type: ignore[misc]
            identity,
            self.labels or None,
        )


def set_grading_detect(decomposition: Decomposition) -> SetGradingTable:
    algebra = decomposition.algebra
    rows: List[Tuple[Optional[int], ...]] = []
    for i, left in enumerate(decomposition.components):
        row: List[Optional[int]] = []
        for j, right in enumerate(decomposition.components):
            hit: set = set()
            for a in left:
                for b in right:
                    product = multiply_elements(algebra, a, b)
                    if not product.is_zero():
                        hit.update(decomposition.component_support(product))
            if len(hit) > 1:
                raise NotASetGrading(i, j, sorted(hit), decomposition.labels)
            row.append(next(iter(hit)) if hit else None)
        rows.append(tuple(row))
    table = SetGradingTable(tuple(rows), decomposition.labels)
    if not table.is_total:
        logger.info("set grading has %s zero products", sum(v is None for r in rows for v in r))
    return table


def _entry(table: SetGradingTable, i: int, j: int, k: int, value: int, kind: str) -> Dict[str, object]:
    return {
        "kind": kind,
        "positions": [i + 1, j + 1, k + 1],
        "labels": [table.label(i), table.label(j), table.label(k)],
        "value": value + 1,
    }


def cancellation_violations(table: SetGradingTable) -> List[Dict[str, object]]:
    """Pairs i < j with f(i,k) = f(j,k) (right) or f(k,i) = f(k,j) (left)."""
    violations = []
    m = table.m
    for k in range(m):
        for i in range(m):
            for j in range(i + 1, m):
                value = table(i, k)
                if value is not None and value == table(j, k):
                    violations.append(_entry(table, i, j, k, value, "right-cancellation"))
                value = table(k, i)
                if value is not None and value == table(k, j):
                    violations.append(_entry(table, i, j, k, value, "left-cancellation"))
    return violations


def first_associativity_violation(table: SetGradingTable) -> Optional[Tuple[int, int, int]]:
    m = table.m
    for i in range(m):
        for j in range(m):
            ij = table(i, j)
            if ij is None:
                continue
            for k in range(m):
                jk = table(j, k)
                if jk is None:
                    continue
                left, right = table(ij, k), table(i, jk)
                if left is not None and right is not None and left != right:
                    return i, j, k
    return None


def realizability_check(table: SetGradingTable) -> CheckReport:
    violations = cancellation_violations(table)
    if violations:
        return CheckReport.fail("realizability", {"verdict": "cancellation", "violations": violations})
    triple = first_associativity_violation(table)
    if triple is not None:
        certificate = {
            "verdict": "associativity",
            "positions": [t + 1 for t in triple],
            "labels": [table.label(t) for t in triple],
        }
        return CheckReport.fail("realizability", certificate)
    if not table.is_total:
        return CheckReport.ok(
            "realizability",
            {"verdict": "necessary-conditions-hold"},
            ["partial table: cancellation and associativity hold, realizability is not decided"],
        )
    defect = group_table_defect(table.m, table.f)  # type: ignore[arg-type]
    if defect:
        return CheckReport.fail("realizability", {"verdict": "not-a-group", "reason": defect})
    group = table.as_cayley(_identity_index(table))
    certificate: Dict[str, object] = {
        "verdict": "realizable",
        "identity": group.identity + 1,
        "abelian": is_abelian(group),
    }
    if certificate["abelian"]:
        certificate["invariant_factors"] = list(classify_abelian(group).invariant_factors)
    return CheckReport.ok("realizability", certificate)


def _identity_index(table: SetGradingTable) -> int:
    return next(
        e for e in range(table.m) if all(table(e, g) == g and table(g, e) == g for g in range(table.m))
    )
