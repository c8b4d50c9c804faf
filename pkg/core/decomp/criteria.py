"""Matrix-level criteria on theta tables: relations, minimality, determinants."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from core.decomp.decomposition import Decomposition, ThetaTable
from core.exactnum.cyclotomic import ONE, Cyclotomic, format_scalar, order_of
from core.exactnum.linalg import det_exact, identity_matrix, matmul
from core.schema.report import CheckReport

logger = logging.getLogger(__name__)


class UnconstrainedEntries(ValueError):
    def __init__(self, positions: Sequence[Tuple[int, int]]) -> None:
        super().__init__(f"Theta table has unconstrained entries at {list(positions)[:5]}")
        self.positions = list(positions)


@dataclass
class MinimalityResult:
    minimal: bool
    duplicates: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def pair(self) -> Optional[Tuple[int, int]]:
        if not self.duplicates:
            return None
        group = self.duplicates[0]
        return group[0], group[1]


def _require_constrained(table: ThetaTable) -> None:
    missing = [
        (i, j) for i, row in enumerate(table.constrained) for j, flag in enumerate(row) if not flag
    ]
    if missing:
        raise UnconstrainedEntries(missing)


def _positions(table: ThetaTable, indices: Sequence[int]) -> Dict[str, list]:
    return {"positions": [i + 1 for i in indices], "labels": [table.label(i) for i in indices]}


def qc_relations_check(table: ThetaTable) -> CheckReport:
    violations = []
    for i in range(table.m):
        if table.constrained[i][i] and table(i, i) * table(i, i) != ONE:
            violations.append({"kind": "square", **_positions(table, [i])})
        for j in range(i + 1, table.m):
            if table.constrained[i][j] and table.constrained[j][i]:
                if table(i, j) * table(j, i) != ONE:
                    violations.append({"kind": "inverse", **_positions(table, [i, j])})
    non_unit_diagonal = [i for i in range(table.m) if table(i, i) != ONE]
    certificate = {
        "violations": violations,
        "diagonal_all_one": not non_unit_diagonal,
        "diagonal_not_one": _positions(table, non_unit_diagonal),
    }
    notes = [
        f"theta({table.label(i)},{table.label(i)}) = {table(i, i)}: impossible for a regular "
        "finite-dimensional decomposition"
        for i in non_unit_diagonal
    ]
    if violations:
        return CheckReport.fail("qc-relations", certificate, notes)
    return CheckReport.ok("qc-relations", certificate, notes)


def duplicate_row_groups(table: ThetaTable) -> List[Tuple[int, ...]]:
    groups: List[Tuple[Tuple[Cyclotomic, ...], List[int]]] = []
    for i, row in enumerate(table.entries):
        match = next((members for key, members in groups if key == row), None)
        if match is None:
            groups.append((row, [i]))
        else:
            match.append(i)
    return [tuple(members) for _, members in groups if len(members) > 1]


def is_minimal(table: ThetaTable) -> MinimalityResult:
    _require_constrained(table)
    duplicates = duplicate_row_groups(table)
    return MinimalityResult(not duplicates, duplicates)


def distinct_row_count(table: ThetaTable) -> int:
    return table.m - sum(len(group) - 1 for group in duplicate_row_groups(table))


def minimality_check(table: ThetaTable) -> CheckReport:
    result = is_minimal(table)
    certificate = {"duplicates": [_positions(table, group) for group in result.duplicates]}
    if result.minimal:
        return CheckReport.ok("minimality", certificate)
    return CheckReport.fail("minimality", certificate)


def theta_determinant(table: ThetaTable) -> Cyclotomic:
    _require_constrained(table)
    return det_exact(table.matrix())


def determinant_check(table: ThetaTable) -> CheckReport:
    det = theta_determinant(table)
    certificate = {"det": format_scalar(det), "det_squared": format_scalar(det * det)}
    if det.is_zero():
        return CheckReport.fail("determinant", certificate)
    return CheckReport.ok("determinant", certificate)


def bahturin_regev_check(table: ThetaTable) -> CheckReport:
    """det^2 = m^m, cross-checked against the row-distinctness verdict."""
    det = theta_determinant(table)
    squared = det * det
    target = table.m**table.m
    minimal = is_minimal(table).minimal
    matches = squared == target
    certificate = {
        "m": table.m,
        "det_squared": format_scalar(squared),
        "m_pow_m": str(target),
        "det_squared_equals_m_pow_m": matches,
        "minimal": minimal,
        "equivalence_holds": minimal == (not det.is_zero()),
    }
    if not certificate["equivalence_holds"]:
        logger.warning("minimality and det != 0 disagree on a %sx%s table", table.m, table.m)
    if matches and certificate["equivalence_holds"]:
        return CheckReport.ok("bahturin-regev", certificate)
    return CheckReport.fail("bahturin-regev", certificate)


def msquared_check(table: ThetaTable) -> bool:
    _require_constrained(table)
    matrix = table.matrix()
    square = matmul(matrix, matrix)
    target = identity_matrix(table.m)
    return all(
        square[i][j] == target[i][j] * table.m for i in range(table.m) for j in range(table.m)
    )


def root_order_check(table: ThetaTable, bound: int) -> CheckReport:
    violations = []
    orders = set()
    for i in range(table.m):
        for j in range(table.m):
            if not table.constrained[i][j]:
                continue
            order = order_of(table(i, j))
            if order is None or bound % order:
                violations.append(
                    {"entry": [i + 1, j + 1], "order": order, "value": format_scalar(table(i, j))}
                )
            else:
                orders.add(order)
    certificate = {"bound": bound, "orders": sorted(orders), "violations": violations}
    if violations:
        return CheckReport.fail("root-order", certificate)
    return CheckReport.ok("root-order", certificate)


def necessary_condition_check(component_sizes: Sequence[int], m: int) -> CheckReport:
    """Largest block size q must satisfy q <= sqrt(m), and share a factor with every other q_s > 1."""
    if any(q < 1 for q in component_sizes):
        raise ValueError("Component sizes must be positive")
    largest = max(component_sizes)
    certificate: Dict[str, object] = {"sizes": list(component_sizes), "m": m, "largest": largest}
    if largest * largest > m:
        certificate["violation"] = {"kind": "largest-exceeds-sqrt-m", "q": largest}
        return CheckReport.fail("necessary-condition", certificate)
    notes = []
    for q in sorted(set(component_sizes)):
        if 1 < q < largest:
            if math.gcd(q, largest) == 1:
                certificate["violation"] = {"kind": "coprime", "pair": [q, largest]}
                return CheckReport.fail("necessary-condition", certificate)
            if largest % q:
                notes.append(
                    f"necessary, not sufficient: {q} does not divide {largest}, "
                    "no divisor construction is available"
                )
    return CheckReport.ok("necessary-condition", certificate, notes)


def component_block_sizes(decomposition: Decomposition) -> Optional[List[int]]:
    components = decomposition.algebra.components
    if components is None:
        return None
    return [int(math.isqrt(size)) for _, size in components]


def root_order_bound(decomposition: Decomposition) -> int:
    """lcm of the matrix block sizes when known, else dim R."""
    blocks = component_block_sizes(decomposition)
    if blocks:
        return math.lcm(*blocks)
    return decomposition.algebra.dim


def matrix_rows_check(decomposition: Decomposition, table: ThetaTable) -> CheckReport:
    """A decomposition of the full matrix algebra M_n has n^2 distinct rows."""
    components = decomposition.algebra.components
    if components is None or len(components) != 1:
        return CheckReport.skipped("matrix-rows", "algebra is not a single matrix block", vacuous=True)
    distinct = distinct_row_count(table)
    certificate = {"distinct_rows": distinct, "dim": decomposition.algebra.dim}
    if distinct == decomposition.algebra.dim:
        return CheckReport.ok("matrix-rows", certificate)
    return CheckReport.fail("matrix-rows", certificate)


def even_subgroup(table: ThetaTable) -> Dict[str, List[int]]:
    """Split indices by theta(i,i) in {1, -1}; the +1 part is the even part."""
    even = [i for i in range(table.m) if table(i, i) == ONE]
    odd = [i for i in range(table.m) if table(i, i) == -1]
    other = [i for i in range(table.m) if i not in even and i not in odd]
    if other:
        raise ValueError(f"Diagonal entries outside {{1,-1}} at {other}")
    return {"even": even, "odd": odd}
