"""Recover the grading group of a minimal regular decomposition.

With one-dimensional components the witness products w_j w_k each land in a
single component s, and j * k = s is the group law. The commutation scalars
then satisfy theta(i,j) theta(i,k) = theta(i, j*k).
"""

from __future__ import annotations

import logging
import math
from typing import List, Optional, Sequence

from core.algebra.structure import Element, center, multiply_elements
from core.decomp.criteria import UnconstrainedEntries, is_minimal
from core.decomp.decomposition import Decomposition, ThetaTable
from core.decomp.witness import RegularityWitness
from core.gradedgroup.groups import (
    CayleyTable,
    NotAGroup,
    classify_abelian,
    group_table_defect,
    is_abelian,
)
from core.gradedgroup.setgrading import (
    NotASetGrading,
    SetGradingTable,
    realizability_check,
    set_grading_detect,
)
from core.schema.report import CheckReport

logger = logging.getLogger(__name__)


class MultiComponentProduct(ValueError):
    def __init__(self, j: int, k: int, support: Sequence[int]) -> None:
        super().__init__(f"w_{j} * w_{k} has support in components {list(support)}")
        self.j = j
        self.k = k
        self.support = list(support)


class ReconstructionNotApplicable(ValueError):
    pass


def _witness_elements(decomposition: Decomposition, witness: Optional[RegularityWitness]) -> List[Element]:
    if witness is not None and witness.elements:
        return list(witness.elements)
    return [component[0] for component in decomposition.components]


def reconstruct_group(
    decomposition: Decomposition,
    table: ThetaTable,
    witness: Optional[RegularityWitness] = None,
    force: bool = False,
) -> CayleyTable:
    """Group law j * k from witness products; force skips the minimality gate."""
    algebra = decomposition.algebra
    if decomposition.m != algebra.dim or any(size != 1 for size in decomposition.sizes):
        raise ReconstructionNotApplicable("reconstruction needs m = dim R with one-dimensional components")
    if not force and not is_minimal(table).minimal:
        raise NotAGroup("theta table is not minimal")

    elements = _witness_elements(decomposition, witness)
    m = decomposition.m
    law: List[List[int]] = []
    for j in range(m):
        row = []
        for k in range(m):
            product = multiply_elements(algebra, elements[j], elements[k])
            if product.is_zero():
                raise NotAGroup(f"w_{j} * w_{k} vanishes")
            support = decomposition.component_support(product)
            if len(support) != 1:
                raise MultiComponentProduct(j, k, support)
            row.append(support[0])
        law.append(row)

    unit_support = decomposition.component_support(algebra.unit_element)
    if len(unit_support) != 1:
        raise NotAGroup(f"unit is spread over components {unit_support}")
    identity = unit_support[0]
    defect = group_table_defect(m, law, identity)
    if defect:
        logger.info("reconstructed law is not a group: %s", defect)
        raise NotAGroup(defect)
    group = CayleyTable(m, tuple(tuple(row) for row in law), identity, decomposition.labels)

    for i in range(m):
        for j in range(m):
            for k in range(m):
                if table(i, j) * table(i, k) != table(i, group.mul(j, k)):
                    raise NotAGroup(f"theta(i,j) theta(i,k) = theta(i,j*k) fails at ({i},{j},{k})")
    return group


def reconstruct_group_check(
    decomposition: Decomposition, table: ThetaTable, witness: Optional[RegularityWitness] = None
) -> CheckReport:
    try:
        group = reconstruct_group(decomposition, table, witness)
    except ReconstructionNotApplicable as exc:
        return CheckReport.skipped("reconstruct-group", str(exc), vacuous=True)
    except MultiComponentProduct as exc:
        certificate = {"pair": [exc.j + 1, exc.k + 1], "support": [s + 1 for s in exc.support]}
        return CheckReport.fail("reconstruct-group", certificate)
    except NotAGroup as exc:
        return CheckReport.fail("reconstruct-group", {"reason": exc.reason})
    except UnconstrainedEntries as exc:
        return CheckReport.fail("reconstruct-group", {"reason": str(exc)})
    certificate = {
        "order": group.m,
        "identity": group.identity + 1,
        "table": [[v + 1 for v in row] for row in group.table],
        "abelian": is_abelian(group),
        "center_dim": len(center(decomposition.algebra)),
    }
    if certificate["abelian"]:
        certificate["invariant_factors"] = list(classify_abelian(group).invariant_factors)
    return CheckReport.ok("reconstruct-group", certificate)


def _paired_factors(factors: Sequence[int]) -> Optional[List[int]]:
    """n_1..n_r when the invariant factors read n_1, n_1, ..., n_r, n_r."""
    if len(factors) % 2:
        return None
    pairs = []
    for a, b in zip(factors[::2], factors[1::2]):
        if a != b:
            return None
        pairs.append(a)
    return pairs


def semisimple_set_grading_check(
    decomposition: Decomposition, table: ThetaTable, witness: Optional[RegularityWitness]
) -> CheckReport:
    """A minimal regular set grading of a semisimple algebra is a group grading of order dim B_l."""
    name = "semisimple-set-grading"
    blocks = decomposition.algebra.components
    if blocks is None:
        return CheckReport.skipped(name, "no simple-component metadata", vacuous=True)
    if witness is None or not witness.found:
        return CheckReport.skipped(name, "decomposition is not known to be regular", vacuous=True)
    if not table.fully_constrained or not is_minimal(table).minimal:
        return CheckReport.skipped(name, "theta table is not minimal", vacuous=True)
    try:
        grading: SetGradingTable = set_grading_detect(decomposition)
    except NotASetGrading:
        return CheckReport.skipped(name, "decomposition is not a set grading", vacuous=True)

    realizable = realizability_check(grading)
    block_dims = [size for _, size in blocks]
    certificate = {"m": grading.m, "block_dims": block_dims, "realizability": realizable.certificate}
    if not grading.is_total or realizable.certificate.get("verdict") != "realizable":
        return CheckReport.fail(name, certificate)
    if grading.m not in block_dims:
        certificate["reason"] = "group order matches no simple component dimension"
        return CheckReport.fail(name, certificate)
    factors = realizable.certificate.get("invariant_factors")
    pairs = _paired_factors(factors) if factors is not None else None
    if pairs is None or math.prod(pairs) ** 2 != grading.m:
        certificate["reason"] = "group is not of the form Z_n1^2 x ... x Z_nr^2"
        return CheckReport.fail(name, certificate)
    certificate["n"] = pairs
    return CheckReport.ok(name, certificate)
