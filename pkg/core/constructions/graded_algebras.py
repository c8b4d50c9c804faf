"""Group algebras, Grassmann truncations and the small degenerate fixtures."""

from __future__ import annotations

from dataclasses import replace
from typing import Optional

from core.algebra.constructors import (
    direct_sum,
    grassmann_truncated,
    group_algebra,
    matrix_algebra,
    twisted_group_algebra,
)
from core.algebra.structure import Algebra, Element
from core.constructions.base import ConstructionError, NamedConstruction, build_decomposition
from core.decomp.decomposition import ThetaTable
from core.exactnum.cyclotomic import ONE, ZERO
from core.gradedgroup.cocycles import Cocycle, heisenberg_cocycle, induced_bicharacter
from core.gradedgroup.groups import (
    CayleyTable,
    abelian_group,
    classify_abelian,
    cyclic_group,
    is_abelian,
    klein_four,
    quaternion_group,
    symmetric_group_3,
)

SUPERCOMMUTATIVE_THETA = [[1, 1], [1, -1]]


def group_from_spec(spec: str) -> CayleyTable:
    """'klein', 'quaternion', 's3', 'cyclic:N' or 'abelian:d1,d2,...'."""
    named = {"klein": klein_four, "quaternion": quaternion_group, "s3": symmetric_group_3}
    if spec in named:
        return named[spec]()
    kind, _, argument = spec.partition(":")
    try:
        if kind == "cyclic":
            return cyclic_group(int(argument))
        if kind == "abelian":
            return abelian_group([int(part) for part in argument.split(",")])
    except ValueError as exc:
        raise ConstructionError(f"Bad group parameter in '{spec}'") from exc
    raise ConstructionError(f"Unknown group '{spec}'")


def grassmann_z2_decomposition(k: int = 3) -> NamedConstruction:
    """Even and odd parts of the exterior algebra on k generators."""
    algebra = grassmann_truncated(k)
    even = [algebra.basis_element(mask) for mask in range(algebra.dim) if bin(mask).count("1") % 2 == 0]
    odd = [algebra.basis_element(mask) for mask in range(algebra.dim) if bin(mask).count("1") % 2]
    labels = ["even", "odd"]
    # with one generator e1^2 = 0 leaves theta(odd, odd) unconstrained
    expected = ThetaTable.from_entries(SUPERCOMMUTATIVE_THETA, labels) if k > 1 else None
    return NamedConstruction(
        name="grassmann-z2",
        decomposition=build_decomposition(algebra, [even, odd], labels),
        expected_theta=expected,
        params={"k": k},
    )


def nilpotent_z2_decomposition() -> NamedConstruction:
    """K + Ku with u^2 = 0, graded by Z_2: theta-commutative, never regular."""
    structure = {(0, 0): ((0, ONE),), (0, 1): ((1, ONE),), (1, 0): ((1, ONE),)}
    algebra = Algebra(2, 1, structure, (ONE, ZERO), None, name="K[u]/u^2")
    components = [[algebra.basis_element(0)], [algebra.basis_element(1)]]
    return NamedConstruction(
        name="nilpotent-z2",
        decomposition=build_decomposition(algebra, components, ["1", "u"]),
    )


def commutative_decomposition(k: int = 2) -> NamedConstruction:
    """K^k as a single component."""
    if k < 1:
        raise ConstructionError(f"Number of summands must be positive, got {k}")
    algebra = matrix_algebra(1)
    for _ in range(k - 1):
        algebra = direct_sum(algebra, matrix_algebra(1))
    component = [Element.basis(algebra.dim, i) for i in range(algebra.dim)]
    return NamedConstruction(
        name="commutative",
        decomposition=build_decomposition(algebra, [component], ["K^k"]),
        expected_theta=ThetaTable.from_entries([[1]], ["K^k"]),
        params={"k": k},
    )


def twisted_construction(
    group: CayleyTable, alpha: Optional[Cocycle] = None, name: str = "twisted"
) -> NamedConstruction:
    """K^alpha G split into the lines K X_g."""
    algebra = group_algebra(group) if alpha is None else twisted_group_algebra(group, alpha)
    components = [[algebra.basis_element(g)] for g in range(group.m)]
    labels = [group.label(g) for g in range(group.m)]
    expected_theta = None
    expected_group = None
    if is_abelian(group):
        values = induced_bicharacter(alpha).values if alpha is not None else [[1] * group.m] * group.m
        expected_theta = ThetaTable.from_entries(values, labels)
        expected_group = classify_abelian(group)
    return NamedConstruction(
        name=name,
        decomposition=build_decomposition(algebra, components, labels),
        expected_theta=expected_theta,
        expected_group=expected_group,
    )


def group_algebra_construction(group: str = "klein") -> NamedConstruction:
    construction = twisted_construction(group_from_spec(group), None, name="group-algebra")
    return replace(construction, params={"group": group})


def heisenberg_twisted_construction(n: int = 2) -> NamedConstruction:
    """Z_n x Z_n twisted by zeta_n^(a2 b1)."""
    alpha = heisenberg_cocycle(n)
    return replace(twisted_construction(alpha.group, alpha), params={"n": n})
