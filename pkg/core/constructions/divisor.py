"""Regular gradings of M_n1 + M_n2 (n1 | n2) and of sums of p-power matrix algebras.

Both come from one step: given a grading of an algebra B whose identity
component holds the unit, grade (K + B) (x) M_n by the product of the
Pauli group of M_n with the grading group of B, letting the identity
component absorb the extra copy of K. Theta tables multiply, so the new
table is the Kronecker product of the Pauli table and the table of B.
"""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import List, Sequence, Union

from sympy import isprime

from core.algebra.constructors import (
    direct_sum,
    embed_component,
    matrix_algebra,
    tensor_elements,
    tensor_product,
)
from core.algebra.structure import Element
from core.constructions.base import ConstructionError, NamedConstruction, build_decomposition
from core.constructions.pauli import pauli_decomposition, pauli_monomial
from core.decomp.decomposition import ThetaTable
from core.exactnum.linalg import kronecker_product
from core.gradedgroup.cocycles import pauli_bicharacter
from core.gradedgroup.groups import invariant_factors_of

logger = logging.getLogger(__name__)


def extend_by_pauli(inner: NamedConstruction, n: int, name: str) -> NamedConstruction:
    """(K + B) (x) M_n graded by (Z_n)^2 x H, components ordered (i,j)-major."""
    if inner.expected_theta is None or inner.expected_group is None:
        raise ConstructionError("inner grading needs an expected theta table and group")
    scalars = matrix_algebra(1)
    base = direct_sum(scalars, inner.algebra)
    offset = scalars.dim
    base_components: List[List[Element]] = [
        [embed_component(base, offset, v) for v in component]
        for component in inner.decomposition.components
    ]
    base_components[0].append(embed_component(base, 0, scalars.unit_element))

    algebra = tensor_product(base, matrix_algebra(n))
    components = []
    labels = []
    for i in range(n):
        for j in range(n):
            monomial = pauli_monomial(n, i, j)
            for label, component in zip(inner.decomposition.labels, base_components):
                components.append([tensor_elements(v, monomial) for v in component])
                labels.append(f"(({i},{j}),{label})")

    entries = kronecker_product(pauli_bicharacter(n).values, inner.expected_theta.entries)
    factors = [n, n] + list(inner.expected_group.invariant_factors)
    logger.debug("extended %s by M_%s: %s components", inner.name, n, len(components))
    return NamedConstruction(
        name=name,
        decomposition=build_decomposition(algebra, components, labels),
        expected_theta=ThetaTable.from_entries(entries, labels),
        expected_group=invariant_factors_of(factors),
    )


def kronecker_divisor_grading(n1: int = 2, n2: int = 4) -> NamedConstruction:
    if n1 < 1 or n2 < 1:
        raise ConstructionError(f"Matrix sizes must be positive, got ({n1}, {n2})")
    if n2 % n1:
        raise ConstructionError(f"n1 must divide n2, got ({n1}, {n2})")
    inner = pauli_decomposition(n2 // n1)
    return replace(extend_by_pauli(inner, n1, "kronecker"), params={"n1": n1, "n2": n2})


def parse_exponents(exponents: Union[str, Sequence[int]]) -> List[int]:
    if isinstance(exponents, str):
        try:
            values = [int(part) for part in exponents.split(",") if part.strip()]
        except ValueError as exc:
            raise ConstructionError(f"Exponents must be integers, got '{exponents}'") from exc
    else:
        values = [int(v) for v in exponents]
    if not values:
        raise ConstructionError("At least one exponent is required")
    if any(v < 0 for v in values):
        raise ConstructionError(f"Exponents must be non-negative, got {values}")
    return sorted(values)


def _p_power(p: int, exponents: List[int]) -> NamedConstruction:
    if len(exponents) == 1:
        return pauli_decomposition(p ** exponents[0])
    first = exponents[0]
    inner = _p_power(p, [e - first for e in exponents[1:]])
    return extend_by_pauli(inner, p**first, "p-power")


def p_power_sum_grading(p: int = 2, exponents: Union[str, Sequence[int]] = (1, 1)) -> NamedConstruction:
    """M_(p^l1) + ... + M_(p^lr), built by factoring out M_(p^l1) and recursing."""
    if not isprime(p):
        raise ConstructionError(f"p must be prime, got {p}")
    values = parse_exponents(exponents)
    return replace(
        _p_power(p, values),
        name="p-power",
        params={"p": p, "exponents": ",".join(str(v) for v in values)},
    )
