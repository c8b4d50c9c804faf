"""Polynomial-coefficient elements for the symbolic witness search.

A polynomial is a dict from monomials (sorted tuples of variable indices)
to cyclotomic coefficients; a generic element is one polynomial per
coordinate.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from core.algebra.structure import Algebra
from core.exactnum.cyclotomic import ONE, Cyclotomic

Monomial = Tuple[int, ...]
Polynomial = Dict[Monomial, Cyclotomic]
GenericElement = List[Polynomial]


def _merge(left: Monomial, right: Monomial) -> Monomial:
    return tuple(sorted(left + right))


def poly_mul(left: Polynomial, right: Polynomial) -> Polynomial:
    result: Polynomial = {}
    for m1, c1 in left.items():
        for m2, c2 in right.items():
            key = _merge(m1, m2)
            value = result.get(key)
            product = c1 * c2
            result[key] = product if value is None else value + product
    return {k: v for k, v in result.items() if v}


def poly_add_into(target: Polynomial, source: Polynomial, factor: Cyclotomic = ONE) -> None:
    for monomial, coeff in source.items():
        value = coeff if factor == ONE else coeff * factor
        current = target.get(monomial)
        updated = value if current is None else current + value
        if updated:
            target[monomial] = updated
        else:
            target.pop(monomial, None)


def evaluate(poly: Polynomial, point: Sequence[int]) -> Cyclotomic:
    total = Cyclotomic.from_int(0)
    for monomial, coeff in poly.items():
        term = 1
        for var in monomial:
            term *= point[var]
        if term:
            total = total + coeff * term
    return total


def linear_generic(dim: int, basis: Sequence[Sequence[Cyclotomic]], first_var: int) -> GenericElement:
    """sum_a t_(first_var + a) * basis[a]."""
    element: GenericElement = [{} for _ in range(dim)]
    for offset, vector in enumerate(basis):
        for k, c in enumerate(vector):
            if c:
                element[k][(first_var + offset,)] = c
    return element


def generic_multiply(algebra: Algebra, left: GenericElement, right: GenericElement) -> GenericElement:
    result: GenericElement = [{} for _ in range(algebra.dim)]
    right_support = [(j, q) for j, q in enumerate(right) if q]
    for i, p in enumerate(left):
        if not p:
            continue
        for j, q in right_support:
            entries = algebra.structure.get((i, j))
            if not entries:
                continue
            product = poly_mul(p, q)
            if not product:
                continue
            for k, c in entries:
                poly_add_into(result[k], product, c)
    return result


def is_zero_generic(element: GenericElement) -> bool:
    return not any(element)
