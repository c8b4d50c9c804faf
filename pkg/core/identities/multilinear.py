"""Multilinear identities read off the theta table.

For homogeneous b_i in R_(l_i), reordering b_s(1)...b_s(n) back to
b_1...b_n swaps each inverted pair once, so

    b_s(1) ... b_s(n) = Lambda_s(l) b_1 ... b_n,
    Lambda_s(l) = prod over i < j with s(i) > s(j) of theta(l_s(i), l_s(j)).

A coefficient vector c with sum_s Lambda_s(l) c_s = 0 for every l in
[m]^n is therefore an identity sum_s c_s x_s(1) ... x_s(n) of R. The
system has m^n rows and n! columns, so it has a kernel once n! > m^n.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.algebra.structure import Element, multiply_elements
from core.config import get_settings
from core.decomp.decomposition import Decomposition, ThetaTable
from core.exactnum.cyclotomic import ONE, Cyclotomic, format_scalar
from core.exactnum.linalg import rref
from core.schema.report import CheckReport

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


class DegreeCapExceeded(ValueError):
    def __init__(self, n: int, cap: int) -> None:
        super().__init__(f"Degree {n} exceeds the cap {cap}; pass large=True to raise it")
        self.n = n
        self.cap = cap


@dataclass
class MultilinearPoly:
    """sum of coeff * x_perm(1) ... x_perm(n); permutations are 0-based."""

    n: int
    terms: Dict[Permutation, Cyclotomic] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {perm: c for perm, c in self.terms.items() if c}

    def __str__(self) -> str:
        parts = []
        for perm, coeff in sorted(self.terms.items()):
            word = "".join(f"x{i + 1}" for i in perm)
            parts.append(word if coeff == ONE else f"({coeff})*{word}")
        return " + ".join(parts) if parts else "0"

    @classmethod
    def commutator(cls) -> "MultilinearPoly":
        return cls(2, {(0, 1): ONE, (1, 0): Cyclotomic.from_int(-1)})


def lambda_coefficient(table: ThetaTable, tuple_: Sequence[int], sigma: Sequence[int]) -> Cyclotomic:
    n = len(sigma)
    value = ONE
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[i] > sigma[j]:
                value = value * table(tuple_[sigma[i]], tuple_[sigma[j]])
    return value


def degree_bound(m: int) -> int:
    """Smallest n with n! > m^n."""
    n = 1
    while math.factorial(n) <= m**n:
        n += 1
    return n


def _check_cap(n: int, large: bool) -> None:
    settings = get_settings()
    cap = settings.identity_large_degree_cap if large else settings.identity_degree_cap
    if n > cap:
        raise DegreeCapExceeded(n, cap)


def identity_system(table: ThetaTable, n: int) -> Tuple[List[List[Cyclotomic]], List[Permutation]]:
    """Rows indexed by tuples in [m]^n, columns by permutations in lexicographic order."""
    perms = list(itertools.permutations(range(n)))
    rows = []
    seen = set()
    for tuple_ in itertools.product(range(table.m), repeat=n):
        row = tuple(lambda_coefficient(table, tuple_, sigma) for sigma in perms)
        if row in seen:
            continue
        seen.add(row)
        rows.append(list(row))
    return rows, perms


@dataclass
class IdentitySolution:
    n: int
    m: int
    kernel_dimension: int
    identity: Optional[MultilinearPoly]

    @property
    def guaranteed_dimension(self) -> int:
        return max(0, math.factorial(self.n) - self.m**self.n)


def solve_identities(table: ThetaTable, n: int, large: bool = False) -> IdentitySolution:
    if n < 1:
        raise ValueError(f"Degree must be positive, got {n}")
    _check_cap(n, large)
    rows, perms = identity_system(table, n)
    reduced, pivots = rref(rows)
    ncols = len(perms)
    free = [c for c in range(ncols) if c not in set(pivots)]
    logger.info("identity system m=%s n=%s: rank %s, kernel %s", table.m, n, len(pivots), len(free))
    if not free:
        return IdentitySolution(n, table.m, 0, None)

    # kernel vector of the first free column; scaled so the leading coefficient is 1
    column = free[0]
    coeffs: Dict[Permutation, Cyclotomic] = {perms[column]: ONE}
    for row_index, pivot in enumerate(pivots):
        entry = reduced[row_index][column]
        if entry:
            coeffs[perms[pivot]] = -entry
    leading = coeffs[min(coeffs)]
    if leading != ONE:
        coeffs = {perm: c / leading for perm, c in coeffs.items()}
    return IdentitySolution(n, table.m, len(free), MultilinearPoly(n, coeffs))


def find_identity(table: ThetaTable, n: int, large: bool = False) -> Optional[MultilinearPoly]:
    return solve_identities(table, n, large).identity


def kernel_dimension(table: ThetaTable, n: int, large: bool = False) -> int:
    return solve_identities(table, n, large).kernel_dimension


def _prefixes(poly: MultilinearPoly) -> set:
    return {perm[:k] for perm in poly.terms for k in range(poly.n + 1)}


def _products(
    decomposition: Decomposition, elements: Sequence[Element], prefixes: set
) -> Iterator[Tuple[Permutation, Element]]:
    """(perm, x_perm(1) ... x_perm(n)) for each term, sharing prefix products."""
    algebra = decomposition.algebra
    n = len(elements)
    stack: List[Tuple[Permutation, Optional[Element]]] = [((), None)]
    while stack:
        prefix, product = stack.pop()
        if len(prefix) == n:
            yield prefix, product  # type: ignore[misc]
            continue
        for i in range(n):
            if i in prefix:
                continue
            extended = prefix + (i,)
            if extended not in prefixes:
                continue
            factor = elements[i]
            stack.append((extended, factor if product is None else multiply_elements(algebra, product, factor)))


def evaluate_identity(
    poly: MultilinearPoly, decomposition: Decomposition, elements: Sequence[Element]
) -> Element:
    if len(elements) != poly.n:
        raise ValueError(f"Identity of degree {poly.n} needs {poly.n} arguments, got {len(elements)}")
    total = Element.zero(decomposition.algebra.dim)
    for perm, product in _products(decomposition, elements, _prefixes(poly)):
        coeff = poly.terms[perm]
        total = total + (product if coeff == ONE else product.scale(coeff))
    return total


def _random_homogeneous(
    decomposition: Decomposition, rng: random.Random, bound: int
) -> Tuple[int, Element]:
    index = rng.randrange(decomposition.m)
    component = decomposition.components[index]
    weights = [rng.randint(-bound, bound) for _ in component]
    if not any(weights):
        weights[rng.randrange(len(weights))] = 1
    total = component[0].scale(weights[0])
    for vector, weight in zip(component[1:], weights[1:]):
        if weight:
            total = total + vector.scale(weight)
    return index, total


def verify_identity(
    poly: MultilinearPoly,
    decomposition: Decomposition,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> CheckReport:
    """Substitute homogeneous elements; every evaluation must vanish exactly."""
    settings = get_settings()
    trials = trials if trials is not None else settings.verify_trials
    seed = seed if seed is not None else settings.seed
    rng = random.Random(seed)
    bound = settings.witness_coordinate_bound

    for trial in range(trials):
        picked = [_random_homogeneous(decomposition, rng, bound) for _ in range(poly.n)]
        value = evaluate_identity(poly, decomposition, [x for _, x in picked])
        if not value.is_zero():
            certificate = {
                "mode": "random",
                "trial": trial,
                "components": [decomposition.label(i) for i, _ in picked],
                "value": [format_scalar(c) for c in value.coords],
            }
            return CheckReport.fail("identity", certificate)

    flat = [(owner, v) for owner, component in enumerate(decomposition.components) for v in component]
    exhaustive = len(flat) <= settings.exhaustive_basis_limit
    checked = 0
    if exhaustive:
        for choice in itertools.product(range(len(flat)), repeat=poly.n):
            value = evaluate_identity(poly, decomposition, [flat[k][1] for k in choice])
            checked += 1
            if not value.is_zero():
                certificate = {
                    "mode": "exhaustive",
                    "basis_tuple": [k + 1 for k in choice],
                    "components": [decomposition.label(flat[k][0]) for k in choice],
                }
                return CheckReport.fail("identity", certificate)
    certificate = {"trials": trials, "seed": seed, "exhaustive": exhaustive, "basis_tuples": checked}
    return CheckReport.ok("identity", certificate)
