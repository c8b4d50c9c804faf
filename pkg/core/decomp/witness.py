"""Regularity witnesses: w_i in R_i whose product w_1...w_m is not nilpotent.

Phase 1 samples small integer combinations; Phase 2 expands the product of
generic elements symbolically and is authoritative. See docs/WITNESS.md for
why a single non-nilpotent product certifies every tuple condition.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from core.algebra.structure import (
    Element,
    center,
    is_invertible,
    is_nilpotent,
    multiply_chain,
    multiply_elements,
    power,
)
from core.config import get_settings
from core.decomp.decomposition import Decomposition, ThetaTable
from core.decomp.generic import (
    GenericElement,
    evaluate,
    generic_multiply,
    is_zero_generic,
    linear_generic,
)
from core.exactnum.cyclotomic import Cyclotomic
from core.schema.payloads import element_payload
from core.schema.report import CheckReport

logger = logging.getLogger(__name__)

FOUND = "found"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"

SPECIALIZATION_TRIES = 64


@dataclass
class RegularityWitness:
    status: str
    elements: Tuple[Element, ...] = ()
    product: Optional[Element] = None
    phase: Optional[int] = None
    attempt: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.status == FOUND


def _combine(basis: Sequence[Element], weights: Sequence[int]) -> Element:
    total = None
    for vector, weight in zip(basis, weights):
        if not weight:
            continue
        term = vector.scale(weight)
        total = term if total is None else total + term
    return total if total is not None else Element.zero(basis[0].dim)


def _attempt_elements(
    decomposition: Decomposition, attempt: int, seed: int, bound: int
) -> List[Element]:
    if attempt == 0:
        return [component[0] for component in decomposition.components]
    rng = random.Random(seed + attempt)
    elements = []
    for component in decomposition.components:
        weights = [rng.randint(-bound, bound) for _ in component]
        if not any(weights):
            weights[rng.randrange(len(weights))] = 1
        elements.append(_combine(component, weights))
    return elements


def _phase_one(
    decomposition: Decomposition, budget: int, seed: int, bound: int
) -> Optional[RegularityWitness]:
    algebra = decomposition.algebra
    for attempt in range(budget):
        elements = _attempt_elements(decomposition, attempt, seed, bound)
        product = multiply_chain(algebra, elements)
        if not is_nilpotent(algebra, product):
            logger.debug("phase 1 witness on attempt %s", attempt)
            return RegularityWitness(FOUND, tuple(elements), product, phase=1, attempt=attempt)
    return None


def _phase_two(decomposition: Decomposition, seed: int, cap: int) -> RegularityWitness:
    algebra = decomposition.algebra
    total = sum(decomposition.sizes)
    if total > cap:
        message = f"symbolic search needs {total} indeterminates, cap is {cap}"
        return RegularityWitness(INCONCLUSIVE, notes=[message])

    generic_factors: List[GenericElement] = []
    cursor = 0
    for component in decomposition.components:
        generic_factors.append(linear_generic(algebra.dim, [v.coords for v in component], cursor))
        cursor += len(component)
    product = generic_factors[0]
    for factor in generic_factors[1:]:
        product = generic_multiply(algebra, product, factor)

    current = product
    exponent = 1
    while True:
        if is_zero_generic(current):
            note = f"generic product to the power {exponent} vanishes identically"
            return RegularityWitness(REFUTED, phase=2, notes=[note])
        if exponent >= algebra.dim:
            break
        current = generic_multiply(algebra, current, current)
        exponent *= 2

    # nonzero polynomial: any point where it does not vanish specialises to a witness
    witness_poly = next(p for p in current if p)
    degree = max(len(monomial) for monomial in witness_poly)
    rng = random.Random(seed)
    for _ in range(SPECIALIZATION_TRIES):
        point = [rng.randint(1, 2 * degree + 1) for _ in range(total)]
        if evaluate(witness_poly, point).is_zero():
            continue
        elements = []
        cursor = 0
        for component in decomposition.components:
            elements.append(_combine(component, point[cursor : cursor + len(component)]))
            cursor += len(component)
        specialised = multiply_chain(algebra, elements)
        if not is_nilpotent(algebra, specialised):
            return RegularityWitness(FOUND, tuple(elements), specialised, phase=2)
    note = f"generic product is not nilpotent but {SPECIALIZATION_TRIES} integer points all vanish"
    return RegularityWitness(INCONCLUSIVE, phase=2, notes=[note])


def find_witness(
    decomposition: Decomposition,
    table: ThetaTable,
    budget: Optional[int] = None,
    seed: Optional[int] = None,
    definitive: bool = False,
) -> RegularityWitness:
    if table.m != decomposition.m:
        raise ValueError(f"Theta table has {table.m} rows, decomposition has {decomposition.m} components")
    settings = get_settings()
    budget = budget if budget is not None else settings.witness_attempts
    seed = seed if seed is not None else settings.seed
    found = _phase_one(decomposition, budget, seed, settings.witness_coordinate_bound)
    if found is not None:
        return found
    if not definitive:
        return RegularityWitness(
            INCONCLUSIVE, notes=[f"no witness in {budget} sampled attempts; rerun with definitive search"]
        )
    return _phase_two(decomposition, seed, settings.symbolic_indeterminate_cap)


def witness_report(witness: RegularityWitness) -> CheckReport:
    certificate = {"status": witness.status, "phase": witness.phase, "attempt": witness.attempt}
    if witness.product is not None:
        certificate["product"] = element_payload(witness.product)
    if witness.status == FOUND:
        return CheckReport.ok("witness", certificate, witness.notes)
    if witness.status == REFUTED:
        return CheckReport.fail("witness", certificate, witness.notes)
    return CheckReport.inconclusive("witness", certificate, witness.notes)


def _tuple_certificate(decomposition: Decomposition, indices: Sequence[int]) -> dict:
    return {
        "tuple": [i + 1 for i in indices],
        "labels": [decomposition.label(i) for i in indices],
    }


def tuple_product_check(
    decomposition: Decomposition,
    witness: RegularityWitness,
    max_len: Optional[int] = None,
    seed: int = 0,
    samples: int = 200,
) -> CheckReport:
    """Every product w_i1 ... w_in with n <= max_len must be nonzero."""
    if not witness.found or not witness.elements:
        return CheckReport.skipped("tuple-products", "no witness elements")
    algebra = decomposition.algebra
    m = decomposition.m
    max_len = max_len if max_len is not None else 2 * m
    elements = witness.elements
    if m <= get_settings().tuple_check_exhaustive_limit:
        checked = 0
        stack: List[Tuple[Tuple[int, ...], Element]] = [((i,), elements[i]) for i in reversed(range(m))]
        while stack:
            indices, product = stack.pop()
            checked += 1
            if product.is_zero():
                return CheckReport.fail("tuple-products", _tuple_certificate(decomposition, indices))
            if len(indices) < max_len:
                for i in reversed(range(m)):
                    stack.append((indices + (i,), multiply_elements(algebra, product, elements[i])))
        return CheckReport.ok("tuple-products", {"mode": "exhaustive", "max_len": max_len, "checked": checked})

    rng = random.Random(seed)
    for _ in range(samples):
        length = rng.randint(1, max_len)
        indices = tuple(rng.randrange(m) for _ in range(length))
        product = multiply_chain(algebra, [elements[i] for i in indices])
        if product.is_zero():
            return CheckReport.fail("tuple-products", _tuple_certificate(decomposition, indices))
    return CheckReport.ok("tuple-products", {"mode": "sampled", "max_len": max_len, "checked": samples})


def central_invertibility_check(decomposition: Decomposition, witness: RegularityWitness) -> CheckReport:
    """With a one-dimensional center each w_i is invertible and w_i^dim is a nonzero scalar."""
    algebra = decomposition.algebra
    if not witness.found or not witness.elements:
        return CheckReport.skipped("central-invertibility", "no witness elements")
    center_dim = len(center(algebra))
    if center_dim != 1:
        return CheckReport.skipped(
            "central-invertibility", f"center has dimension {center_dim}", vacuous=True
        )
    unit = algebra.unit_element
    pivot = next(k for k, c in enumerate(unit.coords) if c)
    for index, w in enumerate(witness.elements):
        if not is_invertible(algebra, w):
            return CheckReport.fail(
                "central-invertibility", {"component": index + 1, "reason": "not invertible"}
            )
        top = power(algebra, w, algebra.dim)
        scalar: Cyclotomic = top.coords[pivot] / unit.coords[pivot]
        if scalar.is_zero() or unit.scale(scalar) != top:
            return CheckReport.fail(
                "central-invertibility", {"component": index + 1, "reason": "w^dim is not a scalar"}
            )
    return CheckReport.ok("central-invertibility", {"center_dim": 1})
