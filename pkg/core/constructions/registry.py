from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from .base import NamedConstruction
from .divisor import kronecker_divisor_grading, p_power_sum_grading
from .graded_algebras import (
    commutative_decomposition,
    grassmann_z2_decomposition,
    group_algebra_construction,
    heisenberg_twisted_construction,
    nilpotent_z2_decomposition,
)
from .pauli import pauli_decomposition
from .set_gradings import (
    example_6_1,
    example_6_2,
    minimal_non_set_grading,
    non_realizable_set_grading,
)


@dataclass(frozen=True)
class ConstructionEntry:
    builder: Callable[..., NamedConstruction]
    params: Tuple[str, ...]
    description: str


CONSTRUCTIONS: Dict[str, ConstructionEntry] = {
    "pauli": ConstructionEntry(pauli_decomposition, ("n",), "clock-and-shift grading of M_n"),
    "minimal-non-set-grading": ConstructionEntry(
        minimal_non_set_grading, (), "minimal decomposition of M_2 + M_4 that is not a set grading"
    ),
    "non-realizable-set-grading": ConstructionEntry(
        non_realizable_set_grading, (), "set grading of a 6-dim subalgebra of M_6 no group realizes"
    ),
    "example-6-1": ConstructionEntry(example_6_1, (), "alias of minimal-non-set-grading"),
    "example-6-2": ConstructionEntry(example_6_2, (), "alias of non-realizable-set-grading"),
    "kronecker": ConstructionEntry(
        kronecker_divisor_grading, ("n1", "n2"), "regular grading of M_n1 + M_n2 for n1 | n2"
    ),
    "p-power": ConstructionEntry(
        p_power_sum_grading, ("p", "exponents"), "regular grading of M_(p^l1) + ... + M_(p^lr)"
    ),
    "grassmann-z2": ConstructionEntry(
        grassmann_z2_decomposition, ("k",), "even/odd split of the exterior algebra on k generators"
    ),
    "group-algebra": ConstructionEntry(
        group_algebra_construction, ("group",), "group algebra KG split into the lines K g"
    ),
    "twisted": ConstructionEntry(
        heisenberg_twisted_construction, ("n",), "Z_n x Z_n twisted by zeta_n^(a2 b1)"
    ),
    "nilpotent-z2": ConstructionEntry(nilpotent_z2_decomposition, (), "K + Ku with u^2 = 0"),
    "commutative": ConstructionEntry(commutative_decomposition, ("k",), "K^k as one component"),
}


def get_construction(name: str, **params: object) -> NamedConstruction:
    if name not in CONSTRUCTIONS:
        raise KeyError(f"Unknown construction '{name}'")
    entry = CONSTRUCTIONS[name]
    unknown = sorted(key for key, value in params.items() if value is not None and key not in entry.params)
    if unknown:
        raise ValueError(f"Construction '{name}' takes no parameter(s) {unknown}")
    return entry.builder(**{key: value for key, value in params.items() if value is not None})


def parse_reference(reference: str) -> NamedConstruction:
    """'NAME' or 'NAME:VALUE', where VALUE fills the first parameter."""
    name, _, value = reference.partition(":")
    if not value:
        return get_construction(name)
    entry = CONSTRUCTIONS.get(name)
    if entry is None:
        raise KeyError(f"Unknown construction '{name}'")
    if not entry.params:
        raise ValueError(f"Construction '{name}' takes no parameters")
    first = entry.params[0]
    return get_construction(name, **{first: _coerce(first, value)})


def _coerce(param: str, value: str) -> object:
    if param in ("group", "exponents"):
        return value
    try:
        return int(value)
    except ValueError as exc:
        raise ValueError(f"Parameter {param} must be an integer, got '{value}'") from exc


def list_constructions() -> List[Tuple[str, Tuple[str, ...], str]]:
    return [(name, entry.params, entry.description) for name, entry in CONSTRUCTIONS.items()]
