"""Pydantic models for the JSON file formats."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator

from core.algebra.structure import Algebra, Element
from core.decomp.decomposition import Decomposition, ThetaTable
from core.exactnum.cyclotomic import Cyclotomic, common_order, format_scalar, parse_scalar
from core.gradedgroup.cocycles import Bicharacter, Cocycle
from core.gradedgroup.groups import CayleyTable
from core.identities.multilinear import MultilinearPoly


class ScalarPayload(BaseModel):
    N: int = Field(ge=1)
    coeffs: List[str]

    @classmethod
    def from_domain(cls, value: Cyclotomic) -> "ScalarPayload":
        return cls(**format_scalar(value))

    def to_domain(self) -> Cyclotomic:
        return parse_scalar({"N": self.N, "coeffs": self.coeffs})


def scalar_payload(value: Cyclotomic) -> Dict[str, Any]:
    return format_scalar(value)


def element_payload(x: Element) -> Dict[str, Any]:
    return {"coords": [format_scalar(c) for c in x.coords]}


class ElementPayload(BaseModel):
    coords: List[ScalarPayload]

    @classmethod
    def from_domain(cls, x: Element) -> "ElementPayload":
        return cls(coords=[ScalarPayload.from_domain(c) for c in x.coords])

    def to_domain(self) -> Element:
        return Element(tuple(c.to_domain() for c in self.coords))


class AlgebraPayload(BaseModel):
    dim: int = Field(ge=1)
    N: int = Field(ge=1)
    unit: List[ScalarPayload]
    structure: List[Tuple[int, int, int, ScalarPayload]]
    components: Optional[List[Tuple[int, int]]] = None
    name: Optional[str] = None

    @classmethod
    def from_domain(cls, algebra: Algebra) -> "AlgebraPayload":
        rows = [
            (i, j, k, ScalarPayload.from_domain(c))
            for (i, j), entries in sorted(algebra.structure.items())
            for k, c in entries
        ]
        return cls(
            dim=algebra.dim,
            N=algebra.conductor,
            unit=[ScalarPayload.from_domain(c) for c in algebra.unit],
            structure=rows,
            components=[list(c) for c in algebra.components] if algebra.components else None,
            name=algebra.name or None,
        )

    def to_domain(self) -> Algebra:
        if len(self.unit) != self.dim:
            raise ValueError(f"unit has {len(self.unit)} coordinates, dim is {self.dim}")
        buckets: Dict[Tuple[int, int], List[Tuple[int, Cyclotomic]]] = {}
        for i, j, k, scalar in self.structure:
            if not all(0 <= index < self.dim for index in (i, j, k)):
                raise ValueError(f"structure entry ({i},{j},{k}) out of range for dim {self.dim}")
            buckets.setdefault((i, j), []).append((k, scalar.to_domain()))
        unit = tuple(c.to_domain() for c in self.unit)
        values = [c for entries in buckets.values() for _, c in entries] + list(unit)
        return Algebra(
            dim=self.dim,
            conductor=max(self.N, common_order(values)),
            structure={key: tuple(value) for key, value in buckets.items()},
            unit=unit,
            components=tuple(tuple(c) for c in self.components) if self.components else None,
            name=self.name or "",
        )


class DecompositionPayload(BaseModel):
    algebra: Union[str, AlgebraPayload]
    components: List[List[List[ScalarPayload]]]
    labels: Optional[List[str]] = None

    @field_validator("components")
    @classmethod
    def _nonempty(cls, value: List[List[List[ScalarPayload]]]) -> List[List[List[ScalarPayload]]]:
        if not value or any(not component for component in value):
            raise ValueError("every component needs at least one basis vector")
        return value

    @classmethod
    def from_domain(
        cls, decomposition: Decomposition, algebra_ref: Optional[str] = None
    ) -> "DecompositionPayload":
        return cls(
            algebra=algebra_ref or AlgebraPayload.from_domain(decomposition.algebra),
            components=[
                [[ScalarPayload.from_domain(c) for c in v.coords] for v in component]
                for component in decomposition.components
            ],
            labels=list(decomposition.labels),
        )

    def to_domain(self, base_dir: Optional[Path] = None) -> Decomposition:
        if isinstance(self.algebra, str):
            path = (base_dir or Path(".")) / self.algebra
            algebra = AlgebraPayload.model_validate(read_json(path)).to_domain()
        else:
            algebra = self.algebra.to_domain()
        components = tuple(
            tuple(Element(tuple(c.to_domain() for c in vector)) for vector in component)
            for component in self.components
        )
        return Decomposition(algebra, components, tuple(self.labels or ()))


class CayleyTablePayload(BaseModel):
    m: int = Field(ge=1)
    identity: int = 0
    table: List[List[int]]
    labels: Optional[List[str]] = None

    @classmethod
    def from_domain(cls, group: CayleyTable) -> "CayleyTablePayload":
        return cls(
            m=group.m,
            identity=group.identity,
            table=[list(row) for row in group.table],
            labels=list(group.labels) if group.labels else None,
        )

    def to_domain(self) -> CayleyTable:
        return CayleyTable(
            self.m,
            tuple(tuple(row) for row in self.table),
            self.identity,
            tuple(self.labels) if self.labels else None,
        )


class ScalarTablePayload(BaseModel):
    """Shared format of cocycles and bicharacters."""

    group: CayleyTablePayload
    values: List[List[ScalarPayload]]

    @classmethod
    def from_domain(cls, table: Union[Cocycle, Bicharacter]) -> "ScalarTablePayload":
        return cls(
            group=CayleyTablePayload.from_domain(table.group),
            values=[[ScalarPayload.from_domain(c) for c in row] for row in table.values],
        )

    def to_cocycle(self) -> Cocycle:
        return Cocycle(self.group.to_domain(), self._values())

    def to_bicharacter(self) -> Bicharacter:
        return Bicharacter(self.group.to_domain(), self._values())

    def _values(self) -> Tuple[Tuple[Cyclotomic, ...], ...]:
        return tuple(tuple(c.to_domain() for c in row) for row in self.values)


class ThetaTablePayload(BaseModel):
    m: int = Field(ge=1)
    entries: List[List[ScalarPayload]]
    constrained: Optional[List[List[bool]]] = None
    labels: Optional[List[str]] = None

    @classmethod
    def from_domain(cls, table: ThetaTable) -> "ThetaTablePayload":
        return cls(
            m=table.m,
            entries=[[ScalarPayload.from_domain(c) for c in row] for row in table.entries],
            constrained=[list(row) for row in table.constrained],
            labels=list(table.labels) if table.labels else None,
        )

    def to_domain(self) -> ThetaTable:
        if len(self.entries) != self.m or any(len(row) != self.m for row in self.entries):
            raise ValueError(f"theta table must be {self.m}x{self.m}")
        entries = tuple(tuple(c.to_domain() for c in row) for row in self.entries)
        flags = self.constrained or [[True] * self.m for _ in range(self.m)]
        return ThetaTable(entries, tuple(tuple(row) for row in flags), tuple(self.labels or ()))


class TermPayload(BaseModel):
    perm: List[int]
    coeff: ScalarPayload


class MultilinearPolyPayload(BaseModel):
    """Permutations are written 1-based."""

    n: int = Field(ge=1)
    terms: List[TermPayload]

    @classmethod
    def from_domain(cls, poly: MultilinearPoly) -> "MultilinearPolyPayload":
        return cls(
            n=poly.n,
            terms=[
                TermPayload(perm=[i + 1 for i in perm], coeff=ScalarPayload.from_domain(c))
                for perm, c in sorted(poly.terms.items())
            ],
        )

    def to_domain(self) -> MultilinearPoly:
        terms = {}
        for term in self.terms:
            if sorted(term.perm) != list(range(1, self.n + 1)):
                raise ValueError(f"{term.perm} is not a permutation of 1..{self.n}")
            terms[tuple(i - 1 for i in term.perm)] = term.coeff.to_domain()
        return MultilinearPoly(self.n, terms)


def read_json(path: Union[str, Path]) -> Any:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def dumps(data: Any) -> str:
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json", by_alias=True, exclude_none=True)
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def write_json(path: Union[str, Path], data: Any) -> None:
    Path(path).write_text(dumps(data), encoding="utf-8")


def load_decomposition(path: Union[str, Path]) -> Decomposition:
    path = Path(path)
    payload = DecompositionPayload.model_validate(read_json(path))
    return payload.to_domain(base_dir=path.parent)
