from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from core.algebra.structure import Algebra, Element
from core.decomp.decomposition import Decomposition, ThetaTable
from core.gradedgroup.groups import AbelianType


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class NamedConstruction:
    """A decomposition plus what it is expected to produce."""

    name: str
    decomposition: Decomposition
    expected_theta: Optional[ThetaTable] = None
    expected_group: Optional[AbelianType] = None
    params: Dict[str, object] = field(default_factory=dict)
    # basis of the algebra inside a larger one, when built as a subalgebra
    ambient: Optional[Algebra] = None
    embedding: Tuple[Element, ...] = ()

    @property
    def algebra(self) -> Algebra:
        return self.decomposition.algebra

    @property
    def slug(self) -> str:
        if not self.params:
            return self.name
        suffix = "-".join(str(v).replace(",", "_") for v in self.params.values())
        return f"{self.name}-{suffix}"

    def to_ambient(self, x: Element) -> Element:
        if self.ambient is None:
            return x
        total = Element.zero(self.ambient.dim)
        for c, vector in zip(x.coords, self.embedding):
            if c:
                total = total + vector.scale(c)
        return total


def build_decomposition(
    algebra: Algebra, components: List[List[Element]], labels: Sequence[str]
) -> Decomposition:
    return Decomposition(algebra, tuple(tuple(c) for c in components), tuple(labels))
