from __future__ import annotations

import os
import sys
from pathlib import Path
from typing import Dict, List, Tuple

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.constructions import get_construction  # noqa: E402
from core.schema.payloads import AlgebraPayload, DecompositionPayload, write_json  # noqa: E402

FIXTURES: List[Tuple[str, Dict[str, object]]] = [
    ("pauli", {"n": 2}),
    ("pauli", {"n": 3}),
    ("minimal-non-set-grading", {}),
    ("non-realizable-set-grading", {}),
    ("kronecker", {"n1": 2, "n2": 4}),
    ("p-power", {"p": 2, "exponents": "1,2"}),
    ("grassmann-z2", {"k": 3}),
    ("twisted", {"n": 3}),
    ("group-algebra", {"group": "klein"}),
]


def build_all(out: Path) -> List[Path]:
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, params in FIXTURES:
        construction = get_construction(name, **params)
        algebra_file = f"{construction.slug}.algebra.json"
        write_json(out / algebra_file, AlgebraPayload.from_domain(construction.algebra))
        target = out / f"{construction.slug}.decomposition.json"
        write_json(
            target,
            DecompositionPayload.from_domain(construction.decomposition, algebra_ref=algebra_file),
        )
        written.append(target)
    return written


if __name__ == "__main__":
    destination = Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    for path in build_all(destination):
        print(path)
