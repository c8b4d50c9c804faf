"""CSV export of theta tables.

One row per component: the label, then one cell per column entry.

    entry := "1" | "zeta(" N ")^" k | "[" c0 ";" c1 ";" ... "]"

``zeta(N)^k`` is used when the entry is a root of unity zeta_N^k with
0 <= k < N and N minimal; otherwise the power-basis coefficients over
zeta_N are listed as "p/q" rationals.
"""

from __future__ import annotations

import csv
import io
from typing import List

from core.decomp.decomposition import ThetaTable
from core.exactnum.cyclotomic import Cyclotomic, format_rational


def format_entry(value: Cyclotomic) -> str:
    root = value.as_root()
    if root is not None:
        order, k = root
        return "1" if order == 1 else f"zeta({order})^{k}"
    normal = value.normalize()
    return "[" + ";".join(format_rational(c) for c in normal.coeffs) + "]"


def theta_rows(table: ThetaTable) -> List[List[str]]:
    header = [""] + [table.label(j) for j in range(table.m)]
    rows = [header]
    for i in range(table.m):
        rows.append([table.label(i)] + [format_entry(table(i, j)) for j in range(table.m)])
    return rows


def theta_to_csv(table: ThetaTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(theta_rows(table))
    return buffer.getvalue()
