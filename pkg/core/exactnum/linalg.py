"""Exact dense linear algebra over Q and cyclotomic fields.

Matrices are lists of rows. Rational-only inputs are reduced over
``Fraction`` and converted back, everything else runs on ``Cyclotomic``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from core.exactnum.cyclotomic import ONE, ZERO, Cyclotomic

Matrix = List[List[Cyclotomic]]
Vector = List[Cyclotomic]


def _rational_view(matrix: Sequence[Sequence[Cyclotomic]]) -> Optional[List[List[Fraction]]]:
    view: List[List[Fraction]] = []
    for row in matrix:
        out = []
        for entry in row:
            if not entry.is_rational():
                return None
            out.append(entry.coeffs[0])
        view.append(out)
    return view


def _lift(matrix: Sequence[Sequence[Fraction]]) -> Matrix:
    return [[Cyclotomic.from_fraction(x) for x in row] for row in matrix]


def _eliminate(rows: list, ncols: int) -> List[int]:
    """In-place reduced row echelon form; works for Fraction or Cyclotomic rows."""
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pivot = next((p for p in range(r, len(rows)) if rows[p][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        lead = rows[r]
        support = [j for j in range(c, ncols) if lead[j]]
        for j in support:
            lead[j] = lead[j] * inv
        for i, row in enumerate(rows):
            if i == r:
                continue
            factor = row[c]
            if not factor:
                continue
            for j in support:
                row[j] = row[j] - factor * lead[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(matrix: Sequence[Sequence[Cyclotomic]]) -> Tuple[Matrix, List[int]]:
    if not matrix:
        return [], []
    ncols = len(matrix[0])
    view = _rational_view(matrix)
    if view is not None:
        pivots = _eliminate(view, ncols)
        return _lift(view), pivots
    rows = [list(row) for row in matrix]
    pivots = _eliminate(rows, ncols)
    return rows, pivots


def rank(matrix: Sequence[Sequence[Cyclotomic]]) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix: Sequence[Sequence[Cyclotomic]], ncols: Optional[int] = None) -> List[Vector]:
    """Basis of {x : Mx = 0}, one vector per free column in increasing order.

    Each vector has a 1 in its free column and zeros in the other free columns.
    """
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    reduced, pivots = rref(matrix) if matrix else ([], [])
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [ZERO] * ncols
        vector[free] = ONE
        for row_index, pivot in enumerate(pivots):
            entry = reduced[row_index][free]
            if entry:
                vector[pivot] = -entry
        basis.append(vector)
    return basis


def solve_rational(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """Solve sum_j x_j * columns[j] = target over Q, or None when inconsistent."""
    n = len(target)
    k = len(columns)
    rows = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    pivots = _eliminate(rows, k + 1)
    if k in pivots:
        return None
    solution = [Fraction(0)] * k
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = rows[row_index][k]
    return solution


class BasisSolver:
    """Coordinates of vectors with respect to a fixed linearly independent row set."""

    def __init__(self, rows: Sequence[Sequence[Cyclotomic]]) -> None:
        self.rows = [list(row) for row in rows]
        self.size = len(self.rows)
        self.width = len(self.rows[0]) if self.rows else 0
        # augment with an identity block to track row combinations
        augmented = [
            list(row) + [ONE if i == j else ZERO for j in range(self.size)]
            for i, row in enumerate(self.rows)
        ]
        reduced, pivots = rref(augmented)
        self._pivots = [p for p in pivots if p < self.width]
        if len(self._pivots) != self.size:
            raise ValueError("Basis rows are linearly dependent")
        self._reduced = reduced

    def coordinates(self, vector: Sequence[Cyclotomic]) -> Optional[Vector]:
        if len(vector) != self.width:
            raise ValueError(f"Expected vector of length {self.width}, got {len(vector)}")
        coords = [ZERO] * self.size
        residual = list(vector)
        for row_index, pivot in enumerate(self._pivots):
            factor = residual[pivot]
            if not factor:
                continue
            reduced_row = self._reduced[row_index]
            for j in range(self.width):
                if reduced_row[j]:
                    residual[j] = residual[j] - factor * reduced_row[j]
            for j in range(self.size):
                combo = reduced_row[self.width + j]
                if combo:
                    coords[j] = coords[j] + factor * combo
        if any(residual):
            return None
        return coords


def span_contains(rows: Sequence[Sequence[Cyclotomic]], vector: Sequence[Cyclotomic]) -> bool:
    if not rows:
        return not any(vector)
    return rank(list(rows) + [list(vector)]) == rank(rows)


def identity_matrix(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(matrix: Sequence[Sequence[Cyclotomic]]) -> Matrix:
    return [list(col) for col in zip(*matrix)]


def matmul(left: Sequence[Sequence[Cyclotomic]], right: Sequence[Sequence[Cyclotomic]]) -> Matrix:
    if left and len(left[0]) != len(right):
        raise ValueError("Incompatible matrix shapes")
    cols = len(right[0]) if right else 0
    result: Matrix = []
    for row in left:
        out = [ZERO] * cols
        for k, a in enumerate(row):
            if not a:
                continue
            for j, b in enumerate(right[k]):
                if b:
                    out[j] = out[j] + a * b
        result.append(out)
    return result


def kronecker_product(left: Sequence[Sequence[Cyclotomic]], right: Sequence[Sequence[Cyclotomic]]) -> Matrix:
    """Block matrix with (a, b) row index a * len(right) + b."""
    result: Matrix = []
    for left_row in left:
        for right_row in right:
            result.append([a * b for a in left_row for b in right_row])
    return result


def det_exact(matrix: Sequence[Sequence[Cyclotomic]]) -> Cyclotomic:
    """Bareiss fraction-free elimination with exact division."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("Determinant requires a square matrix")
    if n == 0:
        return ONE
    view = _rational_view(matrix)
    work = view if view is not None else [list(row) for row in matrix]
    sign = 1
    previous = Fraction(1) if view is not None else ONE
    for k in range(n - 1):
        if not work[k][k]:
            swap = next((i for i in range(k + 1, n) if work[i][k]), None)
            if swap is None:
                return ZERO
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        inv_previous = 1 / previous
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]) * inv_previous
            work[i][k] = Fraction(0) if view is not None else ZERO
        previous = pivot
    det = work[n - 1][n - 1] * sign
    return Cyclotomic.coerce(det) if view is not None else det


def solve_linear(matrix: Sequence[Sequence[Cyclotomic]], rhs: Sequence[Cyclotomic]) -> Optional[Vector]:
    """One solution of Mx = rhs (free variables set to zero), or None."""
    if not matrix:
        return None
    ncols = len(matrix[0])
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    solution = [ZERO] * ncols
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = reduced[row_index][ncols]
    return solution


class IncrementalSpan:
    """Fully reduced echelon rows; ``add`` reports whether a vector enlarged the span."""

    def __init__(self, width: int) -> None:
        self.width = width
        self._rows: List[Tuple[int, Vector]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence[Cyclotomic]) -> Vector:
        work = list(vector)
        for pivot, row in self._rows:
            factor = work[pivot]
            if factor:
                for j in range(self.width):
                    if row[j]:
                        work[j] = work[j] - factor * row[j]
        return work

    def contains(self, vector: Sequence[Cyclotomic]) -> bool:
        return not any(self.reduce(vector))

    def add(self, vector: Sequence[Cyclotomic]) -> bool:
        work = self.reduce(vector)
        pivot = next((j for j, value in enumerate(work) if value), None)
        if pivot is None:
            return False
        inv = 1 / work[pivot]
        work = [value * inv if value else ZERO for value in work]
        for index, (other_pivot, row) in enumerate(self._rows):
            factor = row[pivot]
            if factor:
                self._rows[index] = (
                    other_pivot,
                    [a - factor * b if b else a for a, b in zip(row, work)],
                )
        self._rows.append((pivot, work))
        return True
