"""
Exact rational linear algebra.

Dense work (row reduction, rank, determinants, inverses, feasibility with
certificates) goes through sympy's DomainMatrix over QQ. Incremental span
saturation for orbit closures uses SpanReducer, which keeps a fully reduced
echelon basis of sparse Fraction vectors.

Matrices cross this module boundary as lists of Fraction rows.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Matrix = List[List[Fraction]]
SparseVector = Dict[int, Fraction]


def _to_qq(value) -> "QQ":
    q = Fraction(value)
    return QQ(q.numerator, q.denominator)


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def to_domain_matrix(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    """Wrap Fraction rows as a DomainMatrix over QQ."""
    return DomainMatrix(
        [[_to_qq(x) for x in row] for row in rows],
        (len(rows), ncols),
        QQ,
    )


def from_domain_matrix(dm: DomainMatrix) -> Matrix:
    return [[_from_qq(x) for x in row] for row in dm.to_list()]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[Matrix, Tuple[int, ...]]:
    """
    Reduced row echelon form.

    Returns:
        (reduced rows, pivot columns). An empty input gives ([], ()).
    """
    if not rows or ncols == 0:
        return [list(r) for r in rows], ()
    reduced, pivots = to_domain_matrix(rows, ncols).rref()
    return from_domain_matrix(reduced), tuple(int(p) for p in pivots)


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis of {v : rows·v = 0}, one vector per free column."""
    reduced, pivots = rref(rows, ncols)
    pivot_row = {col: r for r, col in enumerate(pivots)}
    basis: Matrix = []
    for free in range(ncols):
        if free in pivot_row:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for col, r in pivot_row.items():
            v[col] = -reduced[r][free]
        basis.append(v)
    return basis


def inverse(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    """Exact inverse of a square matrix (raises sympy's error when singular)."""
    n = len(rows)
    return from_domain_matrix(to_domain_matrix(rows, n).inv())


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    return _from_qq(to_domain_matrix(rows, n).det())


def leading_principal_minors(rows: Sequence[Sequence[Fraction]]) -> List[Fraction]:
    """det of the k×k upper-left blocks, k = 1..n."""
    return [determinant([list(r[:k]) for r in rows[:k]]) for k in range(1, len(rows) + 1)]


def mat_vec(rows: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> List[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in rows]


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def transpose(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*rows)]


# ============================================================================
# Feasibility with certificates
# ============================================================================


@dataclass(frozen=True)
class LinearSolve:
    """
    Outcome of solving A·c = b exactly.

    Attributes:
        solution: a particular solution (free variables set to 0), or None
        certificate: y with y·A = 0 and y·b ≠ 0 when inconsistent, else None
        rank_a: rank of A
        rank_augmented: rank of [A | b]
    """
    solution: Optional[List[Fraction]]
    certificate: Optional[List[Fraction]]
    rank_a: int
    rank_augmented: int

    @property
    def feasible(self) -> bool:
        return self.solution is not None


def solve(a_rows: Sequence[Sequence[Fraction]], b: Sequence[Fraction], ncols: int) -> LinearSolve:
    """
    Solve A·c = b over the rationals, certifying infeasibility.

    Row-reduces [A | b | I]. A row whose A-part vanishes but whose b-entry does
    not proves inconsistency; its I-part is the left certificate y.
    """
    m = len(a_rows)
    if m == 0:
        return LinearSolve([Fraction(0)] * ncols, None, 0, 0)
    width = ncols + 1 + m
    augmented = []
    for i, row in enumerate(a_rows):
        ident = [Fraction(0)] * m
        ident[i] = Fraction(1)
        augmented.append([Fraction(x) for x in row] + [Fraction(b[i])] + ident)
    reduced, pivots = rref(augmented, width)
    rank_a = sum(1 for p in pivots if p < ncols)
    rank_aug = sum(1 for p in pivots if p <= ncols)

    for row in reduced:
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return LinearSolve(None, row[ncols + 1:], rank_a, rank_aug)

    solution = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        if col < ncols:
            solution[col] = reduced[r][ncols]
    return LinearSolve(solution, None, rank_a, rank_aug)


# ============================================================================
# Incremental span
# ============================================================================


class SpanReducer:
    """
    Fully reduced echelon basis of a growing span of sparse vectors.

    Each stored row has coefficient 1 on its pivot and no entry on any other
    row's pivot, so one pass over the pivots reduces a new vector.
    """

    def __init__(self):
        self._rows: Dict[int, SparseVector] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: SparseVector) -> SparseVector:
        v = {k: Fraction(c) for k, c in vector.items() if c != 0}
        for pivot, row in self._rows.items():
            c = v.get(pivot)
            if not c:
                continue
            for k, rc in row.items():
                nv = v.get(k, Fraction(0)) - c * rc
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def contains(self, vector: SparseVector) -> bool:
        return not self.reduce(vector)

    def add(self, vector: SparseVector) -> bool:
        """Insert a vector; returns False when it was already in the span."""
        v = self.reduce(vector)
        if not v:
            return False
        pivot = min(v)
        scale = v[pivot]
        v = {k: c / scale for k, c in v.items()}
        for row in self._rows.values():
            c = row.get(pivot)
            if not c:
                continue
            for k, vc in v.items():
                nv = row.get(k, Fraction(0)) - c * vc
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        self._rows[pivot] = v
        return True

    def basis(self) -> List[SparseVector]:
        return [dict(self._rows[p]) for p in sorted(self._rows)]
