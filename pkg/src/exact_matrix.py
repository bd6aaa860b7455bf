"""
Exact Matrices - flagtwist

Dense matrices over Q(i) with fraction-managed Gaussian elimination.
Pivots are chosen by smallest bit size to keep coefficient growth down.
Every factorization checks rank + nullity = cols.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from src.errors import LinearAlgebraError
from src.gaussrat import ONE, ZERO, GaussRat, Scalar

logger = logging.getLogger(__name__)

Vector = List[GaussRat]


class ExactMatrix:
    """
    Immutable dense matrix of GaussRat entries.

    Attributes:
        rows (int): Number of rows
        cols (int): Number of columns

    Examples:
        >>> m = ExactMatrix([[1, 2], [2, 4]])
        >>> m.rank()
        1
        >>> m.nullspace()
        [[GaussRat(-2), GaussRat(1)]]
    """

    def __init__(self, entries: Sequence[Sequence[Scalar]], cols: Optional[int] = None):
        """
        Args:
            entries: Row-major grid of scalars
            cols: Column count; required when entries has no rows

        Raises:
            ValueError: If rows have unequal length or cols disagrees
        """
        grid = [[GaussRat.coerce(x) for x in row] for row in entries]
        if cols is None:
            if not grid:
                raise ValueError("Column count is required for a matrix with no rows")
            cols = len(grid[0])
        for index, row in enumerate(grid):
            if len(row) != cols:
                raise ValueError(
                    f"Row {index} has {len(row)} entries, expected {cols}"
                )
        self._entries = grid
        self._cols = cols
        self._rref: Optional[Tuple[List[Vector], List[int]]] = None

    @property
    def rows(self) -> int:
        return len(self._entries)

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> List[Vector]:
        return [list(row) for row in self._entries]

    def __getitem__(self, index: Tuple[int, int]) -> GaussRat:
        r, c = index
        return self._entries[r][c]

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"

    # ══════════════════════════════════════════════════════════════════════
    # ELIMINATION
    # ══════════════════════════════════════════════════════════════════════

    def rref(self) -> Tuple[List[Vector], List[int]]:
        """
        Reduced row echelon form.

        Returns:
            (rows, pivots): the nonzero reduced rows and their pivot columns
        """
        if self._rref is None:
            self._rref = _row_reduce(self._entries, self._cols)
            rank = len(self._rref[1])
            logger.debug("rref %dx%d -> rank %d", self.rows, self._cols, rank)
        reduced, pivots = self._rref
        return [list(row) for row in reduced], list(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullity(self) -> int:
        return self._cols - self.rank()

    def nullspace(self) -> List[Vector]:
        """
        Basis of {v : M v = 0}, one vector per free column.

        Each basis vector sets its free column to 1, the other free columns
        to 0 and the pivot columns from the reduced rows.
        """
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self._cols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [ZERO] * self._cols
            v[f] = ONE
            for row, pc in zip(reduced, pivots):
                v[pc] = -row[f]
            basis.append(v)
        if len(basis) + len(pivots) != self._cols:
            raise LinearAlgebraError(
                f"rank {len(pivots)} + nullity {len(basis)} != cols {self._cols}"
            )
        return basis

    def solve(self, rhs: Sequence[Scalar]) -> Optional[Vector]:
        """
        Find one x with M x = rhs, free variables set to zero.

        Returns:
            The solution vector, or None if the system is infeasible

        Raises:
            ValueError: If rhs length differs from the row count
        """
        if len(rhs) != self.rows:
            raise ValueError(f"Right-hand side has {len(rhs)} entries, expected {self.rows}")
        augmented = [row + [GaussRat.coerce(b)] for row, b in zip(self._entries, rhs)]
        reduced, pivots = _row_reduce(augmented, self._cols + 1)
        if pivots and pivots[-1] == self._cols:
            return None
        x = [ZERO] * self._cols
        for row, pc in zip(reduced, pivots):
            x[pc] = row[self._cols]
        return x

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """Return M v."""
        if len(vector) != self._cols:
            raise ValueError(f"Vector has {len(vector)} entries, expected {self._cols}")
        v = [GaussRat.coerce(x) for x in vector]
        out = []
        for row in self._entries:
            acc = ZERO
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out


def _row_reduce(entries: Sequence[Sequence[GaussRat]], cols: int) -> Tuple[List[Vector], List[int]]:
    rows = [list(row) for row in entries]
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == len(rows):
            break
        candidates = [i for i in range(r, len(rows)) if rows[i][c]]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: rows[i][c].bit_size())
        rows[r], rows[best] = rows[best], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        pivot_row = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [
                    x - factor * y if y else x for x, y in zip(rows[i], pivot_row)
                ]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank_of(vectors: Sequence[Sequence[Scalar]], cols: int) -> int:
    """Rank of a list of row vectors of the given length."""
    return ExactMatrix(vectors, cols=cols).rank()


def in_row_space(vectors: Sequence[Sequence[Scalar]], candidate: Sequence[Scalar]) -> bool:
    """True iff candidate lies in the span of vectors."""
    cols = len(candidate)
    return rank_of(list(vectors) + [candidate], cols) == rank_of(vectors, cols)


def det3(a: Sequence[Scalar], b: Sequence[Scalar], c: Sequence[Scalar]) -> GaussRat:
    """Determinant of the 3x3 matrix with rows a, b, c."""
    a = [GaussRat.coerce(x) for x in a]
    b = [GaussRat.coerce(x) for x in b]
    c = [GaussRat.coerce(x) for x in c]
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )
