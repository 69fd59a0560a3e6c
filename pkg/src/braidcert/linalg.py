"""Exact sparse linear algebra over Q(sqrt2).

Rows are ``{column index: QSqrt2}`` dicts.  Everything is deterministic:
pivots are chosen as the smallest column of each incoming row, rows are
processed in input order, and kernel vectors are emitted with free columns
ascending.
"""

from __future__ import annotations

from .scalars import ONE, QSqrt2

Row = dict


class _Echelon:
    """Incrementally maintained reduced row-echelon collection."""

    def __init__(self) -> None:
        self.pivots: dict = {}  # pivot column -> normalized row

    def reduce(self, row: Row) -> Row:
        """Reduce ``row`` against the current pivots (row is consumed)."""
        while True:
            hit = sorted(c for c in row if c in self.pivots)
            if not hit:
                return row
            for col in hit:
                factor = row.get(col)
                if not factor:
                    continue
                for c, v in self.pivots[col].items():
                    cur = row.get(c)
                    cur = -factor * v if cur is None else cur - factor * v
                    if cur:
                        row[c] = cur
                    else:
                        row.pop(c, None)

    def insert(self, row: Row) -> bool:
        """Reduce and, if nonzero, normalize and adopt as a new pivot row."""
        row = self.reduce(row)
        if not row:
            return False
        col = min(row)
        inv = row[col].inverse()
        normalized = {c: v * inv for c, v in row.items()}
        # keep earlier pivot rows fully reduced against the new one
        for prow in self.pivots.values():
            f = prow.get(col)
            if f is None:
                continue
            for c, v in normalized.items():
                cur = prow.get(c)
                cur = -f * v if cur is None else cur - f * v
                if cur:
                    prow[c] = cur
                else:
                    prow.pop(c, None)
        self.pivots[col] = normalized
        return True


def kernel_basis(rows, ncols: int) -> list:
    """Basis of ``{x : A x = 0}`` as column->value dicts, free columns ascending."""
    ech = _Echelon()
    for row in rows:
        ech.insert(dict(row))
    pivot_cols = set(ech.pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = {free: ONE}
        for pcol, prow in ech.pivots.items():
            coeff = prow.get(free)
            if coeff:
                vec[pcol] = -coeff
        basis.append(vec)
    return basis


def solve_affine(rows, rhs) -> Row | None:
    """One solution of ``A x = b`` (free variables set to 0), or None.

    ``rows`` and ``rhs`` are parallel sequences; each row is a column dict and
    each rhs entry a QSqrt2.
    """
    ech = _Echelon()
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[_RHS_COL] = -b
        ech.insert(r)
    if _RHS_COL in ech.pivots:
        return None  # inconsistent: a row reduced to 0 = nonzero
    solution: Row = {}
    for pcol, prow in ech.pivots.items():
        b = prow.get(_RHS_COL)
        if b:
            solution[pcol] = -b
    return solution


# real columns are non-negative ints; the RHS rides along in a column that
# sorts after all of them so it can never be chosen as a pivot before a
# variable column that is still present.
_RHS_COL = float("inf")


def dense_inverse(matrix) -> list | None:
    """Inverse of a small dense QSqrt2 matrix (list of lists), or None."""
    m = len(matrix)
    if any(len(r) != m for r in matrix):
        return None
    aug = [
        [matrix[i][j] for j in range(m)]
        + [ONE if i == j else QSqrt2(0) for j in range(m)]
        for i in range(m)
    ]
    for col in range(m):
        piv = next((r for r in range(col, m) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(m):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[m:] for row in aug]


def dense_rank(matrix) -> int:
    ech = _Echelon()
    for row in matrix:
        ech.insert({j: v for j, v in enumerate(row) if v})
    return len(ech.pivots)
