# -*- coding: utf-8 -*-

"""Exact sparse matrices over the rationals.

Matrices are stored by column, each column a dict row -> Fraction, which is
how the graded slices are assembled: column j holds the coordinates of the
image of the j-th basis element. Ranks use fraction-free (Bareiss)
elimination on an integer copy; kernels and linear solves use Gauss-Jordan
elimination over Fractions.
"""

from fractions import Fraction
import logging
from math import lcm

logger = logging.getLogger(__name__)


class SparseMatrix:
    """An nrows x ncols matrix with rational entries.

    Parameters
    ----------
    nrows, ncols : int
        The shape.
    columns : {int: {int: Fraction}}, optional
        The nonzero entries, column by column.
    """

    def __init__(self, nrows, ncols, columns=None):
        self.nrows = nrows
        self.ncols = ncols
        self.columns = {}
        if columns is not None:
            for j, column in columns.items():
                if not 0 <= j < ncols:
                    raise IndexError(f"Column {j} outside 0..{ncols - 1}")
                clean = {}
                for i, value in column.items():
                    if not 0 <= i < nrows:
                        raise IndexError(f"Row {i} outside 0..{nrows - 1}")
                    if value:
                        clean[i] = Fraction(value)
                if clean:
                    self.columns[j] = clean

    @classmethod
    def from_dense(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        columns = {}
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                if value:
                    columns.setdefault(j, {})[i] = value
        return cls(nrows, ncols, columns)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def column(self, j):
        return dict(self.columns.get(j, {}))

    def entry(self, i, j):
        return self.columns.get(j, {}).get(i, Fraction(0))

    def rows(self):
        """The nonzero rows as {row index: {column: value}}."""
        result = {}
        for j, column in self.columns.items():
            for i, value in column.items():
                result.setdefault(i, {})[j] = value
        return result

    def to_dense(self):
        dense = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for j, column in self.columns.items():
            for i, value in column.items():
                dense[i][j] = value
        return dense

    def is_zero(self):
        return not self.columns

    def nnz(self):
        return sum(len(c) for c in self.columns.values())

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        columns = {}
        for j, column in other.columns.items():
            result = {}
            for k, b in column.items():
                for i, a in self.columns.get(k, {}).items():
                    result[i] = result.get(i, 0) + a * b
            columns[j] = {i: v for i, v in result.items() if v}
        return SparseMatrix(self.nrows, other.ncols, columns)

    def hstack(self, other):
        """[self | other]"""
        if self.nrows != other.nrows:
            raise ValueError("hstack needs the same number of rows")
        columns = dict(self.columns)
        for j, column in other.columns.items():
            columns[self.ncols + j] = column
        return SparseMatrix(self.nrows, self.ncols + other.ncols, columns)

    def select_columns(self, indices):
        return SparseMatrix(
            self.nrows,
            len(indices),
            {k: self.columns[j] for k, j in enumerate(indices) if j in self.columns},
        )

    def apply(self, vector):
        """M·v for v given as {column: value}."""
        result = {}
        for j, b in vector.items():
            for i, a in self.columns.get(j, {}).items():
                result[i] = result.get(i, 0) + a * b
        return {i: v for i, v in result.items() if v}

    def rank(self):
        return bareiss_rank(self)

    def kernel(self):
        return kernel(self)

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def _integer_rows(matrix):
    """Rows of the matrix after clearing denominators column by column."""
    rows = {}
    for j, column in matrix.columns.items():
        scale = 1
        for value in column.values():
            scale = lcm(scale, value.denominator)
        for i, value in column.items():
            rows.setdefault(i, {})[j] = value.numerator * (scale // value.denominator)
    return [row for row in rows.values() if row]


def bareiss_rank(matrix):
    """The rank by fraction-free elimination.

    Scaling columns does not change the rank, so the matrix is first made
    integral. Every step updates all remaining rows and divides exactly by
    the previous pivot.
    """
    rows = _integer_rows(matrix)
    rank = 0
    previous = 1
    while rows:
        position = min(range(len(rows)), key=lambda r: (len(rows[r]), min(rows[r])))
        pivot_row = rows.pop(position)
        c = min(pivot_row)
        p = pivot_row[c]
        updated = []
        for row in rows:
            a = row.get(c, 0)
            new = {}
            for k in set(row) | set(pivot_row):
                value = p * row.get(k, 0) - a * pivot_row.get(k, 0)
                if value:
                    new[k] = value // previous
            if new:
                updated.append(new)
        previous = p
        rank += 1
        rows = updated
    return rank


def _eliminate(rows, limit):
    """Incremental Gauss-Jordan elimination.

    Pivots are only taken in columns below ``limit``; columns at or above it
    are carried along (an augmented part).

    Returns
    -------
    ([(int, dict)], [dict])
        The pivot rows with their pivot columns, each normalized to 1 at the
        pivot and zero at every other pivot column, and the rows whose first
        ``limit`` columns reduced to zero.
    """
    pivots = []
    zero_rows = []
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        for c, pivot_row in pivots:
            a = row.get(c)
            if a:
                for k, v in pivot_row.items():
                    value = row.get(k, 0) - a * v
                    if value:
                        row[k] = value
                    else:
                        row.pop(k, None)
        candidates = [k for k in row if k < limit]
        if not candidates:
            zero_rows.append(row)
            continue
        c = min(candidates)
        scale = row[c]
        row = {k: v / scale for k, v in row.items()}
        for _, pivot_row in pivots:
            a = pivot_row.get(c)
            if a:
                for k, v in row.items():
                    value = pivot_row.get(k, 0) - a * v
                    if value:
                        pivot_row[k] = value
                    else:
                        pivot_row.pop(k, None)
        pivots.append((c, row))
    return pivots, zero_rows


def rref_rank(matrix):
    """The rank by Gauss-Jordan elimination, a cross-check for bareiss_rank."""
    pivots, _ = _eliminate(matrix.rows().values(), matrix.ncols)
    return len(pivots)


def kernel(matrix):
    """A basis of the null space, one dict {column: value} per vector.

    The basis is the standard one attached to the free columns, so it is
    independent of the row order.
    """
    rows = matrix.rows()
    pivots, _ = _eliminate([rows[i] for i in sorted(rows)], matrix.ncols)
    pivot_columns = {c for c, _ in pivots}
    basis = []
    for free in range(matrix.ncols):
        if free in pivot_columns:
            continue
        vector = {free: Fraction(1)}
        for c, row in pivots:
            value = row.get(free)
            if value:
                vector[c] = -value
        basis.append(vector)
    return basis


class LinearSolver:
    """Solve M x = b repeatedly for one matrix M.

    The rows of [M | I] are reduced once, giving E with E·M in reduced row
    echelon form; each solve is then a product with E.

    Parameters
    ----------
    matrix : SparseMatrix
        The matrix M.
    """

    def __init__(self, matrix):
        self.matrix = matrix
        n = matrix.ncols
        rows = matrix.rows()
        augmented = []
        for i in range(matrix.nrows):
            row = dict(rows.get(i, {}))
            row[n + i] = Fraction(1)
            augmented.append(row)
        pivots, zero_rows = _eliminate(augmented, n)
        self._pivots = [
            (c, {k - n: v for k, v in row.items() if k >= n}) for c, row in pivots
        ]
        self._conditions = [
            {k - n: v for k, v in row.items() if k >= n} for row in zero_rows
        ]
        self.rank = len(self._pivots)
        self.pivot_columns = [c for c, _ in self._pivots]

    @property
    def nullity(self):
        return self.matrix.ncols - self.rank

    def is_consistent(self, b):
        for condition in self._conditions:
            if sum((v * b.get(i, 0) for i, v in condition.items()), Fraction(0)):
                return False
        return True

    def solve(self, b):
        """A solution {column: value} with all free variables zero, or None.

        Parameters
        ----------
        b : {int: Fraction}
            The right-hand side by row.
        """
        if not self.is_consistent(b):
            return None
        x = {}
        for c, e in self._pivots:
            value = sum((v * b.get(i, 0) for i, v in e.items()), Fraction(0))
            if value:
                x[c] = value
        return x


def solve(matrix, b):
    return LinearSolver(matrix).solve(b)


def dense_rank(rows):
    """Rank of a dense list-of-lists matrix by plain Fraction elimination."""
    rows = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                factor = rows[r][c] / rows[rank][c]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank
