"""Immutable exact matrices and the elimination toolkit.

Everything here is plain Gauss-Jordan over a Field context: reduced row
echelon form with deterministic (first nonzero) pivoting, and the canonical
bases and factorizations read off from it. Degenerate shapes (0-by-n,
n-by-0, 0-by-0) are legal throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import (
    FieldMismatchError,
    NotSquareError,
    ParseError,
    ShapeMismatchError,
    SingularMatrixError,
)
from .fields import PrimeField, Rationals


def _coerce(field, v):
    if isinstance(field, Rationals):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int) and not isinstance(v, bool):
            return Fraction(v)
        raise TypeError("Q entries must be Fraction or int, got %r" % (v,))
    if isinstance(v, int) and not isinstance(v, bool):
        return v % field.p
    raise TypeError("F_p entries must be int, got %r" % (v,))


class Matrix:
    """A rows-by-cols matrix over a Field, stored as a tuple of row tuples."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, entries, cols=None):
        entries = tuple(tuple(_coerce(field, v) for v in row) for row in entries)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise ShapeMismatchError("ragged rows")
            if cols is not None and cols != width:
                raise ShapeMismatchError("cols=%d but rows have %d entries" % (cols, width))
            cols = width
        else:
            if cols is None:
                cols = 0
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, field, entries, cols):
        """Internal constructor for already-canonical entries."""
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "rows", len(entries))
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", entries)
        return m

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one, field.zero
        rows = tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)
        )
        return cls._raw(field, rows, n)

    @classmethod
    def zeros(cls, field, rows, cols):
        zero = field.zero
        return cls._raw(field, tuple((zero,) * cols for _ in range(rows)), cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.cols, self.entries))

    def __repr__(self):
        return "Matrix(%r, %dx%d, %r)" % (self.field, self.rows, self.cols, self.entries)

    def _check_field(self, other):
        if self.field != other.field:
            raise FieldMismatchError(
                "mixed fields %r and %r" % (self.field, other.field)
            )

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatchError(
                "add %dx%d to %dx%d" % (self.rows, self.cols, other.rows, other.cols)
            )
        add = self.field.add
        rows = tuple(
            tuple(add(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )
        return Matrix._raw(self.field, rows, self.cols)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        neg = self.field.neg
        rows = tuple(tuple(neg(a) for a in row) for row in self.entries)
        return Matrix._raw(self.field, rows, self.cols)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeMismatchError(
                "multiply %dx%d by %dx%d"
                % (self.rows, self.cols, other.rows, other.cols)
            )
        dot = self.field.dot
        bt = tuple(zip(*other.entries)) if other.entries else ((),) * other.cols
        if other.cols == 0 or self.rows == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        if self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        rows = tuple(tuple(dot(row, col) for col in bt) for row in self.entries)
        return Matrix._raw(self.field, rows, other.cols)

    def __pow__(self, k):
        if not self.is_square:
            raise NotSquareError("power of a %dx%d matrix" % (self.rows, self.cols))
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a natural number")
        result = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def transpose(self):
        rows = tuple(zip(*self.entries)) if self.entries else ((),) * self.cols
        if self.rows == 0:
            rows = tuple(() for _ in range(self.cols))
        return Matrix._raw(self.field, tuple(tuple(r) for r in rows), self.rows)

    def scale(self, c):
        c = _coerce(self.field, c)
        mul = self.field.mul
        rows = tuple(tuple(mul(c, a) for a in row) for row in self.entries)
        return Matrix._raw(self.field, rows, self.cols)

    def is_zero(self):
        zero = self.field.zero
        return all(a == zero for row in self.entries for a in row)

    def take_rows(self, indices):
        rows = tuple(self.entries[i] for i in indices)
        return Matrix._raw(self.field, rows, self.cols)

    def take_cols(self, indices):
        rows = tuple(tuple(row[j] for j in indices) for row in self.entries)
        return Matrix._raw(self.field, rows, len(indices))

    def to_json(self):
        enc = self.field.scalar_to_json
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[enc(a) for a in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, field, obj):
        if isinstance(obj, list):
            # bare array-of-rows form, shape inferred
            obj = {"rows": len(obj), "cols": len(obj[0]) if obj else 0, "entries": obj}
        if not isinstance(obj, dict):
            raise ParseError("matrix must be an object or array of rows")
        try:
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError) as exc:
            raise ParseError("matrix needs rows, cols, entries") from exc
        if not isinstance(entries, list) or len(entries) != rows:
            raise ParseError("entries has %r rows, expected %r" % (len(entries), rows))
        dec = field.scalar_from_json
        out = []
        for row in entries:
            if not isinstance(row, list) or len(row) != cols:
                raise ParseError("row of length %r, expected %r" % (len(row), cols))
            out.append(tuple(dec(a) for a in row))
        return cls._raw(field, tuple(out), cols)


def hstack(a, b):
    a._check_field(b)
    if a.rows != b.rows:
        raise ShapeMismatchError("hstack %d rows with %d rows" % (a.rows, b.rows))
    rows = tuple(ra + rb for ra, rb in zip(a.entries, b.entries))
    if a.rows == 0:
        return Matrix.zeros(a.field, 0, a.cols + b.cols)
    return Matrix._raw(a.field, rows, a.cols + b.cols)


def vstack(a, b):
    a._check_field(b)
    if a.cols != b.cols:
        raise ShapeMismatchError("vstack %d cols with %d cols" % (a.cols, b.cols))
    return Matrix._raw(a.field, a.entries + b.entries, a.cols)


def block_diag(a, b):
    a._check_field(b)
    zero = a.field.zero
    top = tuple(row + (zero,) * b.cols for row in a.entries)
    bottom = tuple((zero,) * a.cols + row for row in b.entries)
    return Matrix._raw(a.field, top + bottom, a.cols + b.cols)


def rref(m):
    """Reduced row echelon form.

    Returns (R, pivots, rank) with R a Matrix of the same shape, pivots the
    tuple of pivot column indices, and rank = len(pivots). Pivoting is
    deterministic: first row with a nonzero entry in the current column.
    """
    field = m.field
    zero = field.zero
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv_p = field.inv(rows[r][c])
        rows[r] = [field.mul(inv_p, v) for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != zero:
                factor = rows[i][c]
                rows[i] = [
                    field.sub(a, field.mul(factor, b))
                    for a, b in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    reduced = Matrix._raw(field, tuple(tuple(row) for row in rows), ncols)
    return reduced, tuple(pivots), len(pivots)


def rank(m):
    return rref(m)[2]


def kernel_basis(m):
    """Canonical kernel basis as a cols-by-nullity matrix.

    Column j of the result is the standard rref basis vector for the j-th
    free column (free entry set to one, pivot entries filled from the
    reduced rows, ordered by ascending free column index).
    """
    field = m.field
    reduced, pivots, rk = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    cols = []
    for fc in free:
        v = [field.zero] * m.cols
        v[fc] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(reduced.entries[i][fc])
        cols.append(v)
    rows = tuple(tuple(col[i] for col in cols) for i in range(m.cols))
    return Matrix._raw(field, rows, len(free))


def image_basis(m):
    """Canonical image basis: the pivot columns of m itself (rows-by-rank)."""
    _, pivots, _ = rref(m)
    return m.take_cols(pivots)


@dataclass(frozen=True)
class RankFactorization:
    left: Matrix
    right: Matrix
    rank: int


def full_rank_factorization(m):
    """m = left * right with left of full column rank, right of full row rank.

    left is the pivot columns of m (rows-by-rank), right the nonzero rows of
    rref(m) (rank-by-cols); the pivot columns of right form an identity
    block, which later constructions rely on.
    """
    reduced, pivots, rk = rref(m)
    left = m.take_cols(pivots)
    right = reduced.take_rows(range(rk))
    return RankFactorization(left=left, right=right, rank=rk)


def invert_matrix(m):
    """Exact inverse of a square matrix; SingularMatrixError if rank drops."""
    if not m.is_square:
        raise NotSquareError("invert a %dx%d matrix" % (m.rows, m.cols))
    n = m.rows
    aug = hstack(m, Matrix.identity(m.field, n))
    reduced, pivots, rk = rref(aug)
    if rk < n or any(p >= n for p in pivots):
        raise SingularMatrixError("matrix of rank %d is singular" % rank(m))
    return reduced.take_cols(range(n, 2 * n))
