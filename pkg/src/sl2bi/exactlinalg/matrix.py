"""Dense exact rational matrices.

A matrix is stored as integer numerators over one positive common
denominator, kept in lowest terms (the gcd of the denominator and all
numerators is 1).  Products and eliminations then run on plain integers
in the kernel backend.
"""
from fractions import Fraction
from itertools import chain
from math import gcd, lcm

from ._backend import kernels
from .rational import as_rational, format_rational, parse_rational


def _normalized(num, den):
    if den < 0:
        num = [[-x for x in row] for row in num]
        den = -den
    g = gcd(den, *chain.from_iterable(num))
    if g > 1:
        num = [[x // g for x in row] for row in num]
        den //= g
    return num, den


class Matrix:
    """Immutable dense matrix over the rationals.

    ``@`` is the matrix product; ``*`` and ``/`` take scalars.
    """

    __slots__ = ("rows", "cols", "_num", "_den", "_hash")

    def __init__(self, entries, cols=None):
        entries = [[as_rational(x) for x in row] for row in entries]
        rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if rows else 0
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged matrix")
        den = lcm(1, *(x.denominator for row in entries for x in row))
        num = [[x.numerator * (den // x.denominator) for x in row] for row in entries]
        self._set(rows, cols, *_normalized(num, den))

    def _set(self, rows, cols, num, den):
        self.rows = rows
        self.cols = cols
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, rows, cols, num, den):
        m = cls.__new__(cls)
        m._set(rows, cols, *_normalized(num, den))
        return m

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._raw(rows, cols, [[0] * cols for _ in range(rows)], 1)

    @classmethod
    def identity(cls, n):
        return cls.scalar(n, 1)

    @classmethod
    def scalar(cls, n, value):
        value = as_rational(value)
        num = [[0] * n for _ in range(n)]
        for i in range(n):
            num[i][i] = value.numerator
        return cls._raw(n, n, num, value.denominator)

    @classmethod
    def diag(cls, values):
        values = [as_rational(v) for v in values]
        n = len(values)
        m = [[Fraction(0)] * n for _ in range(n)]
        for i, v in enumerate(values):
            m[i][i] = v
        return cls(m, n)

    @classmethod
    def from_columns(cls, columns, rows=None):
        """Stack column vectors (``Matrix`` n x 1 or sequences) side by side."""
        columns = [c.column_values(0) if isinstance(c, Matrix) else [as_rational(x) for x in c] for c in columns]
        if not columns:
            if rows is None:
                raise ValueError("row count needed for an empty column list")
            return cls.zeros(rows, 0)
        n = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(n)], len(columns))

    @classmethod
    def hstack(cls, blocks):
        blocks = list(blocks)
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise ValueError("row counts differ")
        den = lcm(*(b._den for b in blocks))
        num = [[] for _ in range(rows)]
        for b in blocks:
            f = den // b._den
            for i in range(rows):
                num[i].extend(x * f for x in b._num[i])
        return cls._raw(rows, sum(b.cols for b in blocks), num, den)

    @classmethod
    def from_integer_rows(cls, num, den=1, cols=None):
        """Wrap integer numerators over ``den`` without copying checks."""
        rows = len(num)
        if cols is None:
            cols = len(num[0]) if rows else 0
        return cls._raw(rows, cols, [list(r) for r in num], den)

    # -- access -------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def denominator(self):
        return self._den

    def numerators(self):
        """Integer rows over ``self.denominator`` (do not mutate)."""
        return self._num

    def __getitem__(self, index):
        i, j = index
        return Fraction(self._num[i][j], self._den)

    def tolist(self):
        d = self._den
        return [[Fraction(x, d) for x in row] for row in self._num]

    def column_values(self, j):
        d = self._den
        return [Fraction(row[j], d) for row in self._num]

    def column(self, j):
        return Matrix._raw(self.rows, 1, [[row[j]] for row in self._num], self._den)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def row_values(self, i):
        d = self._den
        return [Fraction(x, d) for x in self._num[i]]

    def submatrix(self, row_idx, col_idx):
        row_idx, col_idx = list(row_idx), list(col_idx)
        num = [[self._num[i][j] for j in col_idx] for i in row_idx]
        return Matrix._raw(len(row_idx), len(col_idx), num, self._den)

    def permuted(self, order):
        """``P^-1 M P`` where ``P`` sends basis position k to ``order[k]``."""
        return self.submatrix(order, order)

    # -- arithmetic ---------------------------------------------------
    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def _combine(self, other, sign):
        self._check_same_shape(other)
        if self._den == other._den:
            num = [[x + sign * y for x, y in zip(r, s)] for r, s in zip(self._num, other._num)]
            return Matrix._raw(self.rows, self.cols, num, self._den)
        den = lcm(self._den, other._den)
        f, g = den // self._den, sign * (den // other._den)
        num = [[x * f + y * g for x, y in zip(r, s)] for r, s in zip(self._num, other._num)]
        return Matrix._raw(self.rows, self.cols, num, den)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return Matrix._raw(self.rows, self.cols, [[-x for x in r] for r in self._num], self._den)

    def __mul__(self, scalar):
        if isinstance(scalar, Matrix):
            return NotImplemented
        s = as_rational(scalar)
        num = [[x * s.numerator for x in r] for r in self._num]
        return Matrix._raw(self.rows, self.cols, num, self._den * s.denominator)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = as_rational(scalar)
        if s == 0:
            raise ZeroDivisionError("matrix divided by zero")
        return self * (1 / s)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        num = kernels.matmul(self._num, other._num, other.cols)
        return Matrix._raw(self.rows, other.cols, num, self._den * other._den)

    def __pow__(self, k):
        if self.rows != self.cols or k < 0:
            raise ValueError("powers need a square matrix and k >= 0")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def transpose(self):
        num = [list(c) for c in zip(*self._num)] if self.rows else []
        return Matrix._raw(self.cols, self.rows, num if self.cols else [], self._den)

    T = property(transpose)

    def kron(self, other):
        num = []
        for r in self._num:
            for s in other._num:
                num.append([x * y for x in r for y in s])
        return Matrix._raw(self.rows * other.rows, self.cols * other.cols, num, self._den * other._den)

    # -- predicates and summaries ------------------------------------
    def trace(self):
        return Fraction(sum(self._num[i][i] for i in range(min(self.rows, self.cols))), self._den)

    def is_zero(self):
        return not any(any(r) for r in self._num)

    def is_square(self):
        return self.rows == self.cols

    def is_diagonal(self):
        return all(x == 0 for i, r in enumerate(self._num) for j, x in enumerate(r) if i != j)

    def diagonal(self):
        d = self._den
        return [Fraction(self._num[i][i], d) for i in range(min(self.rows, self.cols))]

    def scalar_value(self):
        """The scalar ``c`` when ``self == c * I``, else None."""
        if not self.is_square():
            return None
        if self.rows == 0:
            return Fraction(0)
        c = self._num[0][0]
        for i, r in enumerate(self._num):
            for j, x in enumerate(r):
                if x != (c if i == j else 0):
                    return None
        return Fraction(c, self._den)

    def nonzero_support(self):
        return [[x != 0 for x in r] for r in self._num]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._den == other._den and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._den, tuple(map(tuple, self._num))))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self.tolist())
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    # -- serialization ------------------------------------------------
    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_rational(x) for x in row] for row in self.tolist()],
        }

    @classmethod
    def from_json(cls, data):
        entries = [[parse_rational(x) for x in row] for row in data["entries"]]
        return cls(entries, data["cols"])


def anticommutator(a, b):
    return a @ b + b @ a


def commutator(a, b):
    return a @ b - b @ a
