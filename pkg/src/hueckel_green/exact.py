"""Dense matrices over the rationals.

`ExactMatrix` is the carrier for every Hamiltonian and closed-form Green's
function in the package.  Entries are `fractions.Fraction`, which keeps them
in lowest terms with a positive denominator for free.  Alongside the type
live the exact routines the engines need: fraction-free (Bareiss)
determinants, Gauss-Jordan inversion and a single-system solve.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import SingularMatrix

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rational(value) -> Fraction:
    """Coerce ints, strings like "p/q" and Fractions; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


class ExactMatrix:
    """Immutable dense matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Sequence[Fraction]):
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        data = [as_rational(x) for x in entries]
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0:
            raise ValueError("no rows")
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        data = [_ZERO] * (n * n)
        for i in range(n):
            data[i * n + i] = _ONE
        return cls(n, n, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [_ZERO] * (rows * cols))

    def get(self, i: int, j: int) -> Fraction:
        """Entry at 0-based (i, j)."""
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return self._data[i * self.cols + j]

    def row(self, i: int) -> list[Fraction]:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in self.row(i)] for i in range(self.rows)])

    def transpose(self) -> "ExactMatrix":
        data = [self._data[i * self.cols + j]
                for j in range(self.cols) for i in range(self.rows)]
        return ExactMatrix(self.cols, self.rows, data)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        n = self.rows
        return all(self._data[i * n + j] == self._data[j * n + i]
                   for i in range(n) for j in range(i + 1, n))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [-x for x in self._data])

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExactMatrix) and self.rows == other.rows
                and self.cols == other.cols and self._data == other._data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self._data)))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        n, k, m = self.rows, self.cols, other.cols
        out = [_ZERO] * (n * m)
        for i in range(n):
            ri = self.row(i)
            acc = [_ZERO] * m
            for t in range(k):
                a = ri[t]
                if a:
                    orow = other.row(t)
                    for j in range(m):
                        b = orow[j]
                        if b:
                            acc[j] += a * b
            out[i * m:(i + 1) * m] = acc
        return ExactMatrix(n, m, out)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


def mat_vec(m: ExactMatrix, v: Sequence[Fraction]) -> list[Fraction]:
    """Exact matrix-vector product."""
    if m.cols != len(v):
        raise ValueError("shape mismatch")
    out = []
    for i in range(m.rows):
        row = m.row(i)
        out.append(sum((a * b for a, b in zip(row, v) if a and b), _ZERO))
    return out


def det_fraction_free(m: ExactMatrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting.

    All divisions are exact, so the result is exact for any rational input.
    Integer matrices stay in integer arithmetic throughout.
    """
    if m.rows != m.cols:
        raise ValueError("determinant of non-square matrix")
    n = m.rows
    if all(x.denominator == 1 for x in m._data):
        a = [[int(x) for x in m.row(i)] for i in range(n)]
    else:
        a = [list(m.row(i)) for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return _ZERO
        pivot = a[k][k]
        for i in range(k + 1, n):
            rik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                num = pivot * rowi[j] - rik * rowk[j]
                if isinstance(num, int):
                    rowi[j] = num // prev
                else:
                    rowi[j] = num / prev
            rowi[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1])


def solve_exact(m: ExactMatrix, rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve m x = rhs exactly (Gaussian elimination, first-nonzero pivoting)."""
    if m.rows != m.cols or m.rows != len(rhs):
        raise ValueError("shape mismatch")
    n = m.rows
    a = [list(m.row(i)) + [as_rational(rhs[i])] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            raise SingularMatrix("exactly singular", n=n)
        a[k], a[piv] = a[piv], a[k]
        pk = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k]
            if f:
                f = f / pk
                for j in range(k, n + 1):
                    a[i][j] -= f * a[k][j]
    x = [_ZERO] * n
    for i in range(n - 1, -1, -1):
        s = a[i][n] - sum((a[i][j] * x[j] for j in range(i + 1, n) if a[i][j]), _ZERO)
        x[i] = s / a[i][i]
    return x


def inverse_exact(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse by Gauss-Jordan elimination."""
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    a = [list(m.row(i)) for i in range(n)]
    inv = [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            raise SingularMatrix("exactly singular", n=n)
        a[k], a[piv] = a[piv], a[k]
        inv[k], inv[piv] = inv[piv], inv[k]
        pk = a[k][k]
        if pk != 1:
            a[k] = [x / pk for x in a[k]]
            inv[k] = [x / pk for x in inv[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[k])]
    return ExactMatrix.from_rows(inv)
