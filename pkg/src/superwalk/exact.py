"""Dense matrices of unbounded Python integers.

Everything here is exact: entries are plain ``int`` objects, so powers of a
Laplacian can grow past any machine word without wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotSquare


@dataclass(frozen=True)
class IntMatrix:
    """Immutable row-major integer matrix.

    Zero-sized dimensions are allowed (the odd Laplacian of an edgeless graph
    is 0 x 0).
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return mat_mul(self, other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)


def identity(n: int) -> IntMatrix:
    if n < 0:
        raise ValueError("identity size must be nonnegative")
    return IntMatrix.diagonal([1] * n)


def transpose(m: IntMatrix) -> IntMatrix:
    if m.rows == 0:
        return IntMatrix.zeros(m.cols, 0)
    return IntMatrix(m.cols, m.rows, tuple(zip(*m.entries)))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    bt = transpose(b).entries
    return IntMatrix(
        a.rows,
        b.cols,
        tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a.entries),
    )


def mat_pow(m: IntMatrix, k: int) -> IntMatrix:
    """Return ``m**k`` by binary exponentiation.

    Uses floor(log2 k) squarings plus popcount(k) - 1 extra products.
    """
    if not m.is_square:
        raise NotSquare(f"cannot raise a {m.rows}x{m.cols} matrix to a power")
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    result: IntMatrix | None = None
    base = m
    while k:
        if k & 1:
            result = base if result is None else mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return identity(m.rows) if result is None else result


def mat_vec(m: IntMatrix, v: Sequence[int]) -> list[int]:
    if m.cols != len(v):
        raise DimensionMismatch(f"cannot apply a {m.rows}x{m.cols} matrix to a vector of length {len(v)}")
    return [sum(x * y for x, y in zip(row, v)) for row in m.entries]


def trace(m: IntMatrix) -> int:
    if not m.is_square:
        raise NotSquare(f"trace of a non-square {m.rows}x{m.cols} matrix")
    return sum(m.entries[i][i] for i in range(m.rows))


def max_abs_entry(m: IntMatrix) -> int:
    return max((abs(x) for r in m.entries for x in r), default=0)


def max_abs_row_sum(m: IntMatrix) -> int:
    """Infinity norm: the largest row sum of absolute values."""
    return max((sum(abs(x) for x in r) for r in m.entries), default=0)
