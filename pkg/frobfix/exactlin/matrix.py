from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from frobfix.errors import DimensionMismatch
from frobfix.exactlin.rational import RatLike, Vector, to_rat


@dataclass(frozen=True)
class RatMatrix:
    """Dense rows x cols matrix over Q, stored row-major."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RatLike]], cols: Optional[int] = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), width, tuple(to_rat(v) for r in rows for v in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, tuple(Fraction(0) for _ in range(rows * cols)))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.scalar(n, Fraction(1))

    @classmethod
    def scalar(cls, n: int, value: RatLike) -> "RatMatrix":
        s = to_rat(value)
        return cls(n, n, tuple(s if i == j else Fraction(0) for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Iterable[RatLike]) -> "RatMatrix":
        vals = tuple(to_rat(v) for v in values)
        return cls(len(vals), 1, vals)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RatLike]], rows: Optional[int] = None) -> "RatMatrix":
        if not columns:
            return cls.zeros(rows or 0, 0)
        height = len(columns[0])
        if any(len(c) != height for c in columns):
            raise DimensionMismatch("ragged columns")
        return cls.from_rows([[columns[j][i] for j in range(len(columns))] for i in range(height)])

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int) -> "RatMatrix":
        entries = [Fraction(0)] * (rows * cols)
        entries[i * cols + j] = Fraction(1)
        return cls(rows, cols, tuple(entries))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def get(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, tuple(self.get(i, j) for j in range(self.cols) for i in range(self.rows)))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatch(f"trace of a non-square {self.rows}x{self.cols} matrix")
        return sum((self.get(i, i) for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)

    def scale(self, value: RatLike) -> "RatMatrix":
        s = to_rat(value)
        return RatMatrix(self.rows, self.cols, tuple(s * v for v in self.entries))

    def _check_same_shape(self, other: "RatMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RatMatrix":
        return self.scale(-1)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            left = self.row(i)
            for j in range(other.cols):
                acc = Fraction(0)
                for k, a in enumerate(left):
                    if a:
                        acc += a * other.entries[k * other.cols + j]
                out.append(acc)
        return RatMatrix(self.rows, other.cols, tuple(out))

    def apply(self, x: Sequence[Fraction]) -> Vector:
        if len(x) != self.cols:
            raise DimensionMismatch(f"vector of length {len(x)} against {self.cols} columns")
        return (self @ RatMatrix.column(x)).entries


def hstack(*blocks: RatMatrix) -> RatMatrix:
    if not blocks:
        raise DimensionMismatch("nothing to stack")
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise DimensionMismatch("hstack needs equal row counts")
    return RatMatrix.from_rows([[v for b in blocks for v in b.row(i)] for i in range(rows)], cols=sum(b.cols for b in blocks))


def vstack(*blocks: RatMatrix) -> RatMatrix:
    if not blocks:
        raise DimensionMismatch("nothing to stack")
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise DimensionMismatch("vstack needs equal column counts")
    return RatMatrix(sum(b.rows for b in blocks), cols, tuple(v for b in blocks for v in b.entries))


def block_diagonal(blocks: Sequence[RatMatrix]) -> RatMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    entries = [Fraction(0)] * (rows * cols)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                entries[(r0 + i) * cols + c0 + j] = b.get(i, j)
        r0 += b.rows
        c0 += b.cols
    return RatMatrix(rows, cols, tuple(entries))


def permutation_matrix(perm: Sequence[int]) -> RatMatrix:
    """Matrix P with P[perm[i]][i] = 1, so P e_i = e_perm(i)."""
    n = len(perm)
    entries = [Fraction(0)] * (n * n)
    for i, p in enumerate(perm):
        entries[p * n + i] = Fraction(1)
    return RatMatrix(n, n, tuple(entries))
