"""Dense exact matrices with 1-based indexing.

Entries may be ``Fraction``, ``GaussQ`` or ``Laurent`` values; anything that
supports ``+``, ``-``, ``*`` and truthiness works for the ring operations.
Rank and inversion additionally need division, so they are field-only.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class Matrix:
    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Sequence]):
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        self._hash = None

    @classmethod
    def zeros(cls, n: int, m: int | None = None, zero=ZERO) -> Matrix:
        m = n if m is None else m
        return cls([[zero] * m for _ in range(n)])

    @classmethod
    def identity(cls, n: int, one=ONE, zero=ZERO) -> Matrix:
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> Matrix:
        """Elementary matrix ``E_{i,j}`` of size ``n`` (1-based)."""
        rows = [[ZERO] * n for _ in range(n)]
        rows[i - 1][j - 1] = ONE
        return cls(rows)

    @classmethod
    def from_entries(cls, n: int, entries: dict[tuple[int, int], object], zero=ZERO) -> Matrix:
        rows = [[zero] * n for _ in range(n)]
        for (i, j), v in entries.items():
            rows[i - 1][j - 1] = v
        return cls(rows)

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.rows[i - 1][j - 1]

    @property
    def size(self) -> int:
        return self.nrows

    def entries(self) -> dict[tuple[int, int], object]:
        """Nonzero entries keyed by 1-based position."""
        return {(i + 1, j + 1): v for i, r in enumerate(self.rows) for j, v in enumerate(r) if v}

    def map(self, f: Callable) -> Matrix:
        return Matrix([[f(v) for v in r] for r in self.rows])

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: Matrix) -> Matrix:
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> Matrix:
        return Matrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        zero = _zero_like(self, other)
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for c in cols:
                acc = zero
                for k, a in nz:
                    b = c[k]
                    if b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    __mul__ = __matmul__

    def T(self) -> Matrix:
        return Matrix(zip(*self.rows)) if self.rows else Matrix([])

    def is_zero(self) -> bool:
        return not any(v for r in self.rows for v in r)

    def is_upper_triangular(self, strict: bool = False) -> bool:
        for i, r in enumerate(self.rows):
            for j, v in enumerate(r):
                if v and (j < i or (strict and j == i)):
                    return False
        return True

    def submatrix(self, a: int, b: int) -> Matrix:
        """Principal submatrix on the index interval ``[a, b]`` (1-based, inclusive)."""
        return Matrix([r[a - 1 : b] for r in self.rows[a - 1 : b]])

    def rank(self) -> int:
        return rank(self.rows)

    def inverse(self) -> Matrix:
        return Matrix(inverse(self.rows))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {self.entries()})"


def _zero_like(a: Matrix, b: Matrix):
    for r in a.rows:
        for v in r:
            return v * 0
    return ZERO


def rank(rows: Sequence[Sequence]) -> int:
    """Rank by Gaussian elimination over an exact field."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                q = f / p
                row_r = m[r]
                m[i] = [x - q * y if y else x for x, y in zip(m[i], row_r)]
        r += 1
        if r == len(m):
            break
    return r


def inverse(rows: Sequence[Sequence]) -> list[list]:
    """Gauss-Jordan inverse over an exact field."""
    n = len(rows)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [r[n:] for r in aug]
