"""Exact rational gambles, matrices and lexicographic comparisons.

Everything is built on :class:`fractions.Fraction`; there is no floating
point anywhere in the kernel.  Gambles and matrices are immutable.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")


class DimensionError(ValueError):
    """Operands have incompatible dimensions."""


class PreconditionError(ValueError):
    """An input violates the documented precondition of an operation."""


def to_rational(x: Scalar) -> Fraction:
    """Convert ``x`` to a Fraction, refusing floats and malformed strings."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        if not _RATIONAL_RE.match(x):
            raise ValueError(f"malformed rational {x!r}")
        num, _, den = x.replace(" ", "").partition("/")
        if den and int(den) == 0:
            raise ValueError(f"zero denominator in {x!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class LexOrder(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Gamble:
    """A point of R^n with exact rational coordinates."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable[Scalar]):
        values = tuple(to_rational(c) for c in coords)
        if not values:
            raise DimensionError("a gamble needs at least one coordinate")
        object.__setattr__(self, "coords", values)

    @classmethod
    def zero(cls, n: int) -> Gamble:
        return cls([0] * n)

    @classmethod
    def minus_one(cls, n: int) -> Gamble:
        return cls([-1] * n)

    @classmethod
    def unit(cls, n: int, i: int) -> Gamble:
        """The indicator ``e^i``; ``i`` is 0-based."""
        if not 0 <= i < n:
            raise IndexError(f"unit index {i} out of range for dimension {n}")
        return cls([1 if k == i else 0 for k in range(n)])

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self) -> str:
        return "Gamble(" + ", ".join(str(c) for c in self.coords) + ")"

    def _check(self, other: Gamble) -> None:
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: Gamble) -> Gamble:
        self._check(other)
        return Gamble(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: Gamble) -> Gamble:
        self._check(other)
        return Gamble(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> Gamble:
        return Gamble(-a for a in self.coords)

    def scale(self, lam: Scalar) -> Gamble:
        lam = to_rational(lam)
        return Gamble(lam * a for a in self.coords)

    def __mul__(self, lam: Scalar) -> Gamble:
        return self.scale(lam)

    __rmul__ = __mul__

    def dot(self, other: Gamble) -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def leq(self, other: Gamble) -> bool:
        """Componentwise ``self <= other``."""
        self._check(other)
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def lt(self, other: Gamble) -> bool:
        """``self <= other`` and ``self != other``."""
        return self.leq(other) and self != other

    def total(self) -> Fraction:
        return sum(self.coords, Fraction(0))


def inner(g: Gamble, f: Gamble) -> Fraction:
    return g.dot(f)


def vec_lex_cmp(g: Sequence[Scalar], f: Sequence[Scalar]) -> LexOrder:
    """Compare two vectors in the lexicographic order.

    The first index at which they differ decides.
    """
    if len(g) != len(f):
        raise DimensionError(f"dimension mismatch: {len(g)} vs {len(f)}")
    for a, b in zip(g, f):
        if a != b:
            return LexOrder.LESS if a < b else LexOrder.GREATER
    return LexOrder.EQUAL


def lex_sign(v: Iterable[Fraction]) -> int:
    """Sign of the first nonzero entry (0 for the zero vector)."""
    for x in v:
        if x:
            return 1 if x > 0 else -1
    return 0


def lex_positive(v: Iterable[Fraction]) -> bool:
    return lex_sign(v) > 0


def canonical_scale(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale positively so the first nonzero entry has absolute value 1."""
    for x in v:
        if x:
            a = abs(x)
            return tuple(y / a for y in v)
    return tuple(v)


def primitive(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Positive multiple of ``v`` with coprime integer entries."""
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    return tuple(Fraction(x // g) for x in ints)


@dataclass(frozen=True)
class RMatrix:
    """An exact rational m x n matrix stored row-major."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        grid = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if not grid or not grid[0]:
            raise DimensionError("a matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(r) != width for r in grid):
            raise DimensionError("ragged matrix rows")
        object.__setattr__(self, "rows", grid)

    @classmethod
    def identity(cls, n: int) -> RMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_gambles(cls, gambles: Sequence[Gamble]) -> RMatrix:
        return cls([g.coords for g in gambles])

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def is_square(self) -> bool:
        return self.m == self.n

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"RMatrix([{body}])"

    def row(self, i: int) -> Gamble:
        return Gamble(self.rows[i])

    def col(self, j: int) -> Gamble:
        return Gamble(r[j] for r in self.rows)

    def columns(self) -> list[Gamble]:
        return [self.col(j) for j in range(self.n)]

    def transpose(self) -> RMatrix:
        return RMatrix(zip(*self.rows))

    def select_columns(self, cols: Sequence[int]) -> RMatrix:
        return RMatrix([[r[j] for j in cols] for r in self.rows])

    def apply(self, g: Gamble | Sequence[Fraction]) -> tuple[Fraction, ...]:
        """The product ``A g`` as a plain tuple (may be non-square)."""
        if len(g) != self.n:
            raise DimensionError(f"cannot apply {self.m}x{self.n} matrix to a {len(g)}-vector")
        return tuple(sum((a * b for a, b in zip(r, g)), Fraction(0)) for r in self.rows)

    def __matmul__(self, other: RMatrix) -> RMatrix:
        if self.n != other.m:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return RMatrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.rows]
        )

    def scale_rows(self, factors: Sequence[Scalar]) -> RMatrix:
        return RMatrix([[to_rational(f) * x for x in r] for f, r in zip(factors, self.rows)])

    def rank(self) -> int:
        return rank(self.rows)

    # predicates -----------------------------------------------------------

    def is_full_rank(self) -> bool:
        return self.rank() == min(self.m, self.n)

    def is_row_orthogonal(self) -> bool:
        """Pairwise orthogonal rows, none of them zero."""
        rs = self.rows
        for i, r in enumerate(rs):
            if not any(r):
                return False
            for s in rs[i + 1:]:
                if sum((a * b for a, b in zip(r, s)), Fraction(0)) != 0:
                    return False
        return True

    def is_stochastic(self) -> bool:
        return all(all(x >= 0 for x in r) and sum(r, Fraction(0)) == 1 for r in self.rows)

    def is_full_rank_stochastic(self) -> bool:
        return self.is_stochastic() and self.is_full_rank()

    def canonical(self) -> RMatrix:
        """Rows scaled positively so each first nonzero entry is +-1."""
        return RMatrix(canonical_scale(r) for r in self.rows)


def mat_cols_lex_positive(A: RMatrix) -> bool:
    """Every column is lexicographically greater than the zero vector."""
    if not A.is_square():
        raise DimensionError(f"expected a square matrix, got {A.m}x{A.n}")
    return all(lex_sign(c) > 0 for c in zip(*A.rows))


def mat_cols_lex_nonneg(A: RMatrix) -> bool:
    """Every column is lexicographically greater than or equal to zero."""
    if not A.is_square():
        raise DimensionError(f"expected a square matrix, got {A.m}x{A.n}")
    return all(lex_sign(c) >= 0 for c in zip(*A.rows))


def first_non_lex_positive_column(A: RMatrix) -> int | None:
    for j, c in enumerate(zip(*A.rows)):
        if lex_sign(c) <= 0:
            return j
    return None


# elimination helpers ------------------------------------------------------


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    M = [list(map(Fraction, r)) for r in rows]
    if not M:
        return [], []
    width = len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(width):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [x / piv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], width: int) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : M x = 0}``."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(width)) for i in range(width)]
    R, pivots = rref(rows)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * width
        x[f] = Fraction(1)
        for r, p in zip(R, pivots):
            x[p] = -r[f]
        basis.append(tuple(x))
    return basis


def in_span(v: Sequence[Fraction], rows: Sequence[Sequence[Fraction]]) -> bool:
    if not any(v):
        return True
    if not rows:
        return False
    return rank(list(rows) + [v]) == rank(rows)


def gram_schmidt(rows: Sequence[Sequence[Fraction]], drop_dependent: bool = False) -> list[tuple[Fraction, ...]]:
    """Unnormalised Gram-Schmidt over the rationals, in row order.

    Each output row equals the input row minus its projection on the
    previous outputs, so the transformation is unit lower-triangular.
    A dependent row yields a zero row, or is dropped if requested.
    """
    out: list[tuple[Fraction, ...]] = []
    norms: list[Fraction] = []
    for r in rows:
        v = [Fraction(x) for x in r]
        for u, nu in zip(out, norms):
            if nu == 0:
                continue
            c = sum((a * b for a, b in zip(v, u)), Fraction(0)) / nu
            if c:
                v = [a - c * b for a, b in zip(v, u)]
        nv = sum((a * a for a in v), Fraction(0))
        if nv == 0 and drop_dependent:
            continue
        out.append(tuple(v))
        norms.append(nv)
    return out
