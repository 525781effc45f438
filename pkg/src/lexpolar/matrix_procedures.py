"""Matrix procedures linking orthogonal and stochastic representatives.

``lp_decompose`` writes a matrix with lexicographically positive columns as
``L P`` with ``L`` unit lower-triangular and ``P`` nonnegative.  Row
normalising that ``P`` turns an orthogonal representative of a semispace
into a full-rank stochastic one; Gram-Schmidt goes back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    PreconditionError,
    RMatrix,
    canonical_scale,
    first_non_lex_positive_column,
    gram_schmidt,
    mat_cols_lex_positive,
)
from .lex_polarity import check_semispace_matrix, semispace_equal


@dataclass(frozen=True)
class LPDecomposition:
    L: RMatrix
    P: RMatrix

    def product(self) -> RMatrix:
        return self.L @ self.P


def _check_unit_lower(L: RMatrix) -> bool:
    return all(
        L[i, j] == (1 if i == j else L[i, j] if j < i else 0)
        for i in range(L.m)
        for j in range(L.n)
    )


def lp_decompose(A: RMatrix, shift: int = 0) -> LPDecomposition:
    """Factor ``A = L P`` with ``L`` unit lower-triangular and ``P >= 0``.

    Row ``i`` of ``P`` is built as ``a_i - sum_j l_ij p_j`` for ``j = i-1``
    down to ``1``.  At each ``j`` the coefficient is the integer closest to
    zero that keeps the remainder nonnegative on the support of ``p_j``;
    it stays 0 when nothing needs fixing.  ``shift`` pushes every forced
    (negative) coefficient further down by that amount, which walks along
    the family of valid factorisations.
    """
    if not A.is_square():
        raise PreconditionError(f"expected a square matrix, got {A.m}x{A.n}")
    bad = first_non_lex_positive_column(A)
    if bad is not None:
        raise PreconditionError(f"column {bad + 1} is not lexicographically positive")
    if shift < 0:
        raise ValueError("shift must be nonnegative")
    n = A.n
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    Q: list[list[Fraction]] = []
    for i in range(n):
        r = list(A.rows[i])
        for j in reversed(range(i)):
            q = Q[j]
            supp = [c for c in range(n) if q[c] != 0]
            if not supp:
                continue
            bound = min(r[c] / q[c] for c in supp)
            l = min(0, math.floor(bound))
            if l < 0:
                l -= shift
            if l:
                r = [x - l * y for x, y in zip(r, q)]
            L[i][j] = Fraction(l)
        if any(x < 0 for x in r):
            raise AssertionError(f"decomposition left a negative entry in row {i + 1}")
        Q.append(r)
    dec = LPDecomposition(RMatrix(L), RMatrix(Q))
    if dec.product() != A or not _check_unit_lower(dec.L):
        raise AssertionError("decomposition does not reproduce the input")
    if any(not any(c) for c in zip(*dec.P.rows)):
        raise AssertionError("decomposition produced a zero column")
    return dec


def row_normalise(M: RMatrix) -> RMatrix:
    """Divide every row by its sum."""
    sums = [sum(r, Fraction(0)) for r in M.rows]
    if any(s == 0 for s in sums):
        raise PreconditionError("a row sums to zero and cannot be normalised")
    return M.scale_rows([1 / s for s in sums])


def stochastic_from_orthogonal(A: RMatrix, shift: int = 0) -> RMatrix:
    """A full-rank stochastic matrix with the same semispace as ``A``."""
    check_semispace_matrix(A)
    Q = lp_decompose(A, shift).P
    if any(not any(r) for r in Q.rows):
        raise AssertionError("decomposition produced a zero row")
    P = row_normalise(Q)
    if not P.is_full_rank_stochastic():
        raise AssertionError("normalised factor is not full-rank stochastic")
    return P


def gs_canonical(M: RMatrix) -> RMatrix:
    """Gram-Schmidt on the rows in order, then canonical positive scaling.

    The rows must be linearly independent.  Because Gram-Schmidt acts by a
    unit lower-triangular matrix, the lexicographic sign of ``M g`` is
    preserved for every ``g``.
    """
    rows = gram_schmidt(M.rows)
    if any(not any(r) for r in rows):
        raise PreconditionError("rows are linearly dependent")
    return RMatrix(canonical_scale(r) for r in rows)


def orthogonal_from_stochastic(P: RMatrix) -> RMatrix:
    """Canonical orthogonal matrix with the same semispace as ``P``."""
    if not P.is_square():
        raise PreconditionError(f"expected a square matrix, got {P.m}x{P.n}")
    if not P.is_stochastic():
        raise PreconditionError("some row is not a probability mass function")
    if not P.is_full_rank():
        raise PreconditionError("stochastic matrix is rank deficient")
    A = gs_canonical(P)
    if not A.is_row_orthogonal() or not mat_cols_lex_positive(A):
        raise AssertionError("Gram-Schmidt output lost orthogonality or lex-positivity")
    return A


def equiv_class_test(P: RMatrix, A: RMatrix) -> bool:
    """Does ``P`` belong to ``[A]◊``, the matrices with the same semispace as ``A``?"""
    check_semispace_matrix(A)
    return semispace_equal(orthogonal_from_stochastic(P), A)
