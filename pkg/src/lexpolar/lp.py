"""Dense two-phase simplex over the rationals with Bland's rule.

Problems here are desk-sized (tens of rows and columns), so a plain tableau
is plenty.  The solver never compares against a tolerance: every pivot is
exact, and the pivoting rule rules out cycling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


def _pivot(T: list[list[Fraction]], z: list[Fraction], basis: list[int], r: int, c: int) -> None:
    row = T[r]
    p = row[c]
    if p != 1:
        T[r] = row = [x / p for x in row]
    support = [(j, b) for j, b in enumerate(row) if b]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                for j, b in support:
                    other[j] -= f * b
    f = z[c]
    if f:
        for j, b in support:
            z[j] -= f * b
    basis[r] = c


def _bland(T: list[list[Fraction]], z: list[Fraction], basis: list[int], ncols: int) -> str:
    """Minimise: reduced costs ``z`` (last entry holds -objective)."""
    while True:
        entering = next((j for j in range(ncols) if z[j] < 0), None)
        if entering is None:
            return OPTIMAL
        best = None
        for i, row in enumerate(T):
            a = row[entering]
            if a > 0:
                key = (row[-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, z, basis, best[1], entering)


def linprog_exact(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    *,
    free: Sequence[int] = (),
    maximize: bool = False,
) -> LPResult:
    """Solve ``min c.x`` s.t. ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``.

    Variables listed in ``free`` are unrestricted in sign.  With
    ``maximize=True`` the objective is maximised instead.  The returned
    ``x`` is a basic optimal solution; ties are broken by Bland's rule so
    the answer is deterministic.
    """
    nvar = len(c)
    cost = [Fraction(v) for v in c]
    if maximize:
        cost = [-v for v in cost]
    free_set = set(free)

    # column layout: one column per variable, plus a negative part for free ones
    neg_col = {}
    ncol = nvar
    for i in sorted(free_set):
        neg_col[i] = ncol
        ncol += 1
    n_ub = len(A_ub)
    slack0 = ncol
    ncol += n_ub
    struct_cols = ncol

    def expand(row: Sequence) -> list[Fraction]:
        out = [Fraction(0)] * struct_cols
        for j, v in enumerate(row):
            v = Fraction(v)
            out[j] = v
            if j in neg_col:
                out[neg_col[j]] = -v
        return out

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for k, (row, b) in enumerate(zip(A_ub, b_ub)):
        r = expand(row)
        r[slack0 + k] = Fraction(1)
        rows.append(r)
        rhs.append(Fraction(b))
    for row, b in zip(A_eq, b_eq):
        rows.append(expand(row))
        rhs.append(Fraction(b))
    if len(rows) != len(A_ub) + len(A_eq):
        raise ValueError("constraint matrix and right-hand side lengths differ")

    full_cost = [Fraction(0)] * struct_cols
    for j, v in enumerate(cost):
        full_cost[j] = v
        if j in neg_col:
            full_cost[neg_col[j]] = -v

    m = len(rows)
    if m == 0:
        if any(v < 0 for v in full_cost):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, tuple(Fraction(0) for _ in range(nvar)), Fraction(0))

    # phase 1: one artificial per row
    total = struct_cols + m
    T: list[list[Fraction]] = []
    for i, (r, b) in enumerate(zip(rows, rhs)):
        if b < 0:
            r = [-x for x in r]
            b = -b
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(r + art + [b])
    basis = [struct_cols + i for i in range(m)]
    z = [Fraction(0)] * (total + 1)
    for row in T:
        for j in range(struct_cols):
            z[j] -= row[j]
        z[-1] -= row[-1]
    _bland(T, z, basis, total)
    if z[-1] != 0:
        return LPResult(INFEASIBLE)

    # drive artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= struct_cols:
            j = next((j for j in range(struct_cols) if T[i][j] != 0), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, z, basis, i, j)
        i += 1
    T = [row[:struct_cols] + [row[-1]] for row in T]

    # phase 2
    z = full_cost + [Fraction(0)]
    for i, row in enumerate(T):
        cb = full_cost[basis[i]]
        if cb:
            z = [a - cb * b for a, b in zip(z, row)]
    status = _bland(T, z, basis, struct_cols)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)

    values = [Fraction(0)] * struct_cols
    for i, b in enumerate(basis):
        values[b] = T[i][-1]
    x = [values[j] - (values[neg_col[j]] if j in neg_col else 0) for j in range(nvar)]
    obj = -z[-1]
    if maximize:
        obj = -obj
    return LPResult(OPTIMAL, tuple(x), obj)


def find_feasible(
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    *,
    nvar: int,
    free: Sequence[int] = (),
) -> tuple[Fraction, ...] | None:
    """A feasible point of the constraint system, or None."""
    res = linprog_exact([0] * nvar, A_ub, b_ub, A_eq, b_eq, free=free)
    return res.x if res.status == OPTIMAL else None
