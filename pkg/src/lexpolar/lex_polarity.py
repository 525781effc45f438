"""Lexicographic polarity between gamble cones and sets of matrices.

``K♦`` collects the square matrices sending every member of ``K`` to a
lexicographically positive vector; ``𝒜◊`` collects the gambles that every
matrix of ``𝒜`` sends to a lexicographically positive vector.  Both sets
are infinite in general, so they are handled through membership tests.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cones import CoherenceCertificate, GeneratorCone, is_coherent_desirable, member_posi
from .exact import (
    DimensionError,
    Gamble,
    PreconditionError,
    RMatrix,
    lex_sign,
    mat_cols_lex_positive,
)
from .lp import find_feasible

MAX_LPOSI_DIM = 6


@dataclass(frozen=True)
class SemispaceFamily:
    """``{g : A g >_L 0 for every A}``, an intersection of semispaces."""

    dim: int
    matrices: tuple[RMatrix, ...]

    def __init__(self, dim: int, matrices: Iterable[RMatrix]):
        ms = tuple(matrices)
        if not ms:
            raise ValueError("a semispace family needs at least one matrix")
        for A in ms:
            if A.shape != (dim, dim):
                raise DimensionError(f"expected {dim}x{dim} matrices, got {A.m}x{A.n}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "matrices", ms)

    def __contains__(self, g: Gamble) -> bool:
        return lozenge_member(self, g)


@dataclass(frozen=True)
class LCredalWitness:
    """Intensional description of an L-credal set.

    The set is the full-rank stochastic matrices ``P`` with ``P g >_L 0``
    for every defining gamble (and hence for every nonzero ``g >= 0``).
    ``sample_members`` lists some explicit members.
    """

    dim: int
    defining_gambles: tuple[Gamble, ...]
    sample_members: tuple[RMatrix, ...] = ()

    def __init__(self, dim: int, defining_gambles: Iterable[Gamble], sample_members: Iterable[RMatrix] = ()):
        gs = tuple(defining_gambles)
        ps = tuple(sample_members)
        for g in gs:
            if g.dim != dim:
                raise DimensionError(f"defining gamble {g} does not live in R^{dim}")
        for P in ps:
            if P.shape != (dim, dim) or not P.is_full_rank_stochastic():
                raise ValueError(f"sample member {P} is not a full-rank stochastic {dim}x{dim} matrix")
            bad = next((g for g in gs if lex_sign(P.apply(g)) <= 0), None)
            if bad is not None:
                raise ValueError(f"sample member {P} does not rank {bad} positively")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "defining_gambles", gs)
        object.__setattr__(self, "sample_members", ps)

    def cone(self) -> GeneratorCone:
        """The coherent cone ``posi(defining gambles ∪ {e^i})``."""
        n = self.dim
        return GeneratorCone(n, list(self.defining_gambles) + [Gamble.unit(n, i) for i in range(n)])

    @functools.cached_property
    def _empty(self) -> bool:
        return member_posi(self.cone(), Gamble.zero(self.dim))

    def is_empty(self) -> bool:
        """True when no full-rank stochastic matrix ranks every defining gamble positively."""
        return self._empty

    def contains(self, P: RMatrix) -> bool:
        return (
            P.shape == (self.dim, self.dim)
            and P.is_full_rank_stochastic()
            and all(lex_sign(P.apply(g)) > 0 for g in self.defining_gambles)
        )


def _matrices(F: SemispaceFamily | Iterable[RMatrix]) -> tuple[RMatrix, ...]:
    return F.matrices if isinstance(F, SemispaceFamily) else tuple(F)


def lozenge_member(F: SemispaceFamily | Iterable[RMatrix], g: Gamble) -> bool:
    """Is ``g`` in the ◊-polar of the matrices?"""
    ms = _matrices(F)
    for A in ms:
        if A.n != g.dim:
            raise DimensionError(f"{A.m}x{A.n} matrix applied to a {g.dim}-gamble")
    return all(lex_sign(A.apply(g)) > 0 for A in ms)


def blacklozenge_member(K: GeneratorCone, A: RMatrix) -> bool:
    """Is ``A`` in ``K♦``?  Checking the generators suffices."""
    if A.shape != (K.dim, K.dim):
        raise DimensionError(f"expected a {K.dim}x{K.dim} matrix, got {A.m}x{A.n}")
    return all(lex_sign(A.apply(g)) > 0 for g in K.generators)


def is_coherent_semispaces(F: SemispaceFamily) -> CoherenceCertificate:
    """A semispace family never contains 0; it is coherent iff it contains every e^i."""
    n = F.dim
    for A in F.matrices:
        for i in range(n):
            if lex_sign(A.apply(Gamble.unit(n, i))) <= 0:
                return CoherenceCertificate(
                    False, "A3", Gamble.unit(n, i), reason=f"e^{i + 1} is not ranked positively"
                )
    return CoherenceCertificate(True)


def _require_coherent(K: GeneratorCone) -> None:
    cert = is_coherent_desirable(K)
    if not cert:
        raise PreconditionError(f"cone is not coherent ({cert.axiom}: {cert.reason})")


def map_G_member(K: GeneratorCone, P: RMatrix) -> bool:
    """Is ``P`` in ``G(K) = K♦ ∩ T_{n,n}``?"""
    _require_coherent(K)
    if P.shape != (K.dim, K.dim):
        raise DimensionError(f"expected a {K.dim}x{K.dim} matrix, got {P.m}x{P.n}")
    return P.is_stochastic() and P.is_full_rank() and blacklozenge_member(K, P)


def map_G_inverse_member(W: LCredalWitness, g: Gamble) -> bool:
    """Is ``g`` in the ◊-polar of the L-credal set described by ``W``?"""
    if W.is_empty():
        raise PreconditionError("the defining gambles describe an empty L-credal set")
    return member_posi(W.cone(), g)


# Lposi ---------------------------------------------------------------------


def _level_constraints(M: RMatrix, level: int, sign: int):
    """Rows ``< level`` vanish; row ``level`` has the given strict sign."""
    eq = [M.rows[i] for i in range(min(level, M.m))]
    ub = []
    if level < M.m:
        row = M.rows[level]
        # sign > 0: <row, g> >= 1  ->  -row.g <= -1 ; sign < 0: row.g <= -1
        ub.append(tuple(-x for x in row) if sign > 0 else row)
    return eq, ub


def lposi_witness(family: Sequence[RMatrix], B: RMatrix) -> Gamble | None:
    """A gamble ``g`` with ``A g >_L 0`` for all ``A`` and ``B g <=_L 0``, if any.

    Each lexicographic condition is a disjunction over the index at which
    the first nonzero entry appears; the joint choices are explored by
    backtracking, each partial choice being an exact LP feasibility test.
    """
    n = B.n
    if n > MAX_LPOSI_DIM:
        raise ValueError(f"lposi is limited to n <= {MAX_LPOSI_DIM}, got {n}")
    for A in list(family) + [B]:
        if A.shape != (n, n):
            raise DimensionError(f"expected {n}x{n} matrices, got {A.m}x{A.n}")
    free = range(n)

    def feasible(eq, ub):
        return find_feasible(ub, [-1] * len(ub), eq, [0] * len(eq), nvar=n, free=free)

    def search(k: int, eq, ub):
        x = feasible(eq, ub)
        if x is None:
            return None
        if k == len(family):
            return x
        for level in range(n):
            e, u = _level_constraints(family[k], level, +1)
            found = search(k + 1, eq + e, ub + u)
            if found is not None:
                return found
        return None

    for level in range(n + 1):
        eq, ub = _level_constraints(B, level, -1)
        x = search(0, eq, ub)
        if x is not None:
            return Gamble(x)
    return None


def lposi_member(family: Sequence[RMatrix], B: RMatrix) -> bool:
    return lposi_witness(family, B) is None


# maximal cones --------------------------------------------------------------


def check_semispace_matrix(A: RMatrix) -> None:
    """Raise unless ``A`` is square, row-orthogonal, full rank, lex-positive columns."""
    if not A.is_square():
        raise PreconditionError(f"expected a square matrix, got {A.m}x{A.n}")
    if not A.is_row_orthogonal():
        raise PreconditionError("rows are not pairwise orthogonal and nonzero")
    if not A.is_full_rank():
        raise PreconditionError("matrix is not full rank")
    if not mat_cols_lex_positive(A):
        raise PreconditionError("some column is not lexicographically positive")


def maximal_desirable_member(A: RMatrix, g: Gamble) -> bool:
    """Membership in the semispace ``{g : A g >_L 0}``."""
    check_semispace_matrix(A)
    return lex_sign(A.apply(g)) > 0


def semispace_equal(A: RMatrix, B: RMatrix) -> bool:
    """Do two orthogonal lex-positive matrices determine the same semispace?

    With orthogonal rows the representative is unique up to positive row
    scaling, so this is a row-by-row proportionality test.
    """
    check_semispace_matrix(A)
    check_semispace_matrix(B)
    if A.shape != B.shape:
        return False
    for r, s in zip(A.rows, B.rows):
        j = next(k for k, x in enumerate(r) if x)
        if s[j] == 0:
            return False
        c = s[j] / r[j]
        if c <= 0 or any(c * x != y for x, y in zip(r, s)):
            return False
    return True


def semispace_family_of(A: RMatrix) -> SemispaceFamily:
    return SemispaceFamily(A.n, [A])


def semispace_dichotomy(A: RMatrix, g: Gamble) -> bool:
    """For ``g != 0`` exactly one of ``g`` and ``-g`` lies in ``{g : A g >_L 0}``."""
    a, b = lex_sign(A.apply(g)) > 0, lex_sign(A.apply(-g)) > 0
    if g.is_zero():
        return not a and not b
    return a != b
