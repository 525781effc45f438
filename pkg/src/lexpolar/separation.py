"""Constructive separation witnesses.

``separate_almost`` finds a probability ``v`` with ``<v, g> >= 0`` on a
closed coherent cone and ``<v, gbar> < 0``.  ``separate_lex`` finds an
orthogonal matrix ``A`` with lex-positive columns, ``A g >_L 0`` on a
coherent desirable cone and ``A gbar <=_L 0``.  Every witness is re-checked
before it is returned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .classic_polarity import describe
from .cones import GeneratorCone, HalfspaceCone, is_coherent_almost, is_coherent_desirable, member_posi
from .exact import Gamble, PreconditionError, RMatrix, canonical_scale, gram_schmidt, lex_sign, mat_cols_lex_positive
from .lex_polarity import SemispaceFamily, is_coherent_semispaces
from .lp import OPTIMAL, linprog_exact
from .matrix_procedures import gs_canonical


class SeparationError(RuntimeError):
    """A constructed witness failed its own postcondition (a defect)."""


class WitnessKind(enum.Enum):
    CLASSICAL = "classical"
    LEXICOGRAPHIC = "lexicographic"


@dataclass(frozen=True)
class SeparationWitness:
    kind: WitnessKind
    v: Gamble | None = None
    A: RMatrix | None = None


def _simplex_minimiser(normals: list[tuple[Fraction, ...]], target: Gamble) -> tuple[tuple[Fraction, ...], Fraction]:
    """Minimise ``<p, target>`` over ``p in P_n`` with ``<p, r> >= 0`` for all ``r``."""
    n = target.dim
    res = linprog_exact(
        target.coords,
        A_ub=[[-x for x in r] for r in normals],
        b_ub=[0] * len(normals),
        A_eq=[[1] * n],
        b_eq=[1],
    )
    if res.status != OPTIMAL:
        raise SeparationError(f"stage LP ended with status {res.status}")
    return res.x, res.value


def separate_almost(K: HalfspaceCone, gbar: Gamble) -> SeparationWitness:
    cert = is_coherent_almost(K)
    if not cert:
        raise PreconditionError(f"cone is not coherent ({cert.axiom}: {cert.reason})")
    if K.contains(gbar):
        raise PreconditionError(f"{gbar} belongs to the cone; nothing to separate")
    rays = describe(K).generators()
    v, value = _simplex_minimiser(rays, gbar)
    w = Gamble(v)
    if not (
        all(x >= 0 for x in w)
        and not w.is_zero()
        and w.dot(gbar) < 0
        and all(w.dot(Gamble(r)) >= 0 for r in rays)
    ):
        raise SeparationError(f"classical witness {w} fails its postcondition")
    return SeparationWitness(WitnessKind.CLASSICAL, v=w.scale(1 / w.total()))


def _count_stage(rows: list[tuple[Fraction, ...]], gens: list[Gamble], n: int) -> tuple[Fraction, ...] | None:
    """``v`` orthogonal to ``rows``, nonnegative on ``gens``, positive on as many as possible."""
    k = len(gens)
    nvar = n + k
    A_ub, b_ub = [], []
    for j, g in enumerate(gens):
        row = [-x for x in g.coords] + [0] * k
        row[n + j] = 1
        A_ub.append(row)
        b_ub.append(0)
    for j in range(k):
        row = [0] * nvar
        row[n + j] = 1
        A_ub.append(row)
        b_ub.append(1)
    A_eq = [list(r) + [0] * k for r in rows]
    res = linprog_exact(
        [0] * n + [1] * k,
        A_ub,
        b_ub,
        A_eq,
        [0] * len(A_eq),
        free=range(n),
        maximize=True,
    )
    if res.status != OPTIMAL or res.value <= 0:
        return None
    return res.x[:n]


def _complete(rows: list[tuple[Fraction, ...]], n: int) -> RMatrix:
    basis = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    full = gram_schmidt(rows + basis, drop_dependent=True)[:n]
    return RMatrix(canonical_scale(r) for r in full)


def verify_lex_witness(gens: list[Gamble], gbar: Gamble, A: RMatrix) -> bool:
    return (
        A.is_row_orthogonal()
        and A.is_full_rank()
        and mat_cols_lex_positive(A)
        and all(lex_sign(A.apply(g)) > 0 for g in gens)
        and lex_sign(A.apply(gbar)) <= 0
    )


def separate_lex(K: GeneratorCone | SemispaceFamily, gbar: Gamble) -> SeparationWitness:
    """Lexicographic separation of ``gbar`` from a coherent desirable cone.

    For a generator cone the rows are built in stages.  The first row is a
    vertex of the credal set of the closure minimising the expectation of
    ``gbar``; it is therefore a facet normal, which keeps the resulting
    semispace as tight as possible around the cone.  Later rows live in the
    orthogonal complement of the earlier ones and make as many remaining
    generators strictly positive as possible.  The rows are finally
    completed to an orthogonal basis.

    For a semispace family, the first member matrix not ranking ``gbar``
    positively is orthogonalised and returned.
    """
    if isinstance(K, SemispaceFamily):
        return _separate_family(K, gbar)
    cert = is_coherent_desirable(K)
    if not cert:
        raise PreconditionError(f"cone is not coherent ({cert.axiom}: {cert.reason})")
    if member_posi(K, gbar):
        raise PreconditionError(f"{gbar} belongs to the cone; nothing to separate")
    n = K.dim
    gens = list(K.generators)
    rows: list[tuple[Fraction, ...]] = []
    remaining = list(range(len(gens)))

    if not gbar.is_zero():
        v, value = _simplex_minimiser([g.coords for g in gens], gbar)
        if value >= 0:
            raise SeparationError("gbar is in the closure of a coherent cone but not in the cone")
        rows.append(v)
        remaining = [j for j in remaining if Gamble(v).dot(gens[j]) == 0]

    while remaining:
        if len(rows) >= n:
            raise SeparationError("ran out of dimensions before ranking every generator")
        v = _count_stage(rows, [gens[j] for j in remaining], n)
        if v is None:
            raise SeparationError("stage LP could not rank any remaining generator")
        rows.append(v)
        remaining = [j for j in remaining if Gamble(v).dot(gens[j]) == 0]

    A = _complete(rows, n)
    if not verify_lex_witness(gens, gbar, A):
        raise SeparationError(f"lexicographic witness {A} fails its postcondition")
    return SeparationWitness(WitnessKind.LEXICOGRAPHIC, A=A)


def _separate_family(F: SemispaceFamily, gbar: Gamble) -> SeparationWitness:
    cert = is_coherent_semispaces(F)
    if not cert:
        raise PreconditionError(f"family is not coherent ({cert.axiom}: {cert.reason})")
    M = next((A for A in F.matrices if lex_sign(A.apply(gbar)) <= 0), None)
    if M is None:
        raise PreconditionError(f"{gbar} belongs to the family; nothing to separate")
    if not M.is_full_rank():
        raise PreconditionError("the separating member matrix is not full rank")
    A = gs_canonical(M)
    if not verify_lex_witness([], gbar, A):
        raise SeparationError(f"lexicographic witness {A} fails its postcondition")
    return SeparationWitness(WitnessKind.LEXICOGRAPHIC, A=A)
