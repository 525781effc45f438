"""Conditioning on an event, for every representation in the package.

Events are subsets of outcomes labelled ``1..n``.  Any subset is allowed,
not only a prefix: coordinates are selected by index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .classic_polarity import CredalPolytope, generators_to_halfspaces, halfspaces_to_generators
from .cones import (
    CoherenceCertificate,
    GeneratorCone,
    HalfspaceCone,
    is_coherent_almost,
    is_coherent_desirable,
)
from .exact import DimensionError, Gamble, PreconditionError, RMatrix, in_span, mat_cols_lex_positive
from .lex_polarity import SemispaceFamily, check_semispace_matrix, is_coherent_semispaces
from .matrix_procedures import gs_canonical


@dataclass(frozen=True)
class EventSubset:
    """A nonempty proper event ``Π`` of an ``ambient``-element outcome space."""

    ambient: int
    indices: tuple[int, ...]

    def __init__(self, ambient: int, indices: Iterable[int]):
        idx = tuple(indices)
        if not idx:
            raise ValueError("an event must contain at least one outcome")
        if list(idx) != sorted(set(idx)):
            raise ValueError(f"event indices must be strictly increasing, got {idx}")
        if idx[0] < 1 or idx[-1] > ambient:
            raise ValueError(f"event indices must lie in 1..{ambient}")
        if len(idx) >= ambient:
            raise ValueError("the event must be a proper subset of the outcomes")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "indices", idx)

    @property
    def m(self) -> int:
        return len(self.indices)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(i - 1 for i in self.indices)

    def complement(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.ambient + 1) if i not in self.indices)

    def relative_to(self, outer: EventSubset) -> EventSubset:
        """Re-express a sub-event of ``outer`` on ``outer``'s own outcomes."""
        if self.ambient != outer.ambient or not set(self.indices) < set(outer.indices):
            raise ValueError(f"{self.indices} is not a proper sub-event of {outer.indices}")
        return EventSubset(outer.m, [outer.indices.index(i) + 1 for i in self.indices])


def proper_events(n: int) -> list[EventSubset]:
    """All nonempty proper events of ``{1..n}``, by size then lexicographically."""
    from itertools import combinations

    return [EventSubset(n, c) for k in range(1, n) for c in combinations(range(1, n + 1), k)]


def lift(g: Gamble, Pi: EventSubset) -> Gamble:
    """Extend a gamble on ``Π`` by zero outside ``Π``."""
    if g.dim != Pi.m:
        raise DimensionError(f"gamble of dimension {g.dim} lifted from an event of size {Pi.m}")
    out = [Fraction(0)] * Pi.ambient
    for x, p in zip(g, Pi.positions):
        out[p] = x
    return Gamble(out)


def restrict(g: Gamble | Sequence[Fraction], Pi: EventSubset) -> Gamble:
    if len(g) != Pi.ambient:
        raise DimensionError(f"gamble of dimension {len(g)} restricted on R^{Pi.ambient}")
    return Gamble(g[p] for p in Pi.positions)


@dataclass(frozen=True)
class Conditioned:
    """A conditioned cone together with its coherence verdict."""

    cone: GeneratorCone | HalfspaceCone | SemispaceFamily
    certificate: CoherenceCertificate

    @property
    def coherent(self) -> bool:
        return self.certificate.coherent


def rule_R_rows(rows: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Keep a row iff it is not a combination of the rows above it."""
    kept: list[tuple[Fraction, ...]] = []
    for r in rows:
        if not in_span(r, kept):
            kept.append(tuple(r))
    return kept


def rule_R(M: RMatrix) -> RMatrix:
    kept = rule_R_rows(M.rows)
    if not kept:
        raise ValueError("rule (R) discarded every row of a zero matrix")
    return RMatrix(kept)


def condition_cone(K: GeneratorCone | HalfspaceCone | SemispaceFamily, Pi: EventSubset) -> Conditioned:
    """``{g in R^m : lift(g) in K}``, reported with its coherence certificate.

    The input's own coherence theory applies: almost desirability for an
    H-cone, desirability otherwise.  An incoherent result is returned, not
    raised.  A generator cone is conditioned through its closure, which is
    exact whenever the cone omits the origin.
    """
    if K.dim != Pi.ambient:
        raise DimensionError(f"cone in R^{K.dim} conditioned on an event of R^{Pi.ambient}")
    if isinstance(K, HalfspaceCone):
        out = HalfspaceCone(Pi.m, [restrict(v, Pi) for v in K.normals])
        return Conditioned(out, is_coherent_almost(out))
    if isinstance(K, GeneratorCone):
        H = generators_to_halfspaces(K)
        sliced = HalfspaceCone(Pi.m, [restrict(v, Pi) for v in H.normals])
        out = halfspaces_to_generators(sliced)
        return Conditioned(out, is_coherent_desirable(out))
    if isinstance(K, SemispaceFamily):
        mats = []
        for A in K.matrices:
            B = rule_R(A.select_columns(Pi.positions))
            if B.m != Pi.m:
                raise PreconditionError("conditioning a semispace needs a full-rank matrix")
            mats.append(B)
        out = SemispaceFamily(Pi.m, mats)
        return Conditioned(out, is_coherent_semispaces(out))
    raise TypeError(f"cannot condition a {type(K).__name__}")


@dataclass(frozen=True)
class ConditionedCredal:
    polytope: CredalPolytope | None

    @property
    def defined(self) -> bool:
        return self.polytope is not None


def condition_pmf(p: Gamble | Sequence[Fraction], Pi: EventSubset) -> Gamble | None:
    """``p(. | Π)`` projected on ``Π``; None when ``Π`` has zero mass."""
    part = restrict(p, Pi)
    mass = part.total()
    if mass == 0:
        return None
    return part.scale(1 / mass)


def condition_credal(P: CredalPolytope, Pi: EventSubset) -> ConditionedCredal:
    """Condition a credal polytope vertex by vertex.

    Vertices with zero mass on ``Π`` contribute nothing: along a segment
    towards such a vertex the conditional stays that of the other end.
    """
    if P.dim != Pi.ambient:
        raise DimensionError(f"polytope in R^{P.dim} conditioned on an event of R^{Pi.ambient}")
    pts = [q for q in (condition_pmf(v, Pi) for v in P.vertices) if q is not None]
    if not pts:
        return ConditionedCredal(None)
    return ConditionedCredal(CredalPolytope.from_points(Pi.m, pts))


def condition_stochastic(P: RMatrix, Pi: EventSubset) -> RMatrix:
    """Condition every row (zero row when undefined), then apply rule (R)."""
    n = Pi.ambient
    if P.shape != (n, n):
        raise DimensionError(f"expected a {n}x{n} matrix, got {P.m}x{P.n}")
    if n < 2 or not P.is_full_rank_stochastic():
        raise PreconditionError("expected a full-rank stochastic matrix with n > 1")
    rows = []
    for r in P.rows:
        q = condition_pmf(r, Pi)
        rows.append(q.coords if q is not None else (Fraction(0),) * Pi.m)
    out = rule_R(RMatrix(rows))
    if out.shape != (Pi.m, Pi.m) or not out.is_full_rank_stochastic():
        raise AssertionError("conditioned matrix is not full-rank stochastic")
    return out


def condition_orthogonal(A: RMatrix, Pi: EventSubset) -> RMatrix:
    """Keep the ``Π`` columns, apply rule (R), then canonical Gram-Schmidt."""
    check_semispace_matrix(A)
    if A.n != Pi.ambient:
        raise DimensionError(f"{A.n}x{A.n} matrix conditioned on an event of R^{Pi.ambient}")
    B = rule_R(A.select_columns(Pi.positions))
    out = gs_canonical(B)
    if out.shape != (Pi.m, Pi.m) or not out.is_row_orthogonal() or not mat_cols_lex_positive(out):
        raise AssertionError("conditioned orthogonal matrix lost its defining properties")
    return out
