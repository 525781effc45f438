"""Finitely described cones of gambles and the coherence axioms.

A :class:`GeneratorCone` stands for ``posi`` of its generators, i.e. all
combinations with nonnegative, not-all-zero weights.  A :class:`HalfspaceCone`
is a closed cone cut out by finitely many homogeneous inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import DimensionError, Gamble, Scalar
from .lp import OPTIMAL, linprog_exact


@dataclass(frozen=True)
class GeneratorCone:
    """``posi(generators)`` in R^dim.

    An empty generator list stands for the closed cone ``{0}``; it only
    arises as the output of a conversion and is never coherent.
    """

    dim: int
    generators: tuple[Gamble, ...]

    def __init__(self, dim: int, generators: Iterable[Gamble | Sequence[Scalar]]):
        gens = tuple(g if isinstance(g, Gamble) else Gamble(g) for g in generators)
        for g in gens:
            if g.dim != dim:
                raise DimensionError(f"generator {g} does not live in R^{dim}")
            if g.is_zero():
                raise ValueError("the zero gamble cannot be a generator")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def vacuous(cls, n: int) -> GeneratorCone:
        return cls(n, [Gamble.unit(n, i) for i in range(n)])

    def __contains__(self, g: Gamble) -> bool:
        return member_posi(self, g)


@dataclass(frozen=True)
class HalfspaceCone:
    """``{g : <v, g> >= 0 for every normal v}``; no normals means R^dim."""

    dim: int
    normals: tuple[Gamble, ...]

    def __init__(self, dim: int, normals: Iterable[Gamble | Sequence[Scalar]]):
        vs = tuple(v if isinstance(v, Gamble) else Gamble(v) for v in normals)
        for v in vs:
            if v.dim != dim:
                raise DimensionError(f"normal {v} does not live in R^{dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "normals", vs)

    @classmethod
    def nonnegative_orthant(cls, n: int) -> HalfspaceCone:
        return cls(n, [Gamble.unit(n, i) for i in range(n)])

    def contains(self, g: Gamble) -> bool:
        if g.dim != self.dim:
            raise DimensionError(f"gamble of dimension {g.dim} tested against R^{self.dim}")
        return all(v.dot(g) >= 0 for v in self.normals)

    __contains__ = contains


def posi_weights(K: GeneratorCone, g: Gamble) -> tuple[Fraction, ...] | None:
    """Weights ``lam >= 0, lam != 0`` with ``sum lam_j g^j = g``, or None."""
    if g.dim != K.dim:
        raise DimensionError(f"gamble of dimension {g.dim} tested against R^{K.dim}")
    k = len(K.generators)
    if k == 0:
        return None
    cols = [G.coords for G in K.generators]
    A_eq = [[cols[j][i] for j in range(k)] for i in range(K.dim)]
    if not g.is_zero():
        res = linprog_exact([0] * k, A_eq=A_eq, b_eq=g.coords)
        return res.x if res.status == OPTIMAL else None
    # apex: is there a nonzero nonnegative dependency?
    A_ub = [[int(i == j) for j in range(k)] for i in range(k)]
    res = linprog_exact(
        [1] * k, A_ub=A_ub, b_ub=[1] * k, A_eq=A_eq, b_eq=[0] * K.dim, maximize=True
    )
    if res.status == OPTIMAL and res.value > 0:
        return res.x
    return None


def member_posi(K: GeneratorCone, g: Gamble) -> bool:
    return posi_weights(K, g) is not None


def natural_extension(assessments: Iterable[Gamble | Sequence[Scalar]], dim: int) -> GeneratorCone:
    """Smallest cone closed under addition, positive scaling and partial gain."""
    gens = [a if isinstance(a, Gamble) else Gamble(a) for a in assessments]
    for a in gens:
        if a.is_zero():
            raise ValueError("the zero gamble cannot be assessed as desirable")
    return GeneratorCone(dim, gens + [Gamble.unit(dim, i) for i in range(dim)])


@dataclass(frozen=True)
class CoherenceCertificate:
    """Outcome of a coherence check.

    Truthy iff coherent.  On failure ``axiom`` names the first violated
    axiom (``"A3"``, ``"A4"`` or ``"A6"``) and ``witness`` is a gamble
    demonstrating it; for ``"A4"`` the generator weights of the zero
    combination are in ``weights``.
    """

    coherent: bool
    axiom: str | None = None
    witness: Gamble | None = None
    weights: tuple[Fraction, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.coherent


def is_coherent_desirable(K: GeneratorCone) -> CoherenceCertificate:
    n = K.dim
    for i in range(n):
        e = Gamble.unit(n, i)
        if not member_posi(K, e):
            return CoherenceCertificate(False, "A3", e, reason=f"e^{i + 1} is not in the cone")
    lam = posi_weights(K, Gamble.zero(n))
    if lam is not None:
        return CoherenceCertificate(
            False, "A4", Gamble.zero(n), lam, reason="0 is a positive combination of generators"
        )
    return CoherenceCertificate(True)


def is_coherent_almost(K: HalfspaceCone) -> CoherenceCertificate:
    n = K.dim
    for i in range(n):
        if any(v[i] < 0 for v in K.normals):
            return CoherenceCertificate(
                False, "A3", Gamble.unit(n, i), reason=f"e^{i + 1} violates a normal"
            )
    if not any(not v.is_zero() for v in K.normals):
        return CoherenceCertificate(
            False, "A6", Gamble.minus_one(n), reason="the cone is all of R^n and contains -1"
        )
    return CoherenceCertificate(True)
