"""Classical polarity: almost desirable cones and credal sets.

For a coherent closed cone ``K = {g : <v_t, g> >= 0}`` the polar is the
conic hull of the normals, so ``C(K) = K° ∩ P_n`` is the convex hull of the
normals rescaled onto the simplex.  The inverse map takes a polytope to the
cone cut out by its vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cones import GeneratorCone, HalfspaceCone, is_coherent_almost
from .exact import DimensionError, Gamble, PreconditionError, Scalar
from .lp import OPTIMAL, linprog_exact
from .polyhedra import ConeDescription, canonical_description, double_description


def in_simplex(p: Gamble) -> bool:
    return all(0 <= x <= 1 for x in p) and p.total() == 1


def _in_hull(p: Gamble, points: Sequence[Gamble]) -> bool:
    if not points:
        return False
    k = len(points)
    A_eq = [[q[i] for q in points] for i in range(p.dim)] + [[1] * k]
    b_eq = list(p.coords) + [1]
    return linprog_exact([0] * k, A_eq=A_eq, b_eq=b_eq).status == OPTIMAL


@dataclass(frozen=True)
class CredalPolytope:
    """Convex hull of finitely many probability mass functions.

    The vertex list must be irredundant; use :meth:`from_points` to prune
    an arbitrary point list.
    """

    dim: int
    vertices: tuple[Gamble, ...]

    def __init__(self, dim: int, vertices: Iterable[Gamble | Sequence[Scalar]], check: bool = True):
        vs = tuple(v if isinstance(v, Gamble) else Gamble(v) for v in vertices)
        if not vs:
            raise ValueError("a credal polytope needs at least one vertex")
        for v in vs:
            if v.dim != dim:
                raise DimensionError(f"vertex {v} does not live in R^{dim}")
            if not in_simplex(v):
                raise ValueError(f"vertex {v} is not a probability mass function")
        if check:
            for i, v in enumerate(vs):
                if _in_hull(v, vs[:i] + vs[i + 1:]):
                    raise ValueError(f"vertex {v} is redundant")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "vertices", vs)

    @classmethod
    def from_points(cls, dim: int, points: Iterable[Gamble | Sequence[Scalar]]) -> CredalPolytope:
        pts: list[Gamble] = []
        for p in points:
            p = p if isinstance(p, Gamble) else Gamble(p)
            if p not in pts:
                pts.append(p)
        keep = list(pts)
        i = 0
        while i < len(keep):
            if _in_hull(keep[i], keep[:i] + keep[i + 1:]):
                del keep[i]
            else:
                i += 1
        return cls(dim, keep, check=False)

    @classmethod
    def simplex(cls, n: int) -> CredalPolytope:
        return cls(n, [Gamble.unit(n, i) for i in range(n)], check=False)

    def contains(self, p: Gamble) -> bool:
        return _in_hull(p, self.vertices)

    def vertex_set(self) -> frozenset[Gamble]:
        return frozenset(self.vertices)


# polars and representation changes ---------------------------------------


def polar_of_generators(K: GeneratorCone) -> HalfspaceCone:
    """``K° = {v : <v, g> >= 0}`` for every generator ``g``."""
    return HalfspaceCone(K.dim, K.generators)


def polar_of_halfspaces(K: HalfspaceCone) -> GeneratorCone:
    """The polar of an H-cone is the closed conic hull of its normals."""
    return GeneratorCone(K.dim, [v for v in K.normals if not v.is_zero()])


def describe(K: HalfspaceCone) -> ConeDescription:
    return double_description([v.coords for v in K.normals], K.dim)


def halfspaces_to_generators(K: HalfspaceCone) -> GeneratorCone:
    """Extreme rays plus both signs of a lineality basis.

    The closed cone ``{0}`` comes back with no generators at all.
    """
    return GeneratorCone(K.dim, describe(K).generators())


def generators_to_halfspaces(K: GeneratorCone) -> HalfspaceCone:
    """Facet description of the closed conic hull of the generators."""
    polar = double_description([g.coords for g in K.generators], K.dim)
    return HalfspaceCone(K.dim, polar.generators())


def canonical_form(K: HalfspaceCone):
    """Normal form usable for exact equality of closed cones."""
    return canonical_description(describe(K))


def same_closed_cone(K1: HalfspaceCone, K2: HalfspaceCone) -> bool:
    if K1.dim != K2.dim:
        raise DimensionError(f"cones live in R^{K1.dim} and R^{K2.dim}")
    return canonical_form(K1) == canonical_form(K2)


# the bijection C ----------------------------------------------------------


def map_C(K: HalfspaceCone) -> CredalPolytope:
    """``K° ∩ P_n`` for a coherent almost desirable cone."""
    cert = is_coherent_almost(K)
    if not cert:
        raise PreconditionError(f"cone is not coherent ({cert.axiom}: {cert.reason})")
    pts = [v.scale(Fraction(1) / v.total()) for v in K.normals if not v.is_zero()]
    return CredalPolytope.from_points(K.dim, pts)


def map_C_inverse(P: CredalPolytope) -> HalfspaceCone:
    """``P°``: the cone of gambles with nonnegative expectation under every vertex."""
    return HalfspaceCone(P.dim, P.vertices)


def maximal_almost_from_p(p: Gamble) -> HalfspaceCone:
    """The maximal almost desirable cone ``{g : <p, g> >= 0}``."""
    if not in_simplex(p):
        raise PreconditionError(f"{p} is not a probability mass function")
    return HalfspaceCone(p.dim, [p])
