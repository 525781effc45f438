"""Double description for polyhedral cones ``{x : <a_t, x> >= 0}``.

The cone is returned as a lineality basis plus a minimal list of extreme
rays of the pointed part.  Constraints are inserted in index order, so the
output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import gram_schmidt, nullspace, primitive, rref

Vector = tuple[Fraction, ...]


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class ConeDescription:
    """Minimal V-description: ``lin(lineality) + cone(rays)``."""

    dim: int
    lineality: tuple[Vector, ...]
    rays: tuple[Vector, ...]

    def generators(self) -> list[Vector]:
        """Rays followed by both signs of every lineality vector."""
        out = list(self.rays)
        for l in self.lineality:
            out.append(l)
            out.append(tuple(-x for x in l))
        return out

    def is_trivial(self) -> bool:
        return not self.rays and not self.lineality


def double_description(normals: Sequence[Sequence[Fraction]], dim: int) -> ConeDescription:
    """Extreme rays and lineality of ``{x in R^dim : <a, x> >= 0 for a in normals}``."""
    lineality: list[Vector] = [
        tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)
    ]
    rays: list[Vector] = []
    processed: list[Vector] = []

    for a in normals:
        a = tuple(Fraction(x) for x in a)
        if len(a) != dim:
            raise ValueError(f"normal of length {len(a)} in dimension {dim}")
        pick = next((k for k, l in enumerate(lineality) if _dot(a, l) != 0), None)
        if pick is not None:
            l = lineality[pick]
            al = _dot(a, l)
            if al < 0:
                l = tuple(-x for x in l)
                al = -al
            new_lin = []
            for k, other in enumerate(lineality):
                if k == pick:
                    continue
                c = _dot(a, other) / al
                new_lin.append(tuple(x - c * y for x, y in zip(other, l)) if c else other)
            lineality = new_lin
            new_rays = []
            for r in rays:
                c = _dot(a, r) / al
                new_rays.append(primitive(tuple(x - c * y for x, y in zip(r, l))) if c else r)
            new_rays.append(primitive(l))
            rays = _dedupe(new_rays)
            processed.append(a)
            continue

        values = [_dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(values) if v > 0]
        neg = [i for i, v in enumerate(values) if v < 0]
        if not neg:
            processed.append(a)
            continue
        zero = [i for i, v in enumerate(values) if v == 0]
        tight = [
            frozenset(k for k, b in enumerate(processed) if _dot(b, r) == 0) for r in rays
        ]
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zero]
        for i in pos:
            for j in neg:
                common = tight[i] & tight[j]
                if any(
                    k != i and k != j and common <= tight[k] for k in range(len(rays))
                ):
                    continue
                vi, vj = values[i], -values[j]
                combo = tuple(vj * x + vi * y for x, y in zip(rays[i], rays[j]))
                new_rays.append(primitive(combo))
        rays = _dedupe(new_rays)
        processed.append(a)

    return ConeDescription(dim, tuple(tuple(l) for l in lineality), tuple(rays))


def _dedupe(rays: list[Vector]) -> list[Vector]:
    seen = set()
    out = []
    for r in rays:
        if r not in seen and any(r):
            seen.add(r)
            out.append(r)
    return out


def canonical_description(desc: ConeDescription) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """A representation-independent normal form of a closed cone.

    The lineality space is given by its reduced row echelon basis, and the
    rays by their (primitive, sorted) projections onto the orthogonal
    complement of the lineality space.
    """
    lin_rows, _ = rref(desc.lineality) if desc.lineality else ([], [])
    lin = tuple(tuple(r) for r in lin_rows)
    rays = []
    if lin:
        # orthogonal projector via a basis of the complement
        comp = nullspace(lin, desc.dim)
        for r in desc.rays:
            rays.append(primitive(_project(r, comp)))
    else:
        rays = [primitive(r) for r in desc.rays]
    return lin, tuple(sorted(set(r for r in rays if any(r))))


def _project(v: Vector, basis: list[Vector]) -> Vector:
    """Orthogonal projection of ``v`` onto ``span(basis)``."""
    ortho = gram_schmidt(basis, drop_dependent=True)
    out = [Fraction(0)] * len(v)
    for u in ortho:
        c = _dot(v, u) / _dot(u, u)
        out = [x + c * y for x, y in zip(out, u)]
    return tuple(out)
