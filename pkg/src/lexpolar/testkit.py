"""Independent oracles and seeded random instances for the test suites.

The oracles here do not touch the simplex code: positive-combination
membership is decided by a weight grid plus Caratheodory enumeration over
generator subsets with a local elimination routine.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .classic_polarity import CredalPolytope, in_simplex
from .cones import GeneratorCone, HalfspaceCone, is_coherent_desirable
from .exact import Gamble, RMatrix, canonical_scale, gram_schmidt, lex_sign

MAX_RETRIES = 500


@dataclass(frozen=True)
class SampleConfig:
    max_dim_cone: int = 4
    max_dim_lex: int = 6
    coord_range: int = 3
    max_denominator: int = 4
    grid_radius: int = 1
    grid_denominator: int = 2
    random_points: int = 40
    seed: int = 0

    def __post_init__(self):
        if min(self.max_dim_cone, self.max_dim_lex, self.coord_range, self.max_denominator) < 1:
            raise ValueError("dimension bounds, ranges and denominators must be positive")
        if self.random_points < 0 or self.grid_radius < 0:
            raise ValueError("sample counts must be nonnegative")

    def rng(self, salt: int = 0) -> random.Random:
        return random.Random(self.seed * 1_000_003 + salt)


# local exact elimination, deliberately separate from exact.rref ------------


def _eliminate(M: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    M = [row[:] for row in M]
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        p = None
        for i in range(r, len(M)):
            if M[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def _caratheodory(gens: Sequence[Gamble], g: Gamble) -> bool:
    n, k = g.dim, len(gens)
    if g.is_zero():
        # 0 = sum lam_j g^j with lam >= 0, lam != 0 iff some subset has a
        # one-dimensional kernel spanned by a strictly one-signed vector
        for size in range(1, min(k, n + 1) + 1):
            for S in itertools.combinations(range(k), size):
                M = [[gens[j][i] for j in S] for i in range(n)]
                R, piv = _eliminate(M)
                free = [c for c in range(size) if c not in piv]
                if len(free) != 1:
                    continue
                x = [Fraction(0)] * size
                x[free[0]] = Fraction(1)
                for row, p in zip(R, piv):
                    x[p] = -row[free[0]]
                if all(v > 0 for v in x) or all(v < 0 for v in x):
                    return True
        return False
    for size in range(1, min(k, n) + 1):
        for S in itertools.combinations(range(k), size):
            M = [[gens[j][i] for j in S] + [g[i]] for i in range(n)]
            R, piv = _eliminate(M)
            if size in piv or len(piv) < size:
                continue  # inconsistent, or dependent columns (a smaller subset covers it)
            lam = [Fraction(0)] * size
            for row, p in zip(R, piv):
                lam[p] = row[size]
            if all(v >= 0 for v in lam):
                return True
    return False


def _grid_search(gens: Sequence[Gamble], g: Gamble, cfg: SampleConfig) -> bool:
    D = cfg.grid_denominator
    top = cfg.coord_range * D
    target = [x * D for x in g]
    for lam in itertools.product(range(top + 1), repeat=len(gens)):
        if not any(lam):
            continue
        if all(
            sum(l * G[i] for l, G in zip(lam, gens)) == target[i] for i in range(g.dim)
        ):
            return True
    return False


def oracle_member_posi(K: GeneratorCone, g: Gamble, cfg: SampleConfig = SampleConfig()) -> bool:
    """Brute-force decision of ``g in posi(K)``.

    A small weight grid is searched first when there are at most four
    generators; the exact subset enumeration then has the final word and
    must agree with any grid hit.
    """
    gens = list(K.generators)
    if not gens:
        return False
    exact = _caratheodory(gens, g)
    if len(gens) <= 4 and _grid_search(gens, g, cfg) and not exact:
        raise AssertionError(f"grid found weights for {g} but enumeration did not")
    return exact


# sampling -------------------------------------------------------------------


def random_rational(rng: random.Random, cfg: SampleConfig) -> Fraction:
    d = rng.randint(1, cfg.max_denominator)
    return Fraction(rng.randint(-cfg.coord_range * d, cfg.coord_range * d), d)


def sample_gambles(dim: int, cfg: SampleConfig, salt: int = 0) -> list[Gamble]:
    """Deterministic integer grid followed by seeded random rational points."""
    r = cfg.grid_radius
    pts = [Gamble(c) for c in itertools.product(range(-r, r + 1), repeat=dim)]
    rng = cfg.rng(salt)
    pts += [Gamble(random_rational(rng, cfg) for _ in range(dim)) for _ in range(cfg.random_points)]
    return pts


@dataclass(frozen=True)
class SetVerdict:
    agree: bool
    counterexample: Gamble | None
    checked: int
    seed: int

    def __bool__(self) -> bool:
        return self.agree

    def report(self) -> str:
        if self.agree:
            return f"agree on {self.checked} gambles (seed {self.seed})"
        return f"disagree at {self.counterexample} (seed {self.seed})"


def sampled_set_equal(
    membership_a: Callable[[Gamble], bool],
    membership_b: Callable[[Gamble], bool],
    dim: int,
    cfg: SampleConfig = SampleConfig(),
    salt: int = 0,
) -> SetVerdict:
    """Compare two membership predicates on sampled gambles; stop at the first disagreement."""
    pts = sample_gambles(dim, cfg, salt)
    for k, g in enumerate(pts):
        if membership_a(g) != membership_b(g):
            return SetVerdict(False, g, k + 1, cfg.seed)
    return SetVerdict(True, None, len(pts), cfg.seed)


def random_gamble(rng: random.Random, n: int, cfg: SampleConfig, nonzero: bool = True) -> Gamble:
    for _ in range(MAX_RETRIES):
        g = Gamble(rng.randint(-cfg.coord_range, cfg.coord_range) for _ in range(n))
        if not (nonzero and g.is_zero()):
            return g
    raise RuntimeError("could not draw a nonzero gamble")


def random_positive_gamble(rng: random.Random, n: int, cfg: SampleConfig) -> Gamble:
    """A gamble ``g > 0`` (nonnegative, not zero)."""
    for _ in range(MAX_RETRIES):
        g = Gamble(rng.randint(0, cfg.coord_range) for _ in range(n))
        if not g.is_zero():
            return g
    raise RuntimeError("could not draw a positive gamble")


def random_coherent_cone(
    rng: random.Random, cfg: SampleConfig, n: int | None = None, max_extra: int = 3
) -> GeneratorCone:
    """Natural extension of a few random assessments, kept only if coherent."""
    n = n or rng.randint(2, cfg.max_dim_cone)
    for _ in range(MAX_RETRIES):
        k = rng.randint(1, max_extra)
        extra = []
        for _ in range(k):
            g = random_gamble(rng, n, cfg)
            if any(x > 0 for x in g) and any(x < 0 for x in g):
                extra.append(g)
        if not extra:
            continue
        K = GeneratorCone(n, extra + [Gamble.unit(n, i) for i in range(n)])
        if is_coherent_desirable(K):
            return K
    raise RuntimeError(f"no coherent cone found in {MAX_RETRIES} draws")


def random_coherent_halfspace(
    rng: random.Random, cfg: SampleConfig, n: int | None = None, max_normals: int = 4
) -> HalfspaceCone:
    n = n or rng.randint(2, cfg.max_dim_cone)
    k = rng.randint(1, max_normals)
    normals = [random_positive_gamble(rng, n, cfg) for _ in range(k)]
    return HalfspaceCone(n, normals)


def random_pmf(rng: random.Random, n: int, cfg: SampleConfig) -> Gamble:
    w = random_positive_gamble(rng, n, cfg)
    return w.scale(1 / w.total())


def random_credal_polytope(
    rng: random.Random, cfg: SampleConfig, n: int | None = None, max_points: int = 5
) -> CredalPolytope:
    n = n or rng.randint(2, cfg.max_dim_cone)
    pts = [random_pmf(rng, n, cfg) for _ in range(rng.randint(1, max_points))]
    P = CredalPolytope.from_points(n, pts)
    if not all(in_simplex(v) for v in P.vertices):
        raise AssertionError("sampled polytope left the simplex")
    return P


def random_full_rank_stochastic(rng: random.Random, cfg: SampleConfig, n: int | None = None) -> RMatrix:
    n = n or rng.randint(2, cfg.max_dim_lex)
    for _ in range(MAX_RETRIES):
        P = RMatrix(random_pmf(rng, n, cfg).coords for _ in range(n))
        if P.is_full_rank():
            return P
    raise RuntimeError("no full-rank stochastic matrix found")


def random_lexpos_orthogonal(rng: random.Random, cfg: SampleConfig, n: int | None = None) -> RMatrix:
    """Canonical orthogonal matrix with lexicographically positive columns.

    A random integer matrix has its columns sign-flipped to be lex-positive,
    then Gram-Schmidt is applied; being unit lower-triangular it keeps the
    column signs.
    """
    n = n or rng.randint(1, cfg.max_dim_lex)
    for _ in range(MAX_RETRIES):
        cols = []
        for _ in range(n):
            c = [rng.randint(-cfg.coord_range, cfg.coord_range) for _ in range(n)]
            s = lex_sign(c)
            if s == 0:
                break
            cols.append([s * x for x in c])
        if len(cols) < n:
            continue
        M = RMatrix(zip(*cols))
        if not M.is_full_rank():
            continue
        A = RMatrix(canonical_scale(r) for r in gram_schmidt(M.rows))
        if A.is_row_orthogonal() and all(lex_sign(c) > 0 for c in zip(*A.rows)):
            return A
    raise RuntimeError("no lex-positive orthogonal matrix found")


def random_square(rng: random.Random, n: int, cfg: SampleConfig, lex_positive_bias: float = 0.5) -> RMatrix:
    """Mixed-sign square matrix; with the given probability its columns are made lex-positive."""
    rows = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
    if rng.random() < lex_positive_bias:
        for j in range(n):
            s = lex_sign([r[j] for r in rows])
            for r in rows:
                r[j] *= s if s else 1
    return RMatrix(rows)
