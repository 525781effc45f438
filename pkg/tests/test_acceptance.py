"""Acceptance criteria 1-9, each at its stated size and exact tolerance.

Every check records one PASS/FAIL line, printed in the pytest terminal
summary.  ``python tests/test_acceptance.py`` runs them standalone.
"""

import functools
import io
import itertools
import json
import subprocess
import sys
import time
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import P_MINUS_ONE, WORKED_A, P_tau  # noqa: E402
from lexpolar import cli  # noqa: E402
from lexpolar.classic_polarity import canonical_form, generators_to_halfspaces, halfspaces_to_generators, map_C, map_C_inverse  # noqa: E402
from lexpolar.conditioning import (  # noqa: E402
    EventSubset,
    condition_cone,
    condition_orthogonal,
    condition_stochastic,
    lift,
    proper_events,
)
from lexpolar.cones import HalfspaceCone, member_posi  # noqa: E402
from lexpolar.documents import dumps, loads  # noqa: E402
from lexpolar.exact import Gamble, PreconditionError, lex_sign, mat_cols_lex_positive  # noqa: E402
from lexpolar.lex_polarity import (  # noqa: E402
    LCredalWitness,
    SemispaceFamily,
    lozenge_member,
    map_G_inverse_member,
    maximal_desirable_member,
    semispace_equal,
)
from lexpolar.matrix_procedures import equiv_class_test, lp_decompose, orthogonal_from_stochastic, stochastic_from_orthogonal  # noqa: E402
from lexpolar.separation import separate_almost, separate_lex  # noqa: E402
from lexpolar.testkit import (  # noqa: E402
    SampleConfig,
    random_coherent_cone,
    random_coherent_halfspace,
    random_credal_polytope,
    random_full_rank_stochastic,
    random_gamble,
    random_lexpos_orthogonal,
    random_positive_gamble,
    random_rational,
    random_square,
    sample_gambles,
    sampled_set_equal,
)

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
RESULTS: dict[int, str] = {}


def record(n, ok, detail, t0):
    RESULTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - t0:.1f}s) {detail}"
    return ok


# 1 ---------------------------------------------------------------------------


def criterion_1():
    t0 = time.perf_counter()
    P = stochastic_from_orthogonal(WORKED_A)
    ok = P == P_MINUS_ONE
    taus = (-1, -2, -5)
    gs_ok = [semispace_equal(orthogonal_from_stochastic(P_tau(t)), WORKED_A) for t in taus]
    fam_ok = [stochastic_from_orthogonal(WORKED_A, shift=-1 - t) == P_tau(t) for t in taus]
    ok = ok and all(gs_ok) and all(fam_ok)
    return record(1, ok, f"P(-1) exact={P == P_MINUS_ONE}, GS(P(tau))~A for tau={taus}: {gs_ok}", t0)


# 2 ---------------------------------------------------------------------------


def criterion_2(count=200):
    t0 = time.perf_counter()
    cfg = SampleConfig(seed=2, random_points=20)
    rng = cfg.rng()
    bad = []
    for k in range(count):
        n = 2 + k % 3
        K = random_coherent_halfspace(rng, cfg, n=n)
        back = map_C_inverse(map_C(K))
        if canonical_form(back) != canonical_form(K):
            bad.append(("canonical", K))
            continue
        v = sampled_set_equal(K.contains, back.contains, n, cfg, salt=k)
        if not v:
            bad.append((v.report(), K))
    for k in range(count):
        n = 2 + k % 3
        P = random_credal_polytope(rng, cfg, n=n)
        if map_C(map_C_inverse(P)).vertex_set() != P.vertex_set():
            bad.append(("vertices", P))
    return record(2, not bad, f"{count} cones + {count} polytopes, {len(bad)} disagreements", t0)


# 3 ---------------------------------------------------------------------------


def _facet_violators(K):
    """One gamble per facet of the closure of K, outside exactly that facet."""
    facets = generators_to_halfspaces(K).normals
    out = []
    for w in facets:
        c = sum((g for g in K.generators if w.dot(g) == 0), Gamble.zero(K.dim))
        ratios = [e.dot(c) / e.dot(w) for e in facets if e != w and e.dot(w) > 0]
        delta = min(ratios) / 2 if ratios else Fraction(1)
        g = c - w.scale(delta)
        assert not member_posi(K, g)
        out.append(g)
    return out


def criterion_3(count=100, witnesses=10):
    t0 = time.perf_counter()
    cfg = SampleConfig(seed=3, random_points=30)
    rng = cfg.rng()
    bad, sizes = [], []
    for k in range(count):
        n = 2 + k % 2
        K = random_coherent_cone(rng, cfg, n=n)
        gbars = _facet_violators(K)
        if len(gbars) > witnesses:
            bad.append(f"{len(gbars)} facets exceed the witness budget")
        for g in [Gamble.zero(n)] + sample_gambles(n, cfg, salt=k):
            if len(gbars) >= witnesses:
                break
            if not member_posi(K, g) and g not in gbars:
                gbars.append(g)
        sizes.append(len(gbars))
        As = [separate_lex(K, g).A for g in gbars]
        Ps = [stochastic_from_orthogonal(A) for A in As]
        inK = functools.lru_cache(maxsize=None)(lambda g, K=K: member_posi(K, g))
        for fam in (As, Ps):
            v = sampled_set_equal(inK, lambda g, fam=fam: lozenge_member(fam, g), n, cfg, salt=1000 + k)
            if not v:
                bad.append(v.report())
        W = LCredalWitness(n, K.generators, Ps)
        v = sampled_set_equal(inK, lambda g, W=W: map_G_inverse_member(W, g), n, cfg, salt=1000 + k)
        if not v:
            bad.append(v.report())

    # maximal cones: witness -> stochastic representative -> back to the same semispace
    for k in range(count):
        n = 2 + k % 2
        A0 = random_lexpos_orthogonal(rng, cfg, n)
        F = SemispaceFamily(n, [A0])
        gbar = next(g for g in sample_gambles(n, cfg, salt=3000 + k) if not maximal_desirable_member(A0, g))
        P = stochastic_from_orthogonal(separate_lex(F, gbar).A)
        if not (equiv_class_test(P, A0) and equiv_class_test(stochastic_from_orthogonal(A0), A0)):
            bad.append(f"maximal cone {A0} lost its class")
            continue
        v = sampled_set_equal(lambda g: lozenge_member([P], g), lambda g: maximal_desirable_member(A0, g), n, cfg, salt=4000 + k)
        if not v:
            bad.append(v.report())
    return record(3, not bad, f"{count} cones x {min(sizes)}-{max(sizes)} witnesses + {count} maximal cones, {len(bad)} disagreements", t0)


# 4 ---------------------------------------------------------------------------


def _decomposes(A):
    try:
        d = lp_decompose(A)
    except PreconditionError:
        return False
    return d.product() == A and all(x >= 0 for r in d.P.rows for x in r)


def criterion_4(count=500, samples=50):
    t0 = time.perf_counter()
    cfg = SampleConfig(seed=4)
    rng = cfg.rng()
    bad, positives = 0, 0
    for k in range(count):
        n = 3 + k % 2
        A = random_square(rng, n, cfg)
        gs = [Gamble.unit(n, j) for j in range(n)]
        gs += [random_positive_gamble(rng, n, cfg) for _ in range(samples - n)]
        a = mat_cols_lex_positive(A)
        b = _decomposes(A)
        c = all(lex_sign(A.apply(g)) > 0 for g in gs)
        positives += a
        bad += not (a == b == c)
    return record(4, bad == 0, f"{count} matrices ({positives} lex-positive), {bad} disagreements", t0)


# 5 ---------------------------------------------------------------------------


def criterion_5(count=100, shifts=(0, 1, 2)):
    t0 = time.perf_counter()
    cfg = SampleConfig(seed=5, random_points=10)
    rng = cfg.rng()
    bad, checks = [], 0
    for k in range(count):
        n = 3 + k % 2
        A = random_lexpos_orthogonal(rng, cfg, n)
        reps = [stochastic_from_orthogonal(A, s) for s in shifts]
        F = SemispaceFamily(n, [A])
        for Pi in proper_events(n):
            B = condition_orthogonal(A, Pi)
            Kc = condition_cone(F, Pi)
            if not Kc.coherent:
                bad.append(f"conditioned semispace incoherent on {Pi.indices}")
            for P in reps:
                checks += 1
                if not equiv_class_test(P, A) or not equiv_class_test(condition_stochastic(P, Pi), B):
                    bad.append(f"representative of {A} fails on {Pi.indices}")
            for g in sample_gambles(Pi.m, cfg, salt=k):
                checks += 1
                a = lozenge_member(Kc.cone, g)
                if not (a == maximal_desirable_member(B, g) == maximal_desirable_member(A, lift(g, Pi))):
                    bad.append(f"membership of {g} on {Pi.indices}")
    return record(5, not bad, f"{count} maximal cones, {checks} checks, {len(bad)} failures", t0)


# 6 ---------------------------------------------------------------------------


def criterion_6():
    t0 = time.perf_counter()
    out = condition_cone(HalfspaceCone(2, [(1, 0)]), EventSubset(2, [2]))
    whole_line = all(out.cone.contains(Gamble([x])) for x in (-5, -1, 0, 1, 5))
    c = out.certificate
    ok = whole_line and not c.coherent and c.axiom == "A6" and c.witness == Gamble([-1])
    return record(6, ok, f"result is R: {whole_line}, certificate {c.axiom} witness {c.witness}", t0)


# 7 ---------------------------------------------------------------------------


def _rational_gamble(rng, n, cfg):
    while True:
        g = Gamble(random_rational(rng, cfg) for _ in range(n))
        if not g.is_zero():
            return g


def criterion_7(count=1000, dichotomy=100):
    t0 = time.perf_counter()
    cfg = SampleConfig(seed=7)
    rng = cfg.rng()
    bad = []
    for k in range(count):
        n = 2 + k % 3
        K = random_coherent_halfspace(rng, cfg, n=n)
        g = random_gamble(rng, n, cfg)
        while K.contains(g):
            g = random_gamble(rng, n, cfg)
        v = separate_almost(K, g).v
        rays = halfspaces_to_generators(K).generators
        if not (
            all(x >= 0 for x in v)
            and v.total() == 1
            and v.dot(g) < 0
            and all(v.dot(r) >= 0 for r in rays)
            and map_C(K).contains(v)
        ):
            bad.append(f"classical witness {v} for {g}")
    pool = [random_coherent_cone(rng, cfg, n=2 + j % 3) for j in range(50)]
    for k in range(count):
        K = pool[k % len(pool)]
        n = K.dim
        g = Gamble.zero(n) if k % 10 == 0 else random_gamble(rng, n, cfg)
        while member_posi(K, g):
            g = random_gamble(rng, n, cfg)
        A = separate_lex(K, g).A
        sound = (
            A.is_row_orthogonal()
            and A.is_full_rank()
            and mat_cols_lex_positive(A)
            and all(lex_sign(A.apply(h)) > 0 for h in K.generators)
            and lex_sign(A.apply(g)) <= 0
        )
        if not sound:
            bad.append(f"lexicographic witness {A} for {g}")
            continue
        for _ in range(dichotomy):
            h = _rational_gamble(rng, n, cfg)
            if (lex_sign(A.apply(h)) > 0) == (lex_sign(A.apply(-h)) > 0):
                bad.append(f"dichotomy fails at {h}")
                break
    return record(7, not bad, f"{count} classical + {count} lexicographic witnesses, {len(bad)} failures", t0)


# 8 ---------------------------------------------------------------------------


def criterion_8(count=500):
    t0 = time.perf_counter()
    cfg = SampleConfig(seed=8)
    rng = cfg.rng()
    bad, towers = [], 0
    for k in range(count):
        n = 2 + k % 4
        P = random_full_rank_stochastic(rng, cfg, n)
        cache = {}
        for Pi in proper_events(n):
            Q = condition_stochastic(P, Pi)
            if Q.shape != (Pi.m, Pi.m) or not Q.is_full_rank_stochastic():
                bad.append(f"{P} on {Pi.indices}")
            cache[Pi.indices] = Q
        for Pi in proper_events(n):
            for size in range(1, Pi.m):
                for sub in itertools.combinations(Pi.indices, size):
                    D = EventSubset(n, sub)
                    towers += 1
                    if condition_stochastic(cache[Pi.indices], D.relative_to(Pi)) != cache[sub]:
                        bad.append(f"tower fails for {P}, {Pi.indices}, {sub}")
    return record(8, not bad, f"{count} matrices, {towers} nested pairs, {len(bad)} failures", t0)


# 9 ---------------------------------------------------------------------------


def _cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue()


def criterion_9(tmp_dir, count=100):
    t0 = time.perf_counter()
    commands = json.loads((CORPUS / "commands.json").read_text())
    used = {c[0] for c in commands}
    missing = {a for a in cli.build_parser()._subparsers._group_actions[0].choices} - used
    bad = [f"subcommand {m} not in the corpus" for m in sorted(missing)]
    for c in commands:
        runs = [
            subprocess.run([sys.executable, "-m", "lexpolar", *c], cwd=CORPUS, capture_output=True)
            for _ in range(2)
        ]
        if runs[0].stdout != runs[1].stdout or runs[0].returncode != runs[1].returncode or runs[0].stderr != runs[1].stderr:
            bad.append(f"non-deterministic: {' '.join(c)}")

    # criterion 1 through files
    tmp = Path(tmp_dir)
    code, out = _cli(["stochastic", str(CORPUS / "worked_A.json")])
    if code != 0 or loads(out) != P_MINUS_ONE:
        bad.append("stochastic(A) through files")
    for name in ("P_tau1", "P_tau2", "P_tau5"):
        code, out = _cli(["gs", str(CORPUS / f"{name}.json")])
        if code != 0 or not semispace_equal(loads(out), WORKED_A):
            bad.append(f"gs({name}) through files")

    # criterion 5 through files
    cfg = SampleConfig(seed=9, random_points=6)
    rng = cfg.rng()
    for k in range(count):
        n = 3 + k % 2
        A = random_lexpos_orthogonal(rng, cfg, n)
        fa = tmp / f"A{k}.json"
        fa.write_text(dumps(A))
        code, out = _cli(["stochastic", str(fa), "--shift", str(k % 3)])
        fp = tmp / f"P{k}.json"
        fp.write_text(out)
        ff = tmp / f"F{k}.json"
        ff.write_text(dumps(SemispaceFamily(n, [A])))
        for j, Pi in enumerate(proper_events(n)):
            fe = tmp / f"E{k}_{j}.json"
            fe.write_text(dumps(Pi))
            _, p_out = _cli(["condition", str(fp), "--on", str(fe)])
            _, a_out = _cli(["condition", str(fa), "--on", str(fe), "--as", "orthogonal"])
            fpc, fac = tmp / "Pc.json", tmp / "Ac.json"
            fpc.write_text(p_out)
            fac.write_text(a_out)
            if _cli(["equiv", str(fpc), str(fac)])[0] != 0:
                bad.append(f"equiv fails for cone {k} on {Pi.indices}")
            _, c_out = _cli(["condition", str(ff), "--on", str(fe)])
            K = loads(c_out).cone
            B = loads(a_out)
            for g in sample_gambles(Pi.m, cfg, salt=k):
                if lozenge_member(K, g) != maximal_desirable_member(B, g):
                    bad.append(f"conditioned family disagrees at {g}")
                    break
    detail = f"{len(commands)} corpus commands x2, {len(used)} subcommands, {count} file-format pipelines, {len(bad)} failures"
    return record(9, not bad, detail, t0)


# pytest entry points ------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8])
def test_criterion(n):
    assert globals()[f"criterion_{n}"](), RESULTS[n]


def test_criterion_9(tmp_path):
    assert criterion_9(tmp_path), RESULTS[9]


if __name__ == "__main__":
    import tempfile

    for n in range(1, 9):
        globals()[f"criterion_{n}"]()
        print(RESULTS[n], flush=True)
    with tempfile.TemporaryDirectory() as d:
        criterion_9(d)
    print(RESULTS[9])
