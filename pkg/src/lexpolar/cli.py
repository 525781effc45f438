"""Command-line front end over the JSON interchange documents.

Decision commands (check, member, lmember, equiv) exit 0 for yes and 1 for
no.  Any error exits 2 with a one-line message on stderr.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from . import documents as docs
from .classic_polarity import (
    CredalPolytope,
    halfspaces_to_generators,
    map_C,
    map_C_inverse,
    polar_of_generators,
    polar_of_halfspaces,
)
from .conditioning import (
    EventSubset,
    condition_cone,
    condition_credal,
    condition_orthogonal,
    condition_stochastic,
)
from .cones import GeneratorCone, HalfspaceCone, is_coherent_almost, is_coherent_desirable, member_posi, posi_weights
from .exact import Gamble, RMatrix
from .lex_polarity import (
    LCredalWitness,
    SemispaceFamily,
    is_coherent_semispaces,
    lozenge_member,
    map_G_member,
)
from .matrix_procedures import equiv_class_test, lp_decompose, orthogonal_from_stochastic, stochastic_from_orthogonal
from .separation import separate_almost, separate_lex

SEED_ENV = "LEXPOLAR_SEED"
YES, NO, ERROR = 0, 1, 2


class UsageError(ValueError):
    pass


def _read(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return docs.loads(text)


def _want(obj, types, what: str):
    if not isinstance(obj, types):
        raise UsageError(f"expected {what}, got a {type(obj).__name__}")
    return obj


def _emit(obj) -> None:
    sys.stdout.write(docs.dumps(obj))


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


# commands -------------------------------------------------------------------


def cmd_check(a) -> int:
    K = _want(_read(a.cone), (GeneratorCone, HalfspaceCone, SemispaceFamily), "a cone")
    if isinstance(K, GeneratorCone):
        cert = is_coherent_desirable(K)
    elif isinstance(K, HalfspaceCone):
        cert = is_coherent_almost(K)
    else:
        cert = is_coherent_semispaces(K)
    _emit(cert)
    return YES if cert.coherent else NO


def cmd_member(a) -> int:
    K = _want(_read(a.cone), (GeneratorCone, HalfspaceCone, SemispaceFamily), "a cone")
    g = _want(_read(a.gamble), Gamble, "a gamble")
    if isinstance(K, GeneratorCone):
        w = posi_weights(K, g)
        _emit(docs.verdict(w is not None, w))
        return YES if w is not None else NO
    ans = K.contains(g) if isinstance(K, HalfspaceCone) else lozenge_member(K, g)
    _emit(docs.verdict(ans))
    return YES if ans else NO


def cmd_polar(a) -> int:
    K = _want(_read(a.cone), (GeneratorCone, HalfspaceCone), "a generator or halfspace cone")
    _emit(polar_of_generators(K) if isinstance(K, GeneratorCone) else polar_of_halfspaces(K))
    return YES


def cmd_to_credal(a) -> int:
    K = _want(_read(a.cone), HalfspaceCone, "a halfspace cone")
    _emit(map_C(K))
    return YES


def cmd_from_credal(a) -> int:
    P = _want(_read(a.polytope), CredalPolytope, "a credal polytope")
    _emit(map_C_inverse(P))
    return YES


def _outside_samples(K: GeneratorCone, rng: random.Random, tries: int):
    n = K.dim
    yield Gamble.zero(n)
    for _ in range(tries):
        g = Gamble(rng.randint(-3, 3) for _ in range(n))
        if not member_posi(K, g):
            yield g


def cmd_to_lcredal(a) -> int:
    K = _want(_read(a.cone), GeneratorCone, "a generator cone")
    if a.witnesses < 0:
        raise UsageError("--witnesses must be nonnegative")
    seed = _default_seed() if a.seed is None else a.seed
    rng = random.Random(seed)
    members: list[RMatrix] = []
    for gbar in _outside_samples(K, rng, 50 * max(a.witnesses, 1)):
        if len(members) >= a.witnesses:
            break
        P = stochastic_from_orthogonal(separate_lex(K, gbar).A)
        if P not in members:
            members.append(P)
    _emit(LCredalWitness(K.dim, K.generators, members))
    return YES


def cmd_lmember(a) -> int:
    K = _want(_read(a.cone), GeneratorCone, "a generator cone")
    P = _want(_read(a.matrix), RMatrix, "a matrix")
    ans = map_G_member(K, P)
    _emit(docs.verdict(ans))
    return YES if ans else NO


def cmd_condition(a) -> int:
    obj = _read(a.object)
    Pi = _want(_read(a.on), EventSubset, "an event")
    if isinstance(obj, (GeneratorCone, HalfspaceCone, SemispaceFamily)):
        _emit(condition_cone(obj, Pi))
    elif isinstance(obj, CredalPolytope):
        _emit(condition_credal(obj, Pi))
    elif isinstance(obj, RMatrix):
        mode = a.as_ or ("stochastic" if obj.is_stochastic() else "orthogonal")
        _emit(condition_stochastic(obj, Pi) if mode == "stochastic" else condition_orthogonal(obj, Pi))
    else:
        raise UsageError(f"cannot condition a {type(obj).__name__}")
    return YES


def cmd_decompose(a) -> int:
    A = _want(_read(a.matrix), RMatrix, "a matrix")
    _emit(lp_decompose(A, a.shift))
    return YES


def cmd_gs(a) -> int:
    P = _want(_read(a.matrix), RMatrix, "a matrix")
    _emit(orthogonal_from_stochastic(P))
    return YES


def cmd_stochastic(a) -> int:
    A = _want(_read(a.matrix), RMatrix, "a matrix")
    _emit(stochastic_from_orthogonal(A, a.shift))
    return YES


def cmd_separate(a) -> int:
    K = _want(_read(a.cone), (GeneratorCone, HalfspaceCone, SemispaceFamily), "a cone")
    g = _want(_read(a.gamble), Gamble, "a gamble")
    _emit(separate_almost(K, g) if isinstance(K, HalfspaceCone) else separate_lex(K, g))
    return YES


def cmd_equiv(a) -> int:
    P = _want(_read(a.stochastic), RMatrix, "a matrix")
    A = _want(_read(a.orthogonal), RMatrix, "a matrix")
    ans = equiv_class_test(P, A)
    _emit(docs.verdict(ans))
    return YES if ans else NO


def cmd_generators(a) -> int:
    K = _want(_read(a.cone), HalfspaceCone, "a halfspace cone")
    _emit(halfspaces_to_generators(K))
    return YES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lexpolar", description="Exact polarity and conditioning for desirable gambles.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *args, help):
        sp = sub.add_parser(name, help=help)
        for arg in args:
            sp.add_argument(arg, help="document path, or - for stdin")
        sp.set_defaults(fn=fn)
        return sp

    add("check", cmd_check, "cone", help="coherence verdict with certificate")
    add("member", cmd_member, "cone", "gamble", help="membership of a gamble")
    add("polar", cmd_polar, "cone", help="classical polar cone")
    add("to-credal", cmd_to_credal, "cone", help="credal set of a halfspace cone")
    add("from-credal", cmd_from_credal, "polytope", help="cone of a credal polytope")
    sp = add("to-lcredal", cmd_to_lcredal, "cone", help="sampled members of the L-credal set")
    sp.add_argument("--witnesses", type=int, default=3)
    sp.add_argument("--seed", type=int, default=None, help=f"defaults to ${SEED_ENV} or 0")
    add("lmember", cmd_lmember, "cone", "matrix", help="L-credal membership of a stochastic matrix")
    sp = add("condition", cmd_condition, "object", help="condition on an event")
    sp.add_argument("--on", required=True, help="event document")
    sp.add_argument("--as", dest="as_", choices=("stochastic", "orthogonal"), default=None)
    sp = add("decompose", cmd_decompose, "matrix", help="L P factorisation")
    sp.add_argument("--shift", type=int, default=0)
    add("gs", cmd_gs, "matrix", help="canonical orthogonal matrix of a stochastic one")
    sp = add("stochastic", cmd_stochastic, "matrix", help="stochastic matrix of an orthogonal one")
    sp.add_argument("--shift", type=int, default=0)
    add("separate", cmd_separate, "cone", "gamble", help="separation witness")
    add("equiv", cmd_equiv, "stochastic", "orthogonal", help="same semispace test")
    add("generators", cmd_generators, "cone", help="generators of a halfspace cone")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, TypeError, OSError, RuntimeError) as e:
        sys.stderr.write(f"lexpolar {args.command}: {e}\n")
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
