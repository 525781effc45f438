import io
import json
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import P_MINUS_ONE, WORKED_A, gamble_any, square_matrices
from lexpolar import cli
from lexpolar.classic_polarity import CredalPolytope
from lexpolar.conditioning import EventSubset, condition_cone
from lexpolar.cones import GeneratorCone, HalfspaceCone, is_coherent_desirable
from lexpolar.documents import DocumentError, dumps, loads, to_document
from lexpolar.exact import Gamble, RMatrix
from lexpolar.lex_polarity import SemispaceFamily
from lexpolar.matrix_procedures import lp_decompose
from lexpolar.separation import separate_almost, separate_lex


def test_round_trip_examples():
    e1 = Gamble.unit(3, 0)
    assert loads(dumps(e1)) == e1
    g = loads('{"schema": 1, "kind": "gamble", "coords": ["1/3", 2]}')
    assert g[0] == Fraction(1, 3) and loads(dumps(g)) == g
    with pytest.raises(DocumentError):
        loads('{"schema": 1, "kind": "gamble", "coords": ["1/0"]}')


@pytest.mark.parametrize(
    "text",
    [
        '{"schema": 1, "kind": "gamble", "coords": [0.5]}',
        '{"schema": 2, "kind": "gamble", "coords": ["1"]}',
        '{"schema": 1, "kind": "polygon", "coords": ["1"]}',
        '{"schema": 1, "kind": "gamble", "coords": ["1"], "extra": 0}',
        '{"schema": 1, "kind": "gamble"}',
        '{"schema": 1, "kind": "matrix", "rows": [["1", "0"], ["1"]]}',
        '{"schema": 1, "kind": "generator-cone", "dim": 3, "generators": [["1", "0"]]}',
        '{"schema": 1, "kind": "event", "ambient": 3, "indices": [0]}',
        '{"schema": 1, "kind": "credal-polytope", "dim": 2, "vertices": [["1", "1"]]}',
        "[1, 2",
    ],
)
def test_malformed_documents_are_rejected(text):
    with pytest.raises(DocumentError):
        loads(text)


def _objects():
    K = GeneratorCone(2, [(1, -1), (1, 0), (0, 1)])
    return [
        WORKED_A,
        K,
        GeneratorCone(2, []),
        HalfspaceCone(2, [(1, 0)]),
        SemispaceFamily(3, [WORKED_A]),
        CredalPolytope(3, [(1, 0, 0), ("1/2", "1/4", "1/4")]),
        EventSubset(4, [1, 3]),
        is_coherent_desirable(GeneratorCone(2, [(1, 0), (0, 1), (-1, -1)])),
        lp_decompose(WORKED_A),
        separate_lex(K, Gamble([-1, 0])),
        separate_almost(HalfspaceCone(2, [(1, 0)]), Gamble([-1, 5])),
        condition_cone(HalfspaceCone(2, [(1, 0)]), EventSubset(2, [2])),
    ]


@pytest.mark.parametrize("obj", _objects(), ids=lambda o: type(o).__name__)
def test_round_trip_of_every_kind(obj):
    assert loads(dumps(obj)) == obj


@given(gamble_any())
def test_gamble_round_trip(g):
    assert loads(dumps(g)) == g


@given(st.integers(1, 4).flatmap(lambda n: square_matrices(n, st.fractions(-5, 5, max_denominator=7))))
def test_matrix_round_trip(M):
    assert loads(dumps(M)) == M
    assert json.loads(dumps(M)) == to_document(M)


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()


def _write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(dumps(obj))
    return str(p)


def test_cli_examples(tmp_path):
    vac = _write(tmp_path, "vac.json", GeneratorCone.vacuous(3))
    P = _write(tmp_path, "P.json", P_MINUS_ONE)
    code, out, _ = _run(["lmember", vac, P])
    assert code == 0 and loads(out) == (True, None)
    code, out, _ = _run(["gs", P])
    assert code == 0 and loads(out) == WORKED_A
    E = _write(tmp_path, "E.json", EventSubset(3, [2, 3]))
    code, out, _ = _run(["condition", P, "--on", E])
    assert loads(out) == RMatrix([["1/2", "1/2"], [0, 1]])


def test_cli_exit_codes(tmp_path):
    bad = _write(tmp_path, "bad.json", GeneratorCone(2, [(1, 0), (0, 1), (-1, -1)]))
    code, out, _ = _run(["check", bad])
    assert code == 1 and loads(out).axiom == "A4"
    g = tmp_path / "g.json"
    g.write_text('{"schema": 1, "kind": "gamble", "coords": ["1/0"]}')
    code, out, err = _run(["member", bad, str(g)])
    assert code == 2 and out == "" and "zero denominator" in err
    code, _, err = _run(["gs", str(tmp_path / "missing.json")])
    assert code == 2 and err


def test_cli_reads_stdin(tmp_path, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(dumps(WORKED_A)))
    code, out, _ = _run(["stochastic", "-"])
    assert code == 0 and loads(out) == P_MINUS_ONE


def test_to_lcredal_seed_from_environment(tmp_path, monkeypatch):
    K = _write(tmp_path, "K.json", GeneratorCone(2, [(1, -1), (1, 0), (0, 1)]))
    monkeypatch.setenv(cli.SEED_ENV, "4")
    a = _run(["to-lcredal", K, "--witnesses", "3"])
    b = _run(["to-lcredal", K, "--witnesses", "3", "--seed", "4"])
    assert a == b and a[0] == 0
    W = loads(a[1])
    assert 1 <= len(W.sample_members) <= 3
    monkeypatch.setenv(cli.SEED_ENV, "x")
    assert _run(["to-lcredal", K])[0] == 2
