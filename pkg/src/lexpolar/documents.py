"""JSON interchange documents with exact rationals written as strings.

Every document is an object ``{"schema": 1, "kind": ..., <payload>}``.
Rationals are ``"p/q"`` or ``"p"`` strings; JSON numbers are accepted only
when they are integers.  Unknown fields are rejected.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .classic_polarity import CredalPolytope
from .conditioning import Conditioned, ConditionedCredal, EventSubset
from .cones import CoherenceCertificate, GeneratorCone, HalfspaceCone
from .exact import Gamble, RMatrix, to_rational
from .lex_polarity import LCredalWitness, SemispaceFamily
from .matrix_procedures import LPDecomposition
from .separation import SeparationWitness, WitnessKind

SCHEMA = 1

_FIELDS = {
    "gamble": {"coords"},
    "matrix": {"rows"},
    "generator-cone": {"dim", "generators"},
    "halfspace-cone": {"dim", "normals"},
    "semispace-family": {"dim", "matrices"},
    "credal-polytope": {"dim", "vertices"},
    "event": {"ambient", "indices"},
    "certificate": {"coherent", "axiom", "witness", "weights", "reason"},
    "verdict": {"answer", "witness"},
    "lp-decomposition": {"L", "P"},
    "separation-witness": {"witness_kind", "v", "A"},
    "l-credal-set": {"dim", "defining_gambles", "members"},
    "conditioned": {"result", "certificate"},
    "conditioned-credal": {"result", "defined"},
}


class DocumentError(ValueError):
    """Malformed or inconsistent interchange document."""


def _q(x: Fraction) -> str:
    return str(x)


def _vec(v) -> list[str]:
    return [_q(x) for x in v]


def _mat(M: RMatrix) -> list[list[str]]:
    return [_vec(r) for r in M.rows]


def _rat(x: Any) -> Fraction:
    if isinstance(x, float):
        raise DocumentError(f"float literal {x!r} is not an exact rational")
    try:
        return to_rational(x)
    except (TypeError, ValueError) as e:
        raise DocumentError(str(e)) from None


def _gvec(x: Any) -> Gamble:
    if not isinstance(x, list):
        raise DocumentError(f"expected a list of rationals, got {type(x).__name__}")
    return Gamble([_rat(v) for v in x])


def _gmat(x: Any) -> RMatrix:
    if not isinstance(x, list) or not all(isinstance(r, list) for r in x):
        raise DocumentError("expected a list of rows")
    return RMatrix([[_rat(v) for v in r] for r in x])


def _int(x: Any, name: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise DocumentError(f"{name} must be an integer")
    return x


def to_document(obj: Any) -> dict:
    """The document (a JSON-ready dict) describing ``obj``."""
    if isinstance(obj, Gamble):
        body = {"kind": "gamble", "coords": _vec(obj)}
    elif isinstance(obj, RMatrix):
        body = {"kind": "matrix", "rows": _mat(obj)}
    elif isinstance(obj, GeneratorCone):
        body = {"kind": "generator-cone", "dim": obj.dim, "generators": [_vec(g) for g in obj.generators]}
    elif isinstance(obj, HalfspaceCone):
        body = {"kind": "halfspace-cone", "dim": obj.dim, "normals": [_vec(v) for v in obj.normals]}
    elif isinstance(obj, SemispaceFamily):
        body = {"kind": "semispace-family", "dim": obj.dim, "matrices": [_mat(A) for A in obj.matrices]}
    elif isinstance(obj, CredalPolytope):
        body = {"kind": "credal-polytope", "dim": obj.dim, "vertices": [_vec(v) for v in obj.vertices]}
    elif isinstance(obj, EventSubset):
        body = {"kind": "event", "ambient": obj.ambient, "indices": list(obj.indices)}
    elif isinstance(obj, CoherenceCertificate):
        body = {
            "kind": "certificate",
            "coherent": obj.coherent,
            "axiom": obj.axiom,
            "witness": _vec(obj.witness) if obj.witness is not None else None,
            "weights": _vec(obj.weights) if obj.weights is not None else None,
            "reason": obj.reason,
        }
    elif isinstance(obj, LPDecomposition):
        body = {"kind": "lp-decomposition", "L": _mat(obj.L), "P": _mat(obj.P)}
    elif isinstance(obj, SeparationWitness):
        body = {
            "kind": "separation-witness",
            "witness_kind": obj.kind.value,
            "v": _vec(obj.v) if obj.v is not None else None,
            "A": _mat(obj.A) if obj.A is not None else None,
        }
    elif isinstance(obj, LCredalWitness):
        body = {
            "kind": "l-credal-set",
            "dim": obj.dim,
            "defining_gambles": [_vec(g) for g in obj.defining_gambles],
            "members": [_mat(P) for P in obj.sample_members],
        }
    elif isinstance(obj, Conditioned):
        body = {
            "kind": "conditioned",
            "result": to_document(obj.cone),
            "certificate": to_document(obj.certificate),
        }
    elif isinstance(obj, ConditionedCredal):
        body = {
            "kind": "conditioned-credal",
            "result": to_document(obj.polytope) if obj.polytope is not None else None,
            "defined": obj.defined,
        }
    else:
        raise TypeError(f"no document kind for {type(obj).__name__}")
    return {"schema": SCHEMA, **body}


def verdict(answer: bool, witness: Any = None) -> dict:
    w = _vec(witness) if witness is not None else None
    return {"schema": SCHEMA, "kind": "verdict", "answer": answer, "witness": w}


def from_document(doc: Any) -> Any:
    """Rebuild the domain object from a parsed document."""
    if not isinstance(doc, dict):
        raise DocumentError("a document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise DocumentError(f"unsupported schema version {doc.get('schema')!r}")
    kind = doc.get("kind")
    if kind not in _FIELDS:
        raise DocumentError(f"unknown document kind {kind!r}")
    extra = set(doc) - _FIELDS[kind] - {"schema", "kind"}
    if extra:
        raise DocumentError(f"unknown fields for {kind}: {sorted(extra)}")
    missing = _FIELDS[kind] - set(doc)
    if missing:
        raise DocumentError(f"missing fields for {kind}: {sorted(missing)}")
    try:
        return _build(kind, doc)
    except DocumentError:
        raise
    except (TypeError, ValueError) as e:
        raise DocumentError(f"invalid {kind} document: {e}") from None


def _build(kind: str, d: dict) -> Any:
    if kind == "gamble":
        return _gvec(d["coords"])
    if kind == "matrix":
        return _gmat(d["rows"])
    if kind == "generator-cone":
        return GeneratorCone(_int(d["dim"], "dim"), [_gvec(g) for g in d["generators"]])
    if kind == "halfspace-cone":
        return HalfspaceCone(_int(d["dim"], "dim"), [_gvec(v) for v in d["normals"]])
    if kind == "semispace-family":
        return SemispaceFamily(_int(d["dim"], "dim"), [_gmat(A) for A in d["matrices"]])
    if kind == "credal-polytope":
        return CredalPolytope(_int(d["dim"], "dim"), [_gvec(v) for v in d["vertices"]])
    if kind == "event":
        return EventSubset(_int(d["ambient"], "ambient"), [_int(i, "index") for i in d["indices"]])
    if kind == "certificate":
        return CoherenceCertificate(
            bool(d["coherent"]),
            d["axiom"],
            _gvec(d["witness"]) if d["witness"] is not None else None,
            tuple(_rat(x) for x in d["weights"]) if d["weights"] is not None else None,
            d["reason"],
        )
    if kind == "lp-decomposition":
        return LPDecomposition(_gmat(d["L"]), _gmat(d["P"]))
    if kind == "separation-witness":
        return SeparationWitness(
            WitnessKind(d["witness_kind"]),
            v=_gvec(d["v"]) if d["v"] is not None else None,
            A=_gmat(d["A"]) if d["A"] is not None else None,
        )
    if kind == "l-credal-set":
        return LCredalWitness(
            _int(d["dim"], "dim"),
            [_gvec(g) for g in d["defining_gambles"]],
            [_gmat(P) for P in d["members"]],
        )
    if kind == "conditioned":
        return Conditioned(from_document(d["result"]), from_document(d["certificate"]))
    if kind == "conditioned-credal":
        return ConditionedCredal(from_document(d["result"]) if d["result"] is not None else None)
    if kind == "verdict":
        return d["answer"], (_gvec(d["witness"]) if d["witness"] is not None else None)
    raise DocumentError(f"unknown document kind {kind!r}")  # pragma: no cover


def dumps(obj: Any) -> str:
    doc = obj if isinstance(obj, dict) else to_document(obj)
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str) -> Any:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not valid JSON: {e}") from None
    return from_document(doc)
