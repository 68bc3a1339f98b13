"""JSON documents: matrix literals and monoid descriptions.

A monoid document has an ``ambient`` ({"n", "zero_positions"}) and one of

* ``holes``: matrix literals,
* ``generators`` plus ``level``: matrix literals and a fundamental level,
* ``fundamental``: a level k, giving the level-k fundamental monoid,
* ``holes_vec`` / ``generators_vec``: first-row vectors (a_12, ..., a_1n),
  in which case the ambient may be omitted and defaults to P(d+1, N).
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .matrix import PatternAmbient, UnipotentMatrix
from .monoid import UnipotentMonoid, from_generators, from_holes, fundamental_monoid


def matrix_from_literal(lit) -> UnipotentMatrix:
    try:
        n = int(lit["n"])
        entries = {(int(i), int(j)): int(v) for i, j, v in lit.get("entries", [])}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix literal {lit!r}: {exc}") from None
    return UnipotentMatrix.from_entries(n, entries)


def ambient_from_json(doc) -> PatternAmbient:
    try:
        n = int(doc["n"])
        zeros = frozenset((int(i), int(j)) for i, j in doc.get("zero_positions", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad ambient {doc!r}: {exc}") from None
    return PatternAmbient(n, zeros)


def _vectors(doc, key):
    try:
        vecs = [tuple(int(v) for v in row) for row in doc[key]]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad {key}: {exc}") from None
    return vecs


def _vector_ambient(doc, vecs) -> PatternAmbient:
    if "ambient" in doc:
        amb = ambient_from_json(doc["ambient"])
    elif "dim" in doc:
        amb = PatternAmbient.first_row(int(doc["dim"]) + 1)
    elif vecs:
        amb = PatternAmbient.first_row(len(vecs[0]) + 1)
    else:
        raise ParseError("vector form needs an ambient or a dim when the list is empty")
    if not amb.is_first_row:
        raise ParseError("vector shorthand requires a first-row ambient P(n, N)")
    if any(len(v) != amb.dim for v in vecs):
        raise ParseError(f"every vector must have {amb.dim} coordinates")
    return amb


def _level(doc) -> int:
    try:
        return int(doc["level"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("generator form needs an integer 'level'") from None


def monoid_from_document(doc) -> UnipotentMonoid:
    """Build and validate a monoid; validation errors propagate unchanged."""
    if not isinstance(doc, dict):
        raise ParseError("monoid document must be a JSON object")
    if "holes_vec" in doc:
        vecs = _vectors(doc, "holes_vec")
        return from_holes(_vector_ambient(doc, vecs), vecs)
    if "generators_vec" in doc:
        vecs = _vectors(doc, "generators_vec")
        return from_generators(_vector_ambient(doc, vecs), vecs, _level(doc))
    if "ambient" not in doc:
        raise ParseError("monoid document needs an 'ambient'")
    amb = ambient_from_json(doc["ambient"])
    if "fundamental" in doc:
        return fundamental_monoid(amb, int(doc["fundamental"]))
    if "holes" in doc:
        return from_holes(amb, [matrix_from_literal(h) for h in doc["holes"]])
    if "generators" in doc:
        return from_generators(amb, [matrix_from_literal(g) for g in doc["generators"]],
                               _level(doc))
    raise ParseError("monoid document needs 'holes', 'generators', 'fundamental', "
                     "'holes_vec' or 'generators_vec'")


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None


def load_monoid(path) -> UnipotentMonoid:
    return monoid_from_document(load_json(path))


def monoid_to_document(S: UnipotentMonoid) -> dict:
    amb = S.ambient
    if amb.is_first_row:
        return {"ambient": amb.to_json(), "holes_vec": [list(h) for h in S.sorted_holes]}
    return {"ambient": amb.to_json(),
            "holes": [amb.to_matrix(h).to_literal() for h in S.sorted_holes]}
