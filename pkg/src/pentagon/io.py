"""JSON interchange documents holding named exact maps.

A document looks like::

    {"field": {"kind": "rational"},
     "spaces": {"M": 2},
     "maps": {"phi": {"codomain": ["M", "M"], "domain": ["M", "M"],
                      "matrix": [["1", "0", "0", "0"], ...]}},
     "meta": {}}

Entries are strings: ``"a/b"`` in lowest terms with the sign on the numerator
for the rationals, least nonnegative residues for a prime field. Emission is
canonical (sorted keys, two-space indent) so ``emit(parse(text)) == text`` for
canonical input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .errors import FieldError, InputError, ParseError, ShapeError
from .field import GF, QQ, Field, is_prime
from .linalg import Mat
from .tensor import LegMap, Space, legs_dim


@dataclass
class Document:
    field: Field
    spaces: dict = dc_field(default_factory=dict)
    maps: dict = dc_field(default_factory=dict)
    meta: dict = dc_field(default_factory=dict)

    def space(self, label: str) -> Space:
        return Space(label, self.spaces[label])

    def add(self, name: str, X: LegMap) -> "Document":
        if X.field != self.field:
            raise ShapeError(f"map {name!r} is over {X.field}, document over {self.field}")
        for s in X.codomain + X.domain:
            known = self.spaces.get(s.label)
            if known is not None and known != s.dim:
                raise ShapeError(f"space {s.label!r} declared with dims {known} and {s.dim}")
            self.spaces[s.label] = s.dim
        self.maps[name] = X
        return self

    def get(self, name: str) -> LegMap:
        try:
            return self.maps[name]
        except KeyError:
            raise InputError(f"document has no map named {name!r}") from None

    def has(self, name: str) -> bool:
        return name in self.maps


def field_to_json(F: Field) -> dict:
    return {"kind": "rational"} if F.p is None else {"kind": "prime", "p": F.p}


def field_from_json(obj) -> Field:
    if not isinstance(obj, dict):
        raise ParseError("field must be an object")
    kind = obj.get("kind")
    if kind == "rational":
        return QQ
    if kind == "prime":
        p = obj.get("p")
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise FieldError(f"modulus {p!r} is not a prime")
        return GF(p)
    raise ParseError(f"unknown field kind {kind!r}")


def to_json(doc: Document) -> dict:
    maps = {}
    for name, X in doc.maps.items():
        dense = X.mat.to_dense()
        maps[name] = {
            "codomain": [s.label for s in X.codomain],
            "domain": [s.label for s in X.domain],
            "matrix": [[doc.field.format(x) for x in row] for row in dense],
        }
    return {"field": field_to_json(doc.field), "spaces": dict(doc.spaces), "maps": maps,
            "meta": doc.meta}


def emit(doc: Document) -> str:
    return json.dumps(to_json(doc), indent=2, sort_keys=True) + "\n"


def _legs(doc_spaces: dict, labels, name: str, side: str):
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ParseError(f"map {name!r}: {side} must be a list of space labels")
    out = []
    for label in labels:
        if label not in doc_spaces:
            raise ShapeError(f"map {name!r}: undeclared space {label!r}")
        out.append(Space(label, doc_spaces[label]))
    return tuple(out)


def from_json(obj) -> Document:
    if not isinstance(obj, dict):
        raise ParseError("document must be a JSON object")
    unknown = set(obj) - {"field", "spaces", "maps", "meta"}
    if unknown:
        raise ParseError(f"unknown top-level keys {sorted(unknown)}")
    F = field_from_json(obj.get("field", {"kind": "rational"}))
    spaces = obj.get("spaces", {})
    if not isinstance(spaces, dict):
        raise ParseError("spaces must be an object")
    for label, d in spaces.items():
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise ShapeError(f"space {label!r} must have a positive integer dimension")
    meta = obj.get("meta", {})
    if not isinstance(meta, dict):
        raise ParseError("meta must be an object")
    doc = Document(F, dict(spaces), {}, meta)
    maps = obj.get("maps", {})
    if not isinstance(maps, dict):
        raise ParseError("maps must be an object")
    for name, m in maps.items():
        if not isinstance(m, dict) or set(m) != {"codomain", "domain", "matrix"}:
            raise ParseError(f"map {name!r} needs exactly codomain, domain and matrix")
        cod = _legs(spaces, m["codomain"], name, "codomain")
        dom = _legs(spaces, m["domain"], name, "domain")
        grid = m["matrix"]
        nr, nc = legs_dim(cod), legs_dim(dom)
        if not isinstance(grid, list) or len(grid) != nr:
            raise ShapeError(f"map {name!r}: expected {nr} rows")
        dense = []
        for row in grid:
            if not isinstance(row, list) or len(row) != nc:
                raise ShapeError(f"map {name!r}: expected rows of length {nc}")
            dense.append([F.parse(x) for x in row])
        doc.maps[name] = LegMap(cod, dom, Mat.from_dense(F, dense, nc))
    return doc


def parse(text: str) -> Document:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return from_json(obj)


def read_document(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    return parse(text)


def write_document(path: str, doc: Document):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit(doc))
