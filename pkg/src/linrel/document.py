"""JSON relation documents.

A document lists generators of the graph, one (m+n)-vector per line::

    {
      "field": "complex",
      "dim_h": 2,
      "dim_k": 2,
      "label": "t0",
      "generators": [
        [[1.0, 0.0], [0.0, 0.0], [1.0, 0.0], [0.0, 0.0]],
        [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]
      ]
    }

Complex scalars are ``[re, im]`` pairs; real documents use plain numbers.
Floats are written with ``repr`` so values survive a round trip exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import relation as rel
from .errors import ParseError
from .relation import LinearRelation
from .subspace import DEFAULT_TOL, ToleranceConfig


@dataclass(frozen=True, eq=False)
class RelationDocument:
    field_tag: str
    dim_h: int
    dim_k: int
    generators: np.ndarray  # k x (m+n)
    label: Optional[str] = None

    def to_relation(self, tol: ToleranceConfig = DEFAULT_TOL) -> LinearRelation:
        return rel.from_generators(self.generators.T, self.dim_h, self.dim_k, tol, self.field_tag)

    @classmethod
    def from_relation(cls, T: LinearRelation, label: Optional[str] = None) -> "RelationDocument":
        return cls(T.field_tag, T.dim_h, T.dim_k, np.array(T.basis.T), label)


def _scalar(value, field_tag, gi, ci):
    where = f"generators[{gi}][{ci}]"
    if field_tag == "complex":
        if isinstance(value, list):
            if len(value) != 2 or not all(_is_number(v) for v in value):
                raise ParseError("complex entries must be [re, im] pairs of numbers", field=where)
            return complex(value[0], value[1])
        if _is_number(value):
            return complex(value)
        raise ParseError(f"expected a number or [re, im] pair, got {value!r}", field=where)
    if not _is_number(value):
        raise ParseError(f"expected a real number, got {value!r}", field=where)
    return float(value)


def _is_number(v):
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _int_field(obj, key):
    if key not in obj:
        raise ParseError("missing required field", field=key)
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise ParseError(f"expected a nonnegative integer, got {v!r}", field=key)
    return v


def parse_document(text: str) -> RelationDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    field_tag = obj.get("field", "real")
    if field_tag not in ("real", "complex"):
        raise ParseError(f"must be 'real' or 'complex', got {field_tag!r}", field="field")
    m = _int_field(obj, "dim_h")
    n = _int_field(obj, "dim_k")
    gens = obj.get("generators")
    if not isinstance(gens, list):
        raise ParseError("must be a list of vectors", field="generators")
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise ParseError("must be a string", field="label")
    dtype = np.complex128 if field_tag == "complex" else np.float64
    G = np.zeros((len(gens), m + n), dtype=dtype)
    for gi, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != m + n:
            size = len(g) if isinstance(g, list) else "not a list"
            raise ParseError(f"generator {gi} has length {size}, expected {m + n}",
                             field=f"generators[{gi}]")
        for ci, v in enumerate(g):
            G[gi, ci] = _scalar(v, field_tag, gi, ci)
    return RelationDocument(field_tag, m, n, G, label)


def _fmt(z, field_tag):
    if field_tag == "complex":
        return [float(z.real), float(z.imag)]
    return float(z.real)


def dump_document(doc: RelationDocument) -> str:
    lines = ["{", f'  "field": {json.dumps(doc.field_tag)},', f'  "dim_h": {doc.dim_h},',
             f'  "dim_k": {doc.dim_k},']
    if doc.label is not None:
        lines.append(f'  "label": {json.dumps(doc.label)},')
    rows = [json.dumps([_fmt(z, doc.field_tag) for z in g]) for g in doc.generators]
    if rows:
        lines.append('  "generators": [')
        lines.append(",\n".join("    " + r for r in rows))
        lines.append("  ]")
    else:
        lines.append('  "generators": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse(text: str, tol: ToleranceConfig = DEFAULT_TOL) -> LinearRelation:
    return parse_document(text).to_relation(tol)


def serialize(T: LinearRelation, label: Optional[str] = None) -> str:
    return dump_document(RelationDocument.from_relation(T, label))
