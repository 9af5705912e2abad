"""Small hand-checkable relations shipped with the CLI.

Each witness is stored as raw generators so that ``linrel example`` prints
the readable spanning set rather than an orthonormalized one.
"""

import numpy as np

from .document import RelationDocument

# name -> (dim_h, dim_k, generators as rows of (x, y))
_GENERATORS = {
    "identity": (2, 2, [[1, 0, 1, 0], [0, 1, 0, 1]]),
    "zero": (1, 1, [[1, 0]]),
    "pure-multivalued": (1, 2, [[0, 1, 0], [0, 0, 1]]),
    # span{(e1, e1), (0, e2)}: dom = span{e1}, mul = span{e2}
    "t0": (2, 2, [[1, 0, 1, 0], [0, 0, 0, 1]]),
}

WITNESSES = tuple(_GENERATORS)


def witness_document(name, field_tag="real") -> RelationDocument:
    m, n, gens = _GENERATORS[name]
    dtype = np.complex128 if field_tag == "complex" else np.float64
    return RelationDocument(field_tag, m, n, np.array(gens, dtype=dtype), name)


def witness(name, field_tag="real"):
    return witness_document(name, field_tag).to_relation()


def t0(field_tag="real"):
    return witness("t0", field_tag)
