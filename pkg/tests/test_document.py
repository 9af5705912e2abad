import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linrel import document
from linrel import relation as rel
from linrel.errors import ParseError
from linrel.generate import CLASSES, RandomSpec, random_relation
from linrel.witnesses import WITNESSES, witness_document

T0_TEXT = """{
  "field": "real",
  "dim_h": 2,
  "dim_k": 2,
  "label": "t0",
  "generators": [
    [1.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0]
  ]
}
"""


def test_parse_t0(t0):
    doc = document.parse_document(T0_TEXT)
    assert (doc.field_tag, doc.dim_h, doc.dim_k, doc.label) == ("real", 2, 2, "t0")
    assert rel.equals(doc.to_relation(), t0)


def test_dump_is_canonical():
    assert document.dump_document(document.parse_document(T0_TEXT)) == T0_TEXT


def test_complex_entries():
    text = json.dumps({"field": "complex", "dim_h": 1, "dim_k": 1,
                       "generators": [[[1.0, 0.0], [0.0, 2.0]]]})
    T = document.parse(text)
    assert T.field_tag == "complex"
    B = T.basis[:, 0]
    np.testing.assert_allclose(B[1] / B[0], 2j)


def test_complex_accepts_plain_numbers():
    doc = document.parse_document('{"field": "complex", "dim_h": 1, "dim_k": 0, "generators": [[3]]}')
    assert doc.generators.dtype == np.complex128 and doc.generators[0, 0] == 3


def test_empty_generators():
    T = document.parse('{"dim_h": 2, "dim_k": 1, "generators": []}')
    assert T.dim == 0 and T.field_tag == "real"


@pytest.mark.parametrize("name", WITNESSES)
@pytest.mark.parametrize("fld", ["real", "complex"])
def test_witness_round_trip(name, fld):
    doc = witness_document(name, fld)
    text = document.dump_document(doc)
    back = document.parse_document(text)
    np.testing.assert_array_equal(back.generators, doc.generators)
    assert document.dump_document(back) == text


@pytest.mark.parametrize("text, match", [
    ("{not json", "line 1"),
    ("[1, 2]", "top level"),
    ('{"dim_k": 1, "generators": []}', "field 'dim_h'"),
    ('{"dim_h": -1, "dim_k": 1, "generators": []}', "nonnegative"),
    ('{"dim_h": true, "dim_k": 1, "generators": []}', "nonnegative"),
    ('{"field": "quaternion", "dim_h": 1, "dim_k": 1, "generators": []}', "field 'field'"),
    ('{"dim_h": 1, "dim_k": 1}', "field 'generators'"),
    ('{"dim_h": 1, "dim_k": 1, "generators": [[1, 2], [1]]}', "generator 1 has length 1"),
    ('{"dim_h": 1, "dim_k": 1, "generators": [[1, "x"]]}', r"generators\[0\]\[1\]"),
    ('{"field": "complex", "dim_h": 1, "dim_k": 1, "generators": [[[1, 2, 3], 0]]}', r"\[re, im\]"),
    ('{"dim_h": 1, "dim_k": 1, "label": 5, "generators": []}', "field 'label'"),
])
def test_errors(text, match):
    with pytest.raises(ParseError, match=match):
        document.parse_document(text)


def test_json_error_line_number():
    with pytest.raises(ParseError) as info:
        document.parse_document('{\n  "dim_h": 1,\n  oops\n}')
    assert info.value.line == 3


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**63 - 1), cls=st.sampled_from(CLASSES),
       field=st.sampled_from(["real", "complex"]))
def test_serialize_round_trip(seed, cls, field):
    T = random_relation(RandomSpec(6, cls, seed, field))
    text = document.serialize(T, "x")
    back = document.parse(text)
    assert (back.dim_h, back.dim_k, back.field_tag) == (T.dim_h, T.dim_k, T.field_tag)
    assert rel.gap(back, T) <= 1e-12
