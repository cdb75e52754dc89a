import json

import pytest

from superhopf.core import Field
from superhopf.hcp import check_hcp, gallery_gl
from superhopf.hopf import additive_law, check_hopf_axioms
from superhopf.hopfmod import exterior_hopf, random_hopf_module, random_surjection_data, theta_retraction
from superhopf.hyper import gl_lie, random_lie_superalgebra
from superhopf.io import SchemaError, digest, emit, read_document


def _round_trip(obj):
    text = emit(obj)
    kind, back = read_document(text)
    assert emit(back) == text
    assert digest(emit(back)) == digest(text)
    return back


def test_gl11_presentation_round_trip():
    O_G, H = gallery_gl(1, 1)
    back = _round_trip(O_G)
    assert check_hopf_axioms(back).ok
    assert check_hcp(_round_trip(H)).ok


def test_other_documents_round_trip():
    _round_trip(additive_law(("T",), ("E",), 4, Field(5)))
    _round_trip(gl_lie(1, 1))
    _round_trip(random_lie_superalgebra(4))
    _round_trip(random_hopf_module(exterior_hopf(["w1", "w2"]), 2))
    D = _round_trip(random_surjection_data(9))
    assert theta_retraction(D).report.ok


def test_emitted_json_is_canonical():
    text = emit(gl_lie(1, 1))
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=1) + "\n"


def test_antipode_solved_when_omitted():
    doc = {"kind": "hopf", "truncation": 3, "generators": [{"name": "T"}],
           "coproduct": {"T": [["T", "1"], ["1", "T"], ["T", "T"]]}, "counit": {"T": 0}}
    _, H = read_document(json.dumps(doc))
    assert H.S(H.A.gen("T")) == H.A.parse("-T + T^2 - T^3")


@pytest.mark.parametrize("text,position", [
    ('{"kind": "hopf",\n "generators": }', "line 2 column 16"),
    ('{"kind": "nope"}', "$.kind"),
    ('{"kind": "hopf", "generators": [{"name": "T"}], "coproduct": {"T": [["T +", "1"]]}, "counit": {}}',
     "$.coproduct.T[0][0][3]"),
    ('{"kind": "hopf", "generators": [{"name": "T", "parity": 2}], "coproduct": {}, "counit": {}}',
     "$.generators[0].parity"),
    ('{"kind": "lie", "basis": [["h", 0]], "brackets": [["h", "x", {}]]}', "$.brackets[0]"),
])
def test_schema_errors_carry_positions(text, position):
    with pytest.raises(SchemaError) as err:
        read_document(text)
    assert err.value.position == position
