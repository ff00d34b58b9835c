"""JSON round-trips, digests, and the re-verification gate on load."""

import hashlib
import json
import random

import pytest

import helpers
from centfrob import jsonio
from centfrob.canon import JordanSpec, invariant_factors
from centfrob.centralizer import centralizer_basis
from centfrob.decide import decide, decide_batch
from centfrob.errors import ConsistencyError, ParseError, UnsupportedField
from centfrob.fields import gf, rationals
from centfrob.frobsys import jordan_block_system, verify_system
from centfrob.matrices import Mat, jordan_block
from centfrob.polys import Poly

Q = rationals()


def test_field_round_trip():
    assert jsonio.field_to_json(Q) == "Q"
    assert jsonio.field_to_json(gf(7)) == {"Fp": 7}
    assert jsonio.field_from_json("Q") is Q
    assert jsonio.field_from_json({"Fp": 7}) is gf(7)
    with pytest.raises(ParseError):
        jsonio.field_from_json("R")
    with pytest.raises(ParseError):
        jsonio.field_from_json({"Fp": "7"})
    with pytest.raises(ParseError):
        jsonio.field_from_json({"Fp": True})
    with pytest.raises(UnsupportedField):
        jsonio.field_from_json({"Fp": 4})


def test_matrix_round_trip():
    m = Mat(Q, [[1, "1/2"], ["-3/4", 0]])
    obj = jsonio.matrix_to_json(m)
    assert obj == {"field": "Q", "rows": [["1", "1/2"], ["-3/4", "0"]]}
    assert jsonio.matrix_from_json(obj) == m

    m5 = Mat(gf(5), [[4, 2], [0, 1]])
    assert jsonio.matrix_from_json(jsonio.matrix_to_json(m5)) == m5


def test_matrix_field_override_reinterprets_entries():
    obj = {"field": "Q", "rows": [["6", "-1"], ["0", "2"]]}
    m = jsonio.matrix_from_json(obj, field_override=gf(5))
    assert m == Mat(gf(5), [[1, 4], [0, 2]])


def test_matrix_parse_errors():
    for bad in (
        {"rows": [["1"]]},  # missing field
        {"field": "Q", "rows": [["1"]], "extra": 1},
        {"field": "Q", "rows": []},
        {"field": "Q", "rows": [[]]},
        {"field": "Q", "rows": [["1", "2"], ["3"]]},  # ragged
        {"field": "Q", "rows": [[1]]},  # numbers must be strings
        {"field": "Q", "rows": [["1/0"]]},
        {"field": "Q", "rows": "nope"},
        "nope",
    ):
        with pytest.raises(ParseError):
            jsonio.matrix_from_json(bad)


def test_matrix_digest_matches_manual_hash():
    m = Mat(Q, [[1, 2], [3, 4]])
    text = json.dumps(jsonio.matrix_to_json(m), separators=(",", ":"))
    assert jsonio.matrix_digest(m) == hashlib.sha256(text.encode()).hexdigest()
    # digest distinguishes fields even with equal row text
    m5 = Mat(gf(5), [[1, 2], [3, 4]])
    assert jsonio.matrix_digest(m) != jsonio.matrix_digest(m5)


def test_poly_round_trip():
    f = Poly(Q, ["1/2", 0, 1])
    assert jsonio.poly_to_json(f) == ["1/2", "0", "1"]
    assert jsonio.poly_from_json(Q, ["1/2", "0", "1"]) == f
    assert jsonio.poly_from_json(Q, []).is_zero
    with pytest.raises(ParseError):
        jsonio.poly_from_json(Q, "x^2")
    with pytest.raises(ParseError):
        jsonio.poly_from_json(Q, [1])


def test_invariant_factors_round_trip():
    inv = invariant_factors(Mat(Q, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]))
    obj = jsonio.invariant_factors_to_json(inv)
    assert obj["field"] == "Q"
    back = jsonio.invariant_factors_from_json(obj)
    assert back.chain == inv.chain
    with pytest.raises(ParseError):
        jsonio.invariant_factors_from_json({"field": "Q", "chain": []})


def test_jordan_spec_round_trip():
    spec = JordanSpec(((Q.scalar(1), 2), (Q.scalar(0), 1)))
    obj = jsonio.jordan_spec_to_json(spec)
    assert obj == {
        "blocks": [{"eig": "1", "size": 2}, {"eig": "0", "size": 1}],
        "field": "Q",
    }
    assert jsonio.jordan_spec_from_json(obj) == spec
    # field override reinterprets the eigenvalues
    spec5 = jsonio.jordan_spec_from_json(obj, field_override=gf(5))
    assert spec5.field is gf(5)
    for bad in (
        {"blocks": [], "field": "Q"},
        {"blocks": [{"eig": "1"}], "field": "Q"},
        {"blocks": [{"eig": "1", "size": 0}], "field": "Q"},
        {"blocks": [{"eig": "1", "size": True}], "field": "Q"},
        {"blocks": [{"eig": 1, "size": 2}], "field": "Q"},
    ):
        with pytest.raises(ParseError):
            jsonio.jordan_spec_from_json(bad)


def test_basis_round_trip():
    basis = centralizer_basis(jordan_block(3, Q.zero))
    obj = jsonio.basis_to_json(basis)
    back = jsonio.basis_from_json(obj)
    assert back.dimension == basis.dimension
    assert back.same_span(basis)
    obj_bad = dict(obj, ambient=4)
    with pytest.raises(ParseError):
        jsonio.basis_from_json(obj_bad)


def test_system_round_trip_reverifies():
    system = jordan_block_system(3, Q)
    obj = jsonio.system_to_json(system)
    assert obj["verified"] is True
    assert obj["base"] == "ground"
    back = jsonio.system_from_json(obj)
    assert back.verified
    assert back.xs == system.xs
    assert back.ys == system.ys


def test_system_load_rejects_false_verified_claim():
    system = jordan_block_system(3, Q)
    obj = jsonio.system_to_json(system)
    # tamper: swap two Y entries but keep the verified flag
    obj["Y"][0], obj["Y"][1] = obj["Y"][1], obj["Y"][0]
    with pytest.raises(ConsistencyError):
        jsonio.system_from_json(obj)
    # the same payload marked unverified loads fine
    obj["verified"] = False
    loaded = jsonio.system_from_json(obj)
    assert not loaded.verified
    assert not verify_system(loaded).passed


def test_report_json_shape_and_key_order():
    report = decide(Mat(Q, [[0, 0, 0], [0, 1, 1], [0, 0, 1]]))
    obj = jsonio.report_to_json(report)
    assert list(obj) == [
        "input_digest",
        "invariant_factors",
        "frobenius",
        "separable_frobenius",
        "diagonalizable_over_closure",
        "split_over_base",
        "jordan",
        "witness_system",
        "separability_probe",
        "warnings",
    ]
    assert obj["frobenius"] == "yes"
    assert obj["separable_frobenius"] == "no"
    probe = obj["separability_probe"]
    assert list(probe) == [
        "scalars_of_base",
        "center_of_algebra",
        "relative_centralizer",
    ]
    for entry in probe.values():
        assert set(entry) == {"solvable", "element"}
        assert entry["solvable"] in ("yes", "no")
        assert (entry["element"] is None) == (entry["solvable"] == "no")
    # serialization is byte-stable
    assert jsonio.dumps(obj) == jsonio.dumps(jsonio.report_to_json(report))


def test_report_json_for_non_split_input():
    report = decide(Mat(Q, [[0, -1], [1, 0]]))
    obj = jsonio.report_to_json(report)
    assert obj["split_over_base"] == "no"
    assert obj["jordan"] is None
    assert obj["witness_system"] is None
    assert obj["separability_probe"] is None


def test_batch_entry_json():
    out = decide_batch([Mat.identity(Q, 1), Mat(Q, [[1, 2, 3]])])
    good = jsonio.batch_entry_to_json(out[0])
    assert good["frobenius"] == "yes"
    bad = jsonio.batch_entry_to_json(out[1])
    assert bad["kind"] == "NonSquare"
    assert "error" in bad


def test_random_matrix_json_round_trips():
    rng = random.Random(131)
    for field in (Q, gf(11)):
        for _ in range(25):
            m = helpers.rand_matrix(field, rng.randrange(1, 5), rng.randrange(1, 5), rng)
            assert jsonio.matrix_from_json(jsonio.matrix_to_json(m)) == m
