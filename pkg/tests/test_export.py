import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL_Q, ODDBALL_Q
from mdsintersect import export
from mdsintersect.code import LinearCode, dual
from mdsintersect.construct import ConstructionGap, PairRequest, construct_pair, feasibility
from mdsintersect.field import field_of_order
from mdsintersect.quantum import EMPTY, build_pure_mds_aeaqecc, derive_params


def roundtrip(d: dict) -> dict:
    return export.loads(export.dumps(d))


@pytest.mark.parametrize("q", SMALL_Q + ODDBALL_Q[:6])
def test_field_roundtrip(q):
    F = field_of_order(q)
    d = export.field_to_dict(F)
    assert roundtrip(d) == d
    G = export.field_from_dict(roundtrip(d))
    assert (G.p, G.m, G.modulus) == (F.p, F.m, F.modulus)


def test_field_rejects_foreign_modulus():
    d = export.field_to_dict(field_of_order(8))
    d["modulus"] = [1, 0, 1, 1]  # x^3 + x^2 + 1, primitive but not lex-first
    with pytest.raises(export.SchemaError):
        export.field_from_dict(d)


@pytest.mark.parametrize(
    "tup",
    [(5, 5, 3, 3, 2), (4, 6, 3, 3, 1), (8, 10, 3, 7, 2), (7, 8, 3, 4, 1), (3, 4, 2, 2, 0), (8, 9, 2, 3, 2)],
)
def test_pair_roundtrip(tup):
    pair = construct_pair(PairRequest(*tup))
    d = export.pair_to_dict(pair)
    assert roundtrip(d) == d
    back = export.pair_from_dict(roundtrip(d))
    assert export.codes_equal(back.C1, pair.C1) and export.codes_equal(back.C2, pair.C2)
    assert (back.l_claimed, back.l_verified, back.route) == (pair.l_claimed, pair.l_verified, pair.route)
    assert back.intersection_basis == pair.intersection_basis
    assert export.pair_to_dict(back) == d


def test_code_without_parity_and_zero_code():
    F = field_of_order(5)
    C = construct_pair(PairRequest(5, 5, 3, 3, 2)).C1
    d = export.code_to_dict(C, with_parity=False)
    assert d["parity"] is None
    back = export.code_from_dict(roundtrip(d))
    assert back.G == C.G and back.H.rows == C.n - C.k
    Z = LinearCode.zero(F, 4)
    assert export.codes_equal(export.code_from_dict(roundtrip(export.code_to_dict(Z))), Z)


def test_code_k_mismatch():
    d = export.code_to_dict(construct_pair(PairRequest(5, 5, 3, 3, 2)).C1)
    d["k"] = 2
    with pytest.raises(export.SchemaError):
        export.code_from_dict(d)


@pytest.mark.parametrize("tup", [(5, 6, 2, 1, 1), (8, 10, 3, 7, 2), (8, 10, 5, 5, 2), (5, 6, 2, 3, 1)])
def test_request_and_verdict_roundtrip(tup):
    req = PairRequest(*tup)
    assert export.request_from_dict(roundtrip(export.request_to_dict(req))) == req
    v = feasibility(req)
    assert export.verdict_from_dict(roundtrip(export.verdict_to_dict(v))) == v


@pytest.mark.parametrize("tup", [(5, 6, 2, 3, 1), (8, 10, 3, 7, 2), (4, 6, 3, 3, 1)])
def test_params_roundtrip(tup):
    pair, p = build_pure_mds_aeaqecc(*tup)
    d = export.params_to_dict(p, pair=export.pair_to_dict(pair))
    back = roundtrip(d)
    assert back == d and back["label"] == str(p)
    assert export.params_from_dict(back) == p


def test_params_with_empty_signal():
    pair = construct_pair(PairRequest(7, 8, 4, 2, 2))
    p = derive_params(pair.C1, dual(pair.C2))
    d = roundtrip(export.params_to_dict(p))
    assert d["dx"] == EMPTY and d["dx"] != 0
    assert export.params_from_dict(d) == p


def test_report_roundtrip():
    r = export.RunReport(
        command="feasible",
        request=export.request_to_dict(PairRequest(5, 6, 2, 1, 1)),
        verdict=export.verdict_to_dict(feasibility(PairRequest(5, 6, 2, 1, 1))),
        verification={"mds": True},
        timing={"seconds": 0.25},
        exit_code=2,
    )
    d = export.report_to_dict(r)
    assert roundtrip(d) == d
    assert export.report_from_dict(roundtrip(d)) == r


@pytest.mark.parametrize(
    "kind, to_dict, from_dict",
    [
        ("request", lambda: export.request_to_dict(PairRequest(5, 5, 3, 3, 2)), export.request_from_dict),
        ("field", lambda: export.field_to_dict(field_of_order(7)), export.field_from_dict),
    ],
)
def test_schema_checks(kind, to_dict, from_dict):
    d = to_dict()
    assert d["schema_version"] == export.SCHEMA_VERSION and d["record"] == kind
    with pytest.raises(export.SchemaError):
        from_dict({**d, "schema_version": 99})
    with pytest.raises(export.SchemaError):
        from_dict({**d, "record": "other"})


def test_dumps_is_canonical_json():
    d = export.request_to_dict(PairRequest(5, 5, 3, 3, 2))
    text = export.dumps(d)
    assert text == json.dumps(d, indent=2, sort_keys=True)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 4, 5, 7]), st.data())
def test_roundtrip_property(q, data):
    n = data.draw(st.integers(2, q + 1))
    k1 = data.draw(st.integers(1, n - 1))
    k2 = data.draw(st.integers(1, n - 1))
    l = data.draw(st.integers(max(0, k1 + k2 - n), min(k1, k2)))
    req = PairRequest(q, n, k1, k2, l)
    if not feasibility(req).feasible:
        return
    try:
        pair = construct_pair(req)
    except ConstructionGap:  # covered in test_construct
        return
    d = export.pair_to_dict(pair)
    assert export.pair_to_dict(export.pair_from_dict(roundtrip(d))) == d
