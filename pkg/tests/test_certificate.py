import copy
import json

import pytest

from dscurves.certificate import (SCHEMA_VERSION, SchemaError,
                                  admissible_eps_set, canonical_json,
                                  hasse_certificate, verify_certificate)
from dscurves.errors import InvalidInput
from dscurves.fpoly import Poly, parse_poly
from dscurves.splitting import QuaternionData

KNOWN_TRIPLES = [
    (3, "t^3+t^2+t+2", "t+1"),
    (3, "t^4+t^3+2t+1", "t^2+1"),
    (3, "t^5+2t+1", "t+2"),
]


def make_cert(q, ptxt, stxt, ntxt="1", eps=None, seed=0):
    y = parse_poly("t", q)
    D = QuaternionData(ram1=parse_poly(ptxt, q), ram2=parse_poly(stxt, q))
    n_poly = parse_poly(ntxt, q)
    if eps is None:
        eps = admissible_eps_set(n_poly)[0]
    return hasse_certificate(D, y, n_poly, eps, seed=seed)


def test_admissible_eps_set():
    one = parse_poly("1", 3)
    assert admissible_eps_set(one) == [1, 2]           # even degree: all units
    assert admissible_eps_set(parse_poly("t", 3)) == [2]  # odd degree: nonsquares
    assert admissible_eps_set(parse_poly("t", 5)) == [2, 3]


def test_known_triples_valid_q3():
    for q, ptxt, stxt in KNOWN_TRIPLES:
        cert = make_cert(q, ptxt, stxt)
        assert cert.valid
        assert cert.data["schema_version"] == SCHEMA_VERSION
        assert cert.data["d"] == 2
        assert cert.data["exponent_n"] == (q * q - 1) ** 2


def test_serialization_is_byte_stable():
    cert = make_cert(3, "t^3+t^2+t+2", "t+1")
    text = cert.to_json()
    assert text == cert.to_json()
    assert text.endswith("\n")
    assert json.loads(text) == cert.data
    assert canonical_json(json.loads(text)) == text


def test_round_trip_verifies():
    cert = make_cert(3, "t^3+t^2+t+2", "t+1")
    code, failures = verify_certificate(json.loads(cert.to_json()))
    assert code == 0 and failures == []


def test_verdict_independent_of_n_poly_hypotheses():
    # hypotheses 3 and 4 depend only on (D, y); changing n must not
    # change the criterion section verdicts
    base = make_cert(3, "t^3+t^2+t+2", "t+1")
    other = make_cert(3, "t^3+t^2+t+2", "t+1", ntxt="t^2+1")
    for key in ("ram1_excluded", "ram2_excluded", "mu_obstruction"):
        assert base.data["criterion"][key] == other.data["criterion"][key]
    assert other.valid


def test_invalid_triple_yields_invalid_certificate():
    cert = make_cert(3, "t^3+t^2+2", "t+1")
    assert not cert.valid
    assert cert.data["verdict"] == "INVALID"
    assert cert.data["reasons"]
    code, _ = verify_certificate(json.loads(cert.to_json()))
    assert code == 1  # consistent, but certifies nothing


def test_precondition_errors():
    q = 3
    y = parse_poly("t", q)
    D = QuaternionData(ram1=parse_poly("t^3+t^2+t+2", q),
                       ram2=parse_poly("t+1", q))
    with pytest.raises(InvalidInput):
        hasse_certificate(D, y, parse_poly("t^2+2t+1", q), 1)  # n not sq-free
    with pytest.raises(InvalidInput):
        hasse_certificate(D, y, parse_poly("t", q), 1)  # n not coprime to y
    with pytest.raises(InvalidInput):
        hasse_certificate(D, y, parse_poly("t+2", q), 1)  # eps not admissible
    D_even = QuaternionData(ram1=parse_poly("t^2+1", q),
                            ram2=parse_poly("t+1", q))
    with pytest.raises(InvalidInput):
        hasse_certificate(D_even, y, Poly.one(q), 1)  # even total degree


# ---------------------------------------------------------------------------
# mutation battery: every single perturbation must flip verification


def mutations(data):
    d = copy.deepcopy(data)
    d["exponent_n"] += 1
    yield "exponent_n", d

    d = copy.deepcopy(data)
    d["radicand"] = "t"
    yield "radicand", d

    for key in ("field_splits", "y_ramified", "ram1_excluded", "mu_obstruction"):
        d = copy.deepcopy(data)
        d["criterion"][key] = not d["criterion"][key]
        yield "criterion." + key, d

    d = copy.deepcopy(data)
    d["local"]["witnesses"] = d["local"]["witnesses"][:-1]
    yield "dropped witness", d

    d = copy.deepcopy(data)
    d["local"]["witnesses"][0]["c"] = 0
    yield "witness c=0", d

    d = copy.deepcopy(data)
    d["local"]["lambda_cutoff"] += 2
    yield "lambda_cutoff", d

    d = copy.deepcopy(data)
    d["local"]["fast_m"] = (d["local"]["fast_m"] or 0) + 1
    yield "fast_m", d

    d = copy.deepcopy(data)
    d["verdict"] = "INVALID"
    yield "verdict", d


def test_mutation_battery():
    data = json.loads(make_cert(3, "t^3+t^2+t+2", "t+1").to_json())
    for name, mutated in mutations(data):
        code, failures = verify_certificate(mutated)
        assert code == 1, "mutation %r was not detected" % name
        assert failures


def test_schema_errors():
    data = json.loads(make_cert(3, "t^3+t^2+t+2", "t+1").to_json())

    d = copy.deepcopy(data)
    del d["exponent_n"]
    with pytest.raises(SchemaError):
        verify_certificate(d)

    d = copy.deepcopy(data)
    d["schema_version"] = 2
    with pytest.raises(SchemaError):
        verify_certificate(d)

    d = copy.deepcopy(data)
    d["y"] = "not a polynomial!!"
    with pytest.raises(SchemaError):
        verify_certificate(d)

    d = copy.deepcopy(data)
    d["extra_field"] = 1
    with pytest.raises(SchemaError):
        verify_certificate(d)
