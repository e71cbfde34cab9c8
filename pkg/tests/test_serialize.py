import json

import pytest

from umbral_clifford.almansi import almansi_decompose
from umbral_clifford.errors import SchemaError
from umbral_clifford.sampling import random_polynomial, trial_rng
from umbral_clifford.serialize import deserialize, serialize
from umbral_clifford.suites import run_suite
from umbral_clifford.umbral import CalculusConfig
from umbral_clifford.verify import IdentityReport

X1SQ_JSON = (
    '{"k":3,"config":{"n":2,"family":"continuum","h":null,"raising_variant":"plain"},"components":['
    '{"n":2,"terms":[{"coef":"1/4","monomial":[2,0],"blade":[]},{"coef":"-1/2","monomial":[1,1],"blade":[1,2]},'
    '{"coef":"-1/4","monomial":[0,2],"blade":[]}]},'
    '{"n":2,"terms":[{"coef":"-1/4","monomial":[1,0],"blade":[1]},{"coef":"1/4","monomial":[0,1],"blade":[2]}]},'
    '{"n":2,"terms":[{"coef":"-1/2","monomial":[0,0],"blade":[]}]}]}'
)


def test_x1_squared_golden(P):
    res = almansi_decompose(CalculusConfig(2), P("x1^2"), 3)
    assert serialize(res) == X1SQ_JSON
    assert serialize(deserialize(X1SQ_JSON)) == X1SQ_JSON
    assert deserialize(X1SQ_JSON) == res


def test_polynomial_round_trip_200():
    for t in range(200):
        n = 1 + t % 3
        f = random_polynomial(n, 4, trial_rng(77, t), max_terms=6)
        s = serialize(f)
        assert deserialize(s) == f
        assert serialize(deserialize(s)) == s


def test_config_and_reports_round_trip():
    cfg = CalculusConfig(3, "central", "2/3", "symmetrized")
    assert deserialize(serialize(cfg)) == cfg
    reps = run_suite("gamma-commute", cfg, 2, 2, seed=1)
    assert deserialize(serialize(reps)) == reps
    bad = IdentityReport("x", cfg, 1, 1, 0, False, tuple(random_polynomial(3, 1, trial_rng(1, k)) for k in range(3)))
    s = serialize([bad])
    assert serialize(deserialize(s)) == s


def _poly_doc(coef="1", mono=(0, 0), blade=()):
    return json.dumps({"n": 2, "terms": [{"coef": coef, "monomial": list(mono), "blade": list(blade)}]})


@pytest.mark.parametrize("doc,path", [
    (_poly_doc(coef="0"), "/terms/0/coef"),
    (_poly_doc(blade=(2, 1)), "/terms/0/blade"),
    (_poly_doc(blade=(3,)), "/terms/0/blade"),
    (_poly_doc(coef="2/4"), "/terms/0/coef"),
    (_poly_doc(coef="3/1"), "/terms/0/coef"),
    (_poly_doc(coef="0.5"), "/terms/0/coef"),
    (_poly_doc(mono=(1,)), "/terms/0/monomial"),
    (_poly_doc(mono=(-1, 0)), "/terms/0/monomial/0"),
    ('{"n":2,"terms":[{"coef":"1","monomial":[1,0],"blade":[]},{"coef":"1","monomial":[0,0],"blade":[]}]}', "/terms/1"),
    ('{"n":0,"terms":[]}', "/n"),
    ('{"n":2}', "/"),
    ('{"k":1,"config":{"n":2,"family":"forward","h":null,"raising_variant":"plain"},"components":[]}', "/config/h"),
    ('{"k":2,"config":{"n":2,"family":"continuum","h":null,"raising_variant":"plain"},"components":[]}', "/components"),
    ('[{"identity_name":"x"}]', "/0"),
    ("not json", "/"),
])
def test_schema_violations(doc, path):
    with pytest.raises(SchemaError) as exc:
        deserialize(doc)
    assert exc.value.path == path


def test_serialize_rejects_unknown_payload():
    with pytest.raises(TypeError):
        serialize(object())
