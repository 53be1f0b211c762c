import json

import jsonschema
import pytest

from dyadic import catalog, serialize
from dyadic.errors import IndexBeyondSubbase, SchemaError
from dyadic.region import AbstractPoint, pt
from dyadic.subbase import encode


@pytest.mark.parametrize("name", ["gray", "w", "y", "z0", "z2"])
def test_round_trip_codes(name):
    S = catalog.get(name).subbase
    doc = serialize.subbase_to_json(S, 6)
    jsonschema.validate(json.loads(serialize.dumps(doc)), serialize.schema("subbase"))
    T = serialize.subbase_from_json(doc)
    assert T.depth_limit == 6
    for comp in range(len(S.space.components)):
        dim = S.space.components[comp].dim
        for k in range(0, 17, 3):
            p = pt(*[f"{k}/16"] * dim, component=comp)
            if S.space.contains_point(p):
                assert encode(T, p, 6) == encode(S, p, 6)
    for a in S.space.abstract_points:
        assert encode(T, AbstractPoint(a), 6) == encode(S, AbstractPoint(a), 6)
    with pytest.raises(IndexBeyondSubbase):
        T.pair(6)


def test_deletions_and_gluings_survive():
    T = serialize.subbase_from_json(serialize.subbase_to_json(catalog.get("z2").subbase, 2))
    assert T.space.deletions == (pt("1/2", "1/3"),)
    W = serialize.subbase_from_json(serialize.subbase_to_json(catalog.get("w").subbase, 2))
    assert len(W.space.gluings[0]) == 4


def test_bad_documents(tmp_path):
    with pytest.raises(SchemaError):
        serialize.subbase_from_json({"format": "nope"})
    f = tmp_path / "broken.json"
    f.write_text("{not json")
    with pytest.raises(SchemaError):
        serialize.load_subbase(f)


def test_dumps_is_stable():
    doc = serialize.subbase_to_json(catalog.get("y").subbase, 3)
    assert serialize.dumps(doc) == serialize.dumps(json.loads(serialize.dumps(doc)))
