from fractions import Fraction

import pytest

from dyadic import catalog, codec, explorer
from dyadic.errors import OutOfRange
from dyadic.region import AbstractPoint, pt
from dyadic.subbase import encode, validate
from dyadic.tword import all_words, parse, restrict


def test_names_and_get():
    assert set(catalog.names()) == {"gray", "w", "y", "z", "z0", "z1", "z2", "a", "np_demo"}
    assert catalog.get("GRAY") is catalog.get("gray")
    with pytest.raises(KeyError):
        catalog.get("nope")
    assert not catalog.get("a").region_backed and catalog.get("w").region_backed


def test_w_encodings(W):
    assert encode(W, pt(0, component=3), 5) == "__000"
    for i in range(4):
        a, b = divmod(i, 2)
        for x in ("1/3", "1/2", "1"):
            assert encode(W, pt(x, component=i), 6) == f"{a}{b}" + codec.gray_encode(x, 4)


def test_w_glued_origin(W):
    codes = {encode(W, pt(0, component=i), 6) for i in range(4)}
    assert codes == {"__0000"}


def test_y_encodings(Y):
    assert encode(Y, pt("1/4"), 5) == "__100"
    assert encode(Y, pt("3/4"), 5) == "__100"
    assert encode(Y, pt("1/3"), 5) == codec.gray_encode("1/3", 5)
    assert encode(Y, pt("1/2"), 5) == "_1000"


def test_z_interleaving(H):
    x, y = Fraction(1, 3), Fraction(2, 3)
    gx, gy = codec.gray_encode(x, 4), codec.gray_encode(y, 4)
    assert encode(H, pt(x, y), 8) == "".join(a + b for a, b in zip(gx, gy))
    assert encode(H, pt("1/2", "1/2"), 4) == "__11"


def test_z1_prefixes():
    H1 = catalog.get("z1").subbase
    # (1/2,1/3) is missing, yet every even prefix of q still has a realizer nearby
    q = catalog.Q_STREAM
    for n in range(1, 5):
        w = restrict(parse(q), 2 * n)
        assert explorer.in_KS(H1, w)
    assert encode(catalog.get("z").subbase, pt("1/2", "1/3"), 8) == "_0110101"


def test_z2_abstract_points():
    H2 = catalog.get("z2").subbase
    c0 = encode(H2, AbstractPoint("x0"), 8)
    c1 = encode(H2, AbstractPoint("x1"), 8)
    assert c0 == "00110101" and c1 == "10110101"


def test_all_region_entries_validate():
    for name in ("gray", "w", "y", "z", "z0", "z1", "z2"):
        r = validate(catalog.get(name).subbase, 4)
        assert r.ok, (name, r.to_dict())


def test_limits_are_limits():
    for name in catalog.names():
        for p in catalog.get(name).limits:
            assert explorer.is_limit(p), (name, p)


# space A ------------------------------------------------------------------

def _a_compact_oracle(L):
    """Prefixes of codes of sample points, which is the compact part up to length L."""
    A = catalog.get("a").subbase
    out = set()
    for x in A.sample_points(L + 1, L + 1):
        code = A.encode(x, L)
        out.update(restrict(code, m) for m in range(L + 1))
    return out


@pytest.mark.parametrize("L", [3, 5, 6])
def test_a_oracle_against_samples(L):
    A = catalog.get("a").subbase
    K = _a_compact_oracle(L)
    assert {w for w in all_words(L) if A.in_ks(w)} == K


def test_a_encode():
    A = catalog.get("a").subbase
    assert A.encode(2, 6) == "__1000"
    assert A.encode(AbstractPoint("1"), 4) == "_100"
    assert A.encode(Fraction(1, 3), 4) == "0111"
    for bad in (0, Fraction(1, 2), Fraction(3, 2)):
        with pytest.raises(OutOfRange):
            A.encode(bad, 4)


def test_a_other_orders_are_everything():
    A = catalog.get("a").subbase
    for w in all_words(4):
        assert A.in_whks(w) and A.in_es(w)
        assert explorer.in_WhKS(A, w) and explorer.in_ES(A, w)
