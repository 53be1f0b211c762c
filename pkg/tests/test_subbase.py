from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyadic import catalog, codec
from dyadic.errors import EmptyBase, IndexBeyondSubbase
from dyadic.region import pt
from dyadic.subbase import (classify, degree, degree_sup, encode, region_S, region_Sbar,
                            region_Sbarex, region_Sex, relativize, validate)
from dyadic.tword import all_words, compatible, digit, leq

words6 = st.text(alphabet="_01", max_size=6).map(lambda s: s.rstrip("_"))
dyadic_grid = st.integers(0, 64).map(lambda k: Fraction(k, 64))
thirds = st.integers(0, 48).map(lambda k: Fraction(k, 48))


def test_classify_and_encode_examples(G):
    assert classify(G, pt("1/4"), 0) == "0"
    assert classify(G, pt("1/2"), 0) == "_"
    assert encode(G, pt("1/2"), 4) == "_100"
    assert encode(G, pt("0"), 3) == "000"


def test_encode_matches_tent_iteration(G):
    # region-based classification against the pointwise tent orbit
    for k in range(97):
        x = Fraction(k, 96)
        assert encode(G, pt(x), 9) == codec.gray_encode(x, 9), x


def test_region_examples(G):
    assert str(region_S(G, "1")) == "(1/2,1]"
    # bottom leaves a position unconstrained
    assert str(region_S(G, "_1")) == "(1/4,3/4)"
    assert str(region_Sex(G, "_1", 2)) == "{1/2}"
    assert str(region_Sbar(G, "0")) == "[0,1/2]"
    assert region_S(G, "").member(pt("1/3"))


@given(words6, dyadic_grid)
@settings(max_examples=300)
def test_sex_is_exact_prefix(e, x):
    G = catalog.get("gray").subbase
    n = len(e)
    code = encode(G, pt(x), n).ljust(n, "_")
    assert region_Sex(G, e, n).member(pt(x)) == (code == e.ljust(n, "_"))


@given(words6)
@settings(max_examples=150)
def test_region_inclusions(e):
    G = catalog.get("gray").subbase
    n = len(e)
    sex, sbx = region_Sex(G, e, n), region_Sbarex(G, e, n)
    assert sex.is_subset(sbx)
    assert sex.is_subset(region_S(G, e))
    assert sbx.is_subset(region_Sbar(G, e))
    assert region_S(G, e).is_subset(region_Sbar(G, e))


@given(words6, words6)
@settings(max_examples=150)
def test_monotone(d, e):
    H = catalog.get("z").subbase
    if leq(d, e):
        assert region_S(H, e).is_subset(region_S(H, d))
        assert region_Sbar(H, e).is_subset(region_Sbar(H, d))


@given(words6, thirds, thirds)
@settings(max_examples=200)
def test_membership_through_codes_square(e, x, y):
    H = catalog.get("z").subbase
    code = encode(H, pt(x, y), len(e))
    assert region_S(H, e).member(pt(x, y)) == leq(e, code)
    assert region_Sbar(H, e).member(pt(x, y)) == compatible(e, code)


def test_validate_good(G, H, Y, W):
    for S in (G, H, Y, W):
        r = validate(S, 5)
        assert r.ok, (S.name, r.to_dict())
    assert validate(G, 5).to_dict()["proper"] == {"ok": True, "witness": None, "detail": ""}


def test_validate_np_demo():
    r = validate(catalog.get("np_demo").subbase, 3)
    assert r.pairing.ok and not r.proper.ok
    # the first failure in enumeration order
    assert r.proper.witness == "01"
    assert not r.ok


def test_validate_independence():
    r = validate(catalog.get("z0").subbase, 4)
    assert r.ok and r.independent.ok
    r = validate(catalog.get("np_demo").subbase, 3)
    assert not r.independent.ok and r.independent.witness == "01"


def test_relativize(G):
    T = relativize(G, "0")
    assert str(T.pair(0)[0]) == str(G.pair(1)[0] & region_S(G, "0"))
    for k in range(33):
        x = Fraction(k, 64)
        if x < Fraction(1, 2):
            assert encode(T, pt(x), 6) == encode(G, pt(x), 7)[1:]
    assert relativize(G, "") is G
    T2 = relativize(G, "_1")
    assert [str(r) for r in T2.pair(0)] == ["(1/4,1/2)", "(1/2,3/4)"]
    assert [str(r) for r in T2.pair(1)] == ["(3/8,5/8)", "(1/4,3/8) ∪ (5/8,3/4)"]


def test_relativize_nu_fills_gaps(G):
    T = relativize(G, "0_1")
    # free index 1 comes first, then indices from 3 on
    assert str(T.pair(0)[0]) == str(G.pair(1)[0] & region_S(G, "0_1"))
    assert str(T.pair(1)[1]) == str(G.pair(3)[1] & region_S(G, "0_1"))


def test_relativize_empty():
    with pytest.raises(EmptyBase):
        relativize(catalog.get("np_demo").subbase, "01")


def test_finite_subbase_limit():
    S = catalog.get("gray")
    from dyadic.subbase import DyadicSubbase
    F = DyadicSubbase(S.subbase.space, [S.subbase.pair(0), S.subbase.pair(1)], name="g2")
    assert F.depth_limit == 2
    with pytest.raises(IndexBeyondSubbase):
        F.pair(2)


def test_degree(G, H):
    assert degree(G, pt("1/2"), 8) == 1
    assert degree(G, pt("1/3"), 8) == 0
    assert degree(H, pt("1/2", "1/2"), 8) == 2
    g = degree_sup(G, 5)
    assert g.value == 1
    h = degree_sup(H, 6)
    assert h.value == 2
    assert h.to_dict()["note"] == "verified to horizon 6"


def test_degree_sup_oracle(G):
    # brute force over a fine dyadic grid agrees with the critical-point sampler
    brute = max(degree(G, pt(Fraction(k, 256)), 6) for k in range(257))
    assert brute == degree_sup(G, 6).value


def test_abstract_points(G):
    Z2 = catalog.get("z2").subbase
    from dyadic.region import AbstractPoint
    x0 = AbstractPoint("x0")
    code = encode(Z2, x0, 8)
    stream = Z2.space.abstract_points["x0"]
    assert code == "".join(digit(stream, k) for k in range(8)).rstrip("_")
    for e in all_words(3):
        assert region_S(Z2, e).member(x0) == leq(e, code)


def test_separation_fails_for_constant_pairs(G):
    from dyadic.subbase import DyadicSubbase, check_separation
    S = DyadicSubbase(G.space, lambda n: G.pair(0), name="const")
    v = check_separation(S, 3)
    assert not v.ok and v.witness == "00000000"
    assert not validate(S, 3).ok
    assert check_separation(G, 5).ok
