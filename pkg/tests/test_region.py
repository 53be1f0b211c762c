from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyadic import catalog
from dyadic.errors import NotInSpace, UnsaturatedRegion, WrongSpace
from dyadic.region import AbstractPoint, Interval, SpaceDef, Component, interval, pt, unit_interval, unit_square


@pytest.fixture
def I():
    return unit_interval()


def test_interval_text():
    assert interval("[0,1/2)") == Interval(Fraction(0), Fraction(1, 2), True, False)
    assert str(interval("{1/2}")) == "{1/2}"
    with pytest.raises(ValueError):
        interval("[1,0]")


def test_member(I):
    assert I.region("(1/4,3/4)").member(pt("1/2"))
    assert I.region("[0,1/2)").closure().member(pt("1/2"))
    assert not I.region("[0,1/2)").member(pt("1/2"))


def test_member_deleted_point_raises():
    Z0 = catalog.get("z0").subbase.space
    with pytest.raises(NotInSpace):
        Z0.whole().member(pt("1/2", "1/2"))
    assert Z0.whole().member(pt("1/2", "1/4"))


def test_wrong_space(I):
    J = unit_interval()
    with pytest.raises(WrongSpace):
        I.whole().intersect(J.whole())
    with pytest.raises(WrongSpace):
        I.whole().member(AbstractPoint("x0"))


def test_boolean_examples(I):
    assert str(I.region("(1/2,1]") & I.region("(1/4,3/4)")) == "(1/2,3/4)"
    R = I.region("[0,1/3]", "(1/2,2/3)")
    assert (R & R.complement()).is_empty()
    assert (R | I.empty()) == R
    assert (I.region("[0,1/2)") & I.region("(1/2,1]")).is_empty()


def test_closure_examples(I):
    assert str(I.region("(1/4,3/4)").closure()) == "[1/4,3/4]"
    assert str(I.region("[0,1/2)").exterior()) == "(1/2,1]"
    assert str(I.region("[0,1/2)").boundary()) == "{1/2}"


def test_quotient_closure_in_Y():
    Y = catalog.get("y").subbase
    T00 = Y.pair(0)[0]
    assert str(T00) == "[0,1/4) ∪ (1/4,1/2)"
    cl = T00.closure()
    assert cl.member(pt("1/4")) and cl.member(pt("3/4"))
    assert T00.is_regular_open()


def test_saturation_enforced():
    Y = catalog.get("y").subbase.space
    with pytest.raises(UnsaturatedRegion):
        Y.region("[0,1/2)")
    r = Y.region("[0,1/2)", saturate=True)
    assert r.member(pt("3/4"))


def test_regular_open(I):
    # (0,1/2) ∪ (1/2,1) is dense in I, so the interior of its closure is all of I
    assert not I.region("(0,1/2)", "(1/2,1)").is_regular_open()
    assert I.region("(0,1/2)", "(1/2,1]").closure().interior() == I.whole()
    assert I.region("(1/4,3/4)").is_regular_open()
    assert I.region("[0,1/2)").is_regular_open()


def test_hull_diameter(I):
    assert I.region("[1/2,3/4]").hull_diameter() == Fraction(1, 4)
    assert I.points_region([pt("1/3")]).hull_diameter() == 0
    assert I.empty().hull_diameter() == 0 and I.empty().is_empty()


def test_two_dimensional():
    Z = unit_square()
    a = Z.region(("[0,1/2)", "[0,1]"))
    b = Z.region(("[0,1]", "(1/2,1]"))
    c = a & b
    assert str(c) == "[0,1/2)×(1/2,1]"
    assert str(c.closure()) == "[0,1/2]×[1/2,1]"
    assert c.hull_diameter() == Fraction(1, 2)
    assert c.as_point() is None
    assert Z.points_region([pt("1/3", "1/5")]).as_point() == pt("1/3", "1/5")


def test_glue_class_point():
    W = catalog.get("w").subbase.space
    z = W.points_region(W.gluings[0])
    assert z.as_point() in W.gluings[0]


def test_abstract_points_untouched_by_closure():
    Z2 = catalog.get("z2").subbase.space
    r = Z2.region(("(0,1/4)", "(0,1/4)"), abstract=["x0"])
    assert r.closure().abstract == frozenset({"x0"})
    assert r.member(AbstractPoint("x0")) and not r.member(AbstractPoint("x1"))


coords = st.integers(0, 8).map(lambda k: Fraction(k, 8))


@st.composite
def regions(draw):
    I = _SPACE
    r = I.empty()
    for _ in range(draw(st.integers(0, 3))):
        lo, hi = sorted((draw(coords), draw(coords)))
        lc, hc = draw(st.booleans()), draw(st.booleans())
        if lo == hi:
            lc = hc = True
        r = r | I.region(Interval(lo, hi, lc, hc))
    return r


_SPACE = unit_interval("prop")


@given(regions(), regions())
@settings(max_examples=300)
def test_boolean_and_closure_laws(A, B):
    assert (A | B).complement() == A.complement() & B.complement()
    assert A.complement().complement() == A
    assert A.is_subset(A.closure()) and A.closure().closure() == A.closure()
    assert A.interior().interior() == A.interior()
    assert A.interior().exterior().is_regular_open()
    assert A.closure().interior().is_regular_open()


@given(regions(), st.integers(0, 16).map(lambda k: Fraction(k, 16)))
def test_member_matches_boxes(A, x):
    inside = any(
        (iv.lo < x < iv.hi) or (x == iv.lo and iv.lo_closed) or (x == iv.hi and iv.hi_closed)
        for _, (iv,) in A.boxes()
    )
    assert A.member(pt(x)) == inside


def test_component_check():
    with pytest.raises(ValueError):
        SpaceDef([Component(1, ((Fraction(0), Fraction(1)),))], deletions=[pt(2)])
