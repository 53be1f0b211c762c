import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyadic.errors import IncompatibleOperands, WordSyntaxError
from dyadic.tword import (TStream, all_words, compatible, digit, digit_stats, fill, format_seq,
                          is_total, join, key, leq, parse, pretty, restrict, stream, word)

words = st.text(alphabet="_01", max_size=10).map(lambda s: s.rstrip("_"))
streams = st.builds(lambda a, b: stream(a, b), st.text(alphabet="_01", max_size=5),
                    st.text(alphabet="_01", min_size=1, max_size=4))


def test_leq_examples():
    assert leq("_1", "01")
    assert not leq("0", "1")
    assert leq(parse("_1(0)*"), parse("_10(0)*"))
    assert leq("_1", parse("_1(0)*"))


def test_compatible_and_join_examples():
    assert compatible("0_11", "_011") and join("0_11", "_011") == "0011"
    assert not compatible("0", "1")
    assert compatible("0110", "") and join("0110", "") == "0110"
    assert join("__1", "_1") == "_11"
    with pytest.raises(IncompatibleOperands):
        join("0", "1")


def test_restrict_examples():
    assert restrict(parse("_1(0)*"), 2) == "_1"
    assert restrict("011", 0) == ""
    assert restrict(parse("_011(01)*"), 4) == "_011"


def test_fill_examples():
    assert fill(parse("_011(01)*"), 0, "0") == parse("0011(01)*")
    assert format_seq(fill(parse("_011(01)*"), 0, "0")) == "0011(01)*"
    assert fill("", 3, "1") == "___1"
    assert fill("01", 0, "0") == "01"
    with pytest.raises(ValueError):
        fill("01", 0, "_")


def test_digit_stats_examples():
    assert digit_stats(parse("_1(0)*")).bottom_count_up_to(8) == 1
    assert digit_stats(parse("__11(0)*")).bottom_count_up_to(8) == 2
    dom = digit_stats(parse("(0)*")).dom
    assert dom.is_everything and all(k in dom for k in range(50))
    assert digit_stats("0_1").dom.up_to(5) == [0, 2]


def test_parse_format():
    assert parse("_1") == "_1"
    assert format_seq(parse("_011(01)*")) == "_011(01)*"
    assert parse("⊥1") == "_1"
    assert parse("01__") == "01"
    assert parse("0(_)*") == "0"
    for bad in ("2", "0(1", "0()*", "a"):
        with pytest.raises(WordSyntaxError):
            parse(bad)
    assert pretty("") == "⊥^ω" and pretty(parse("_1(0)*")) == "⊥1(0)^ω"


def test_stream_equality_is_canonical():
    assert parse("_011(01)*") == parse("_01(10)*") == parse("_0110101(01)*")
    assert parse("(0)*") == parse("00(00)*")
    assert hash(parse("(01)*")) == hash(parse("01(01)*"))
    with pytest.raises(WordSyntaxError):
        TStream("0", "__")


def test_all_words_order():
    assert all_words(1) == ["", "0", "1"]
    assert all_words(2) == ["", "0", "1", "_0", "_1", "00", "01", "10", "11"]
    assert len(all_words(4)) == 1 + 2 * (1 + 3 + 9 + 27)
    ws = all_words(3)
    assert ws == sorted(ws, key=key)


@given(words, words, words)
def test_order_laws(a, b, c):
    assert leq(a, a)
    if leq(a, b) and leq(b, a):
        assert a == b
    if leq(a, b) and leq(b, c):
        assert leq(a, c)


@given(words, words)
def test_join_iff_compatible(a, b):
    if compatible(a, b):
        j = join(a, b)
        assert leq(a, j) and leq(b, j)
        # leastness against every upper bound obtained by filling the join
        for k, ch in enumerate(j):
            if ch == "_":
                assert leq(j, fill(j, k, "0"))
    else:
        with pytest.raises(IncompatibleOperands):
            join(a, b)


@given(words, words)
def test_word_order_is_agreement_on_domain(d, e):
    agree = all(e[k:k + 1] == d[k] for k in range(len(d)) if d[k] != "_")
    assert leq(d, e) == agree


@given(streams, st.integers(0, 12), st.integers(0, 12))
def test_restrict_laws_on_streams(p, n, m):
    assert leq(restrict(p, n), p)
    assert restrict(restrict(p, n), m) == restrict(p, min(n, m))


@given(streams, streams)
@settings(max_examples=200)
def test_stream_join(p, q):
    if compatible(p, q):
        j = join(p, q)
        assert leq(p, j) and leq(q, j)
        for n in range(20):
            a, b, c = digit(p, n), digit(q, n), digit(j, n)
            assert c == (a if a != "_" else b)


@given(streams)
def test_stream_format_round_trip(p):
    assert parse(format_seq(p)) == p
    assert not is_total(p) or "_" not in format_seq(p)


def test_word_rejects_bad_chars():
    with pytest.raises(WordSyntaxError):
        word("01x")
