from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from centroid_bm.rational import as_q, fmt, parse


@pytest.mark.parametrize("text, value", [("5/2", Fraction(5, 2)), ("-3", Fraction(-3)), (" 4/-6 ", Fraction(-2, 3))])
def test_parse(text, value):
    assert parse(text) == value


def test_format_always_has_denominator():
    assert fmt(Fraction(3)) == "3/1"
    assert fmt(Fraction(-6, 4)) == "-3/2"


@pytest.mark.parametrize("bad", ["", "1/2/3", "a/b", "1.5"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse(bad)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse("1/0")


def test_floats_refused():
    with pytest.raises(TypeError):
        as_q(0.5)
    with pytest.raises(TypeError):
        as_q(True)


@given(st.integers(), st.integers(min_value=1))
def test_round_trip_is_canonical(n, d):
    q = parse(fmt(Fraction(n, d)))
    assert q == Fraction(n, d)
    num, den = fmt(q).split("/")
    assert int(den) > 0
    from math import gcd

    assert gcd(int(num), int(den)) == 1
