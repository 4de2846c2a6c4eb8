"""Exact rational scalars and their string form.

Rationals are plain :class:`fractions.Fraction` values, which are always
kept in lowest terms with a positive denominator. On the wire they are
strings ``"num/den"`` (the denominator is written even when it is 1).
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = ["Q", "RationalLike", "as_q", "fmt", "parse"]

Q = Fraction
RationalLike = Union[Fraction, int, str]


def as_q(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction.

    Floats are refused: a float carries binary rounding that would leak
    into certificates.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def fmt(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse(text: str) -> Fraction:
    if not isinstance(text, str):
        raise TypeError(f"expected a 'num/den' string, got {type(text).__name__}")
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(n, d)
