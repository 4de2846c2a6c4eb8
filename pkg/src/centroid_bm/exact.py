"""Univariate rational polynomials, Sturm root counting, sign certificates."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import zip_longest
from math import gcd, lcm
from typing import Iterable, Sequence

from .certificate import Certificate, build, certificate_kind
from .rational import RationalLike, as_q, fmt, parse

__all__ = [
    "Interval",
    "Polynomial",
    "SIGN_REQUIREMENTS",
    "certify_sign_on_interval",
    "sturm_root_count",
    "sturm_sequence",
]

SIGN_REQUIREMENTS = (">=0", "<=0", ">0", "<0")


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", as_q(self.lo))
        object.__setattr__(self, "hi", as_q(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo {self.lo} > hi {self.hi}")
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise ValueError("a one-point interval must be closed")

    @classmethod
    def closed(cls, lo: RationalLike, hi: RationalLike) -> "Interval":
        return cls(as_q(lo), as_q(hi))

    @classmethod
    def open(cls, lo: RationalLike, hi: RationalLike) -> "Interval":
        return cls(as_q(lo), as_q(hi), True, True)

    def __contains__(self, x) -> bool:
        x = as_q(x)
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and self.lo_open:
            return False
        return not (x == self.hi and self.hi_open)

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def interior(self) -> "Interval":
        return Interval(self.lo, self.hi, True, True)

    def to_json(self) -> dict:
        return {
            "lo": fmt(self.lo),
            "hi": fmt(self.hi),
            "lo_open": self.lo_open,
            "hi_open": self.hi_open,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Interval":
        return cls(parse(doc["lo"]), parse(doc["hi"]), bool(doc["lo_open"]), bool(doc["hi_open"]))

    def __str__(self) -> str:
        return f"{'(' if self.lo_open else '['}{self.lo}, {self.hi}{')' if self.hi_open else ']'}"


class Polynomial:
    """Immutable polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c: RationalLike) -> "Polynomial":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike], lead: RationalLike = 1) -> "Polynomial":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-as_q(r), 1))
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_q(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @staticmethod
    def _coerce(other) -> "Polynomial":
        return other if isinstance(other, Polynomial) else Polynomial.const(other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        return Polynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other: "Polynomial") -> "tuple[Polynomial, Polynomial]":
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.lc
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(quot), Polynomial(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Polynomial":
        return self * (1 / self.lc) if self.coeffs else self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def to_json(self) -> list[str]:
        return [fmt(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, doc: Sequence[str]) -> "Polynomial":
        return cls(parse(c) for c in doc)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_factors(p: Polynomial) -> list[Polynomial]:
    """Yun's decomposition: monic f_1, f_2, ... with p = lc * prod f_i**i."""
    if p.degree < 1:
        return []
    dp = p.derivative()
    g = poly_gcd(p, dp)
    b = p // g
    c = dp // g
    d = c - b.derivative()
    out = []
    while b.degree > 0:
        a = poly_gcd(b, d)
        out.append(a)
        b = b // a
        c = d // a
        d = c - b.derivative()
    return out


def odd_part(p: Polynomial) -> Polynomial:
    """lc(p) times the product of its odd-multiplicity squarefree factors.

    Away from the roots of p it has the same sign as p, and every one of its
    real roots is a sign change of p.
    """
    out = Polynomial.const(p.lc)
    for i, f in enumerate(squarefree_factors(p), start=1):
        if i % 2:
            out = out * f
    return out


# -- Sturm machinery on integer coefficient lists -----------------------------


def _int_primitive(p: Polynomial) -> list[int]:
    den = reduce(lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    g = reduce(gcd, ints, 0)
    return [c // g for c in ints]


def _strip(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _neg_rem_sign_corrected(a: list[int], b: list[int]) -> list[int]:
    """Positive multiple of -rem(a, b), via integer pseudo-division."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    steps = 0
    while len(r) - 1 >= db and r:
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for j, c in enumerate(b):
            r[shift + j] -= lead * c
        _strip(r)
        steps += 1
    # r == lb**steps * rem(a, b)
    if lb > 0 or steps % 2 == 0:
        r = [-c for c in r]
    if not r:
        return r
    g = reduce(gcd, r, 0)
    return [c // g for c in r]


def _int_sequence(p: Polynomial) -> list[list[int]]:
    seq = [_int_primitive(p)]
    d = p.derivative()
    if d.is_zero():
        return seq
    seq.append(_int_primitive(d))
    while True:
        nxt = _neg_rem_sign_corrected(seq[-2], seq[-1])
        if not nxt:
            return seq
        seq.append(nxt)


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    """Sturm chain of the squarefree part of *p*, each term a positive multiple."""
    if p.is_zero():
        raise ValueError("indeterminate root count")
    seq = _int_sequence(p)
    if len(seq[-1]) > 1:
        # last term is gcd(p, p') up to a constant: divide it out
        p = p // Polynomial(seq[-1])
        seq = _int_sequence(p)
    return [Polynomial(s) for s in seq]


def _sign_at(cs: list[int], x: Fraction) -> int:
    # sign of d**deg * p(n/d), an integer with the sign of p(x)
    n, d = x.numerator, x.denominator
    deg = len(cs) - 1
    acc = 0
    for i, c in enumerate(cs):
        acc += c * n**i * d ** (deg - i)
    return (acc > 0) - (acc < 0)


def _variations(seq: list[list[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(cs, x) for cs in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_root_count(p: Polynomial, iv: Interval) -> int:
    """Number of distinct real roots of *p* in *iv*, honouring open ends."""
    if p.is_zero():
        raise ValueError("indeterminate root count")
    if iv.lo == iv.hi:
        return int(p(iv.lo) == 0)
    seq = [_int_primitive(s) for s in sturm_sequence(p)]
    # for a squarefree chain, V(lo) - V(hi) counts roots in (lo, hi]
    count = _variations(seq, iv.lo) - _variations(seq, iv.hi)
    if not iv.lo_open and p(iv.lo) == 0:
        count += 1
    if iv.hi_open and p(iv.hi) == 0:
        count -= 1
    return count


# -- sign certificates --------------------------------------------------------


def _sign_ok(value: Fraction, required: str) -> bool:
    return {
        ">=0": value >= 0,
        "<=0": value <= 0,
        ">0": value > 0,
        "<0": value < 0,
    }[required]


@certificate_kind("sign_on_interval")
def _sign_builder(inputs: dict) -> tuple[list, bool]:
    p = Polynomial.from_json(inputs["poly"])
    iv = Interval.from_json(inputs["interval"])
    required = inputs["required"]
    if required not in SIGN_REQUIREMENTS:
        raise ValueError(f"unknown sign requirement {required!r}")
    strict = required in (">0", "<0")
    want_positive = required.startswith(">")

    if p.is_zero():
        return [{"check": "identically_zero"}], not strict
    if iv.lo == iv.hi:
        v = p(iv.lo)
        return [{"check": "point_value", "at": fmt(iv.lo), "value": fmt(v)}], _sign_ok(v, required)

    # a strict claim needs p itself root-free; a weak claim only needs the
    # odd-multiplicity part (even roots touch zero without a sign change)
    carrier = p if strict else odd_part(p)
    steps: list[dict] = []
    ok = True
    if not strict:
        steps.append({"check": "odd_part", "poly": carrier.to_json()})
    if carrier.degree < 1:
        count = 0
    else:
        count = sturm_root_count(carrier, iv.interior())
    steps.append({"check": "interior_root_count", "interval": iv.interior().to_json(), "count": count})
    ok &= count == 0
    mid = iv.midpoint
    sample = carrier(mid)
    steps.append({"check": "interior_sample", "at": fmt(mid), "value": fmt(sample)})
    ok &= sample > 0 if want_positive else sample < 0
    for at, is_open in ((iv.lo, iv.lo_open), (iv.hi, iv.hi_open)):
        if not is_open:
            v = p(at)
            steps.append({"check": "endpoint", "at": fmt(at), "value": fmt(v)})
            ok &= _sign_ok(v, required)
    return steps, ok


def certify_sign_on_interval(p: Polynomial, iv: Interval, required: str) -> Certificate:
    """Certificate that ``p`` has the *required* sign everywhere on *iv*.

    The returned certificate's ``verdict`` is False when the sign claim does
    not hold; the recorded steps still show where it broke.
    """
    if required not in SIGN_REQUIREMENTS:
        raise ValueError(f"required must be one of {SIGN_REQUIREMENTS}, got {required!r}")
    return build(
        "sign_on_interval",
        {"poly": p.to_json(), "interval": iv.to_json(), "required": required},
    )
