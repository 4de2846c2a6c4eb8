"""Emptiness of planar regions cut out by linear inequalities.

The closed relaxation is obtained by clipping a bounding box against every
constraint in turn (exact Sutherland-Hodgman on a convex vertex list). Strict
constraints are then settled by their largest slack over the clipped region:
a strict constraint whose slack never exceeds zero there cannot be satisfied.
If every strict slack is positive somewhere, the vertex average of the
clipped region satisfies all of them at once, and is returned as a witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .certificate import Certificate, build, certificate_kind
from .exact import Interval
from .rational import RationalLike, as_q, fmt, parse

__all__ = ["DEFAULT_BOX", "LinearConstraint2", "region_empty"]

Vertex = tuple[Fraction, Fraction]

DEFAULT_BOX = (Interval.closed(-10, 10), Interval.closed(-10, 10))


@dataclass(frozen=True)
class LinearConstraint2:
    """``a*x + b*y <= c`` (or ``<`` when *strict*)."""

    a: Fraction
    b: Fraction
    c: Fraction
    strict: bool = False

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_q(getattr(self, name)))
        if self.a == 0 and self.b == 0:
            raise ValueError("constraint has no variable part (a, b) == (0, 0)")

    @property
    def relation(self) -> str:
        return "<" if self.strict else "<="

    @classmethod
    def le(cls, a: RationalLike, b: RationalLike, c: RationalLike) -> "LinearConstraint2":
        return cls(as_q(a), as_q(b), as_q(c))

    @classmethod
    def lt(cls, a: RationalLike, b: RationalLike, c: RationalLike) -> "LinearConstraint2":
        return cls(as_q(a), as_q(b), as_q(c), True)

    @classmethod
    def ge(cls, a: RationalLike, b: RationalLike, c: RationalLike) -> "LinearConstraint2":
        return cls(-as_q(a), -as_q(b), -as_q(c))

    @classmethod
    def gt(cls, a: RationalLike, b: RationalLike, c: RationalLike) -> "LinearConstraint2":
        return cls(-as_q(a), -as_q(b), -as_q(c), True)

    def slack(self, x: Fraction, y: Fraction) -> Fraction:
        return self.c - self.a * x - self.b * y

    def holds(self, x: Fraction, y: Fraction) -> bool:
        s = self.slack(x, y)
        return s > 0 if self.strict else s >= 0

    def to_json(self) -> dict:
        return {"a": fmt(self.a), "b": fmt(self.b), "c": fmt(self.c), "rel": self.relation}

    @classmethod
    def from_json(cls, doc: dict) -> "LinearConstraint2":
        if doc["rel"] not in ("<=", "<"):
            raise ValueError(f"unknown relation {doc['rel']!r}")
        return cls(parse(doc["a"]), parse(doc["b"]), parse(doc["c"]), doc["rel"] == "<")

    def __str__(self) -> str:
        return f"{self.a}*x + {self.b}*y {self.relation} {self.c}"


def _dedupe(pts: list[Vertex]) -> list[Vertex]:
    out: list[Vertex] = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def clip(poly: Sequence[Vertex], con: LinearConstraint2) -> list[Vertex]:
    """Clip a convex vertex list (possibly a point or segment) to ``a x + b y <= c``."""
    if not poly:
        return []
    if len(poly) == 1:
        return list(poly) if con.slack(*poly[0]) >= 0 else []
    out: list[Vertex] = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        sp, sq = con.slack(*p), con.slack(*q)
        if sp >= 0:
            out.append(p)
        if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
            t = sp / (sp - sq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return _dedupe(out)


def _box_polygon(box: Sequence[Interval]) -> list[Vertex]:
    bx, by = box
    return _dedupe([(bx.lo, by.lo), (bx.hi, by.lo), (bx.hi, by.hi), (bx.lo, by.hi)])


def _pts_json(pts: Sequence[Vertex]) -> list[list[str]]:
    return [[fmt(x), fmt(y)] for x, y in pts]


@certificate_kind("region_empty")
def _region_builder(inputs: dict) -> tuple[list, bool]:
    cons = [LinearConstraint2.from_json(c) for c in inputs["constraints"]]
    if not cons:
        raise ValueError("vacuous query")
    box = tuple(Interval.closed(parse(lo), parse(hi)) for lo, hi in inputs["bbox"])
    poly = _box_polygon(box)
    steps: list[dict] = [{"check": "box", "polygon": _pts_json(poly)}]
    for i, con in enumerate(cons):
        poly = clip(poly, LinearConstraint2(con.a, con.b, con.c))
        steps.append({"check": "clip", "constraint": i, "polygon": _pts_json(poly)})
        if not poly:
            steps.append({"check": "empty_after_clip", "constraint": i})
            return steps, True
    empty = False
    for i, con in enumerate(cons):
        if con.strict:
            best = max(con.slack(x, y) for x, y in poly)
            steps.append({"check": "max_strict_slack", "constraint": i, "value": fmt(best)})
            empty |= best <= 0
    if not empty:
        n = len(poly)
        wx = sum(x for x, _ in poly) / n
        wy = sum(y for _, y in poly) / n
        ok = all(c.holds(wx, wy) for c in cons)
        steps.append({"check": "witness", "point": [fmt(wx), fmt(wy)], "satisfies_all": ok})
    return steps, empty


def region_empty(
    constraints: Sequence[LinearConstraint2],
    bounding_box: Sequence[Interval] = DEFAULT_BOX,
) -> Certificate:
    """Certify that no point satisfies every constraint.

    Returns a certificate with verdict False and a ``witness`` step when the
    region is nonempty.
    """
    if not constraints:
        raise ValueError("vacuous query")
    return build(
        "region_empty",
        {
            "constraints": [c.to_json() for c in constraints],
            "bbox": [[fmt(iv.lo), fmt(iv.hi)] for iv in bounding_box],
        },
    )


def witness_of(cert: Certificate) -> Vertex | None:
    for s in cert.steps:
        if s.get("check") == "witness":
            return parse(s["point"][0]), parse(s["point"][1])
    return None
