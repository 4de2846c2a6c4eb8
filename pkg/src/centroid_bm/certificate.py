"""Replayable certificates.

A certificate is produced by a registered *builder*: a pure function taking
JSON-level inputs (rationals as ``"num/den"`` strings) and returning the list
of recorded steps and a boolean verdict. Replaying a certificate means running
the same builder again on the stored inputs under fresh rational arithmetic
and comparing every stored step with the recomputed one.
"""
from __future__ import annotations

import importlib
import json
from dataclasses import dataclass, field
from typing import Any, Callable

__all__ = [
    "Certificate",
    "ReplayResult",
    "build",
    "certificate_kind",
    "replay",
    "replay_json",
]

Builder = Callable[[dict], "tuple[list, bool]"]

_BUILDERS: dict[str, Builder] = {}

# modules whose import registers builders
_BUILDER_MODULES = (
    "centroid_bm.exact",
    "centroid_bm.regions",
    "centroid_bm.theorem",
    "centroid_bm.extensions",
)


def certificate_kind(name: str) -> Callable[[Builder], Builder]:
    def register(fn: Builder) -> Builder:
        if name in _BUILDERS and _BUILDERS[name] is not fn:
            raise ValueError(f"certificate kind {name!r} registered twice")
        _BUILDERS[name] = fn
        return fn

    return register


def _builder(kind: str) -> Builder:
    if kind not in _BUILDERS:
        for mod in _BUILDER_MODULES:
            importlib.import_module(mod)
    try:
        return _BUILDERS[kind]
    except KeyError:
        raise KeyError(f"unknown certificate kind {kind!r}") from None


@dataclass(frozen=True)
class Certificate:
    kind: str
    inputs: dict
    steps: list = field(default_factory=list)
    verdict: bool = False

    @property
    def passed(self) -> bool:
        return self.verdict

    def __bool__(self) -> bool:
        return self.verdict

    def step(self, check: str) -> dict:
        """First recorded step whose ``check`` field equals *check*."""
        for s in self.steps:
            if s.get("check") == check:
                return s
        raise KeyError(check)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "inputs": self.inputs,
            "steps": self.steps,
            "verdict": "pass" if self.verdict else "fail",
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Certificate":
        if not isinstance(doc, dict):
            raise ValueError("certificate must be a JSON object")
        missing = {"kind", "inputs", "steps", "verdict"} - doc.keys()
        if missing:
            raise ValueError(f"certificate lacks fields {sorted(missing)}")
        if doc["verdict"] not in ("pass", "fail"):
            raise ValueError(f"bad verdict {doc['verdict']!r}")
        return cls(doc["kind"], doc["inputs"], list(doc["steps"]), doc["verdict"] == "pass")

    def replay(self) -> "ReplayResult":
        return replay(self.to_json())


def build(kind: str, inputs: dict) -> Certificate:
    """Run the builder for *kind* and wrap the outcome."""
    # round-trip through JSON so the stored inputs are exactly what replay sees
    inputs = json.loads(json.dumps(inputs))
    steps, verdict = _builder(kind)(inputs)
    return Certificate(kind, inputs, steps, bool(verdict))


@dataclass(frozen=True)
class ReplayResult:
    passed: bool
    location: str = ""
    message: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _first_difference(stored: Any, fresh: Any, path: str) -> str | None:
    if isinstance(stored, dict) and isinstance(fresh, dict):
        for key in sorted(set(stored) | set(fresh)):
            if key not in stored or key not in fresh:
                return f"{path}.{key}"
            d = _first_difference(stored[key], fresh[key], f"{path}.{key}")
            if d:
                return d
        return None
    if isinstance(stored, list) and isinstance(fresh, list):
        if len(stored) != len(fresh):
            return f"{path}[len]"
        for i, (a, b) in enumerate(zip(stored, fresh)):
            d = _first_difference(a, b, f"{path}[{i}]")
            if d:
                return d
        return None
    return None if stored == fresh else path


def replay(doc: dict, *, require_pass: bool = True, path: str = "certificate") -> ReplayResult:
    """Re-derive a serialized certificate and compare it step by step.

    With *require_pass* the replay also fails when the (consistently
    recomputed) verdict is ``fail``.
    """
    try:
        cert = Certificate.from_json(doc)
        builder = _builder(cert.kind)
    except (KeyError, ValueError) as exc:
        return ReplayResult(False, path, str(exc))
    try:
        steps, verdict = builder(json.loads(json.dumps(cert.inputs)))
    except (ArithmeticError, KeyError, TypeError, ValueError) as exc:
        return ReplayResult(False, f"{path}.inputs", f"inputs rejected: {exc}")
    fresh = json.loads(json.dumps(steps))
    where = _first_difference(cert.steps, fresh, f"{path}.steps")
    if where:
        return ReplayResult(False, where, "stored step differs from recomputation")
    if bool(verdict) != cert.verdict:
        return ReplayResult(False, f"{path}.verdict", "stored verdict differs from recomputation")
    if require_pass and not cert.verdict:
        return ReplayResult(False, f"{path}.verdict", "certificate verdict is fail")
    return ReplayResult(True)


def replay_json(text: str) -> ReplayResult:
    return replay(json.loads(text))
