"""
Evidence files and the max-belief decision rule.

An evidence file is UTF-8 JSON::

    {
      "frame": ["A", "B"],
      "bodies": [
        {"name": "m1",
         "masses": [
           {"focal": ["A"], "rect": {"re": 0.1, "im": -0.1768}},
           {"focal": ["A", "B"], "polar": {"magnitude": 0.2669, "phase_radians": -0.7236}}
         ]}
      ]
    }

Each mass is given as ``rect``, as ``polar`` or, for a real mass, as
``{"value": 0.8}``.  Bodies whose masses are all real are validated as
classical BBAs and lifted.
"""

from __future__ import annotations

import json
import math
import os
from collections.abc import Mapping
from dataclasses import dataclass
from typing import TextIO, Union

from .cplx import Complex, Polar, from_polar
from .errors import EvidenceError, ParseError
from .frame import Frame, Proposition
from .mass import NORMALIZATION_TOL, Cbba, bel_c, lift, validate_bba, validate_cbba

__all__ = ["TIE_TOL", "DecisionResult", "parse_evidence", "loads", "serialize_evidence", "decide"]

TIE_TOL = 1e-9

Source = Union[str, os.PathLike, TextIO]


def _fail(path: str, msg: str):
    raise ParseError(f"{path}: {msg}")


def _number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(path, f"expected a number, got {json.dumps(value)}")
    value = float(value)
    if not math.isfinite(value):
        _fail(path, "numbers must be finite")
    return value


def _object(value, path: str, required=()) -> dict:
    if not isinstance(value, dict):
        _fail(path, f"expected an object, got {type(value).__name__}")
    for key in required:
        if key not in value:
            _fail(path, f"missing field {key!r}")
    return value


def _mass(entry: dict, path: str) -> Complex:
    kinds = [k for k in ("rect", "polar", "value") if k in entry]
    if len(kinds) != 1:
        _fail(path, "each mass needs exactly one of 'rect', 'polar' or 'value'")
    kind = kinds[0]
    if kind == "value":
        return Complex(_number(entry["value"], f"{path}.value"), 0.0)
    if kind == "rect":
        rect = _object(entry["rect"], f"{path}.rect", ("re",))
        return Complex(_number(rect["re"], f"{path}.rect.re"), _number(rect.get("im", 0.0), f"{path}.rect.im"))
    polar = _object(entry["polar"], f"{path}.polar", ("magnitude", "phase_radians"))
    r = _number(polar["magnitude"], f"{path}.polar.magnitude")
    t = _number(polar["phase_radians"], f"{path}.polar.phase_radians")
    if r < 0:
        _fail(f"{path}.polar.magnitude", "magnitude must be non-negative")
    return from_polar(Polar(r, t))


def _body(raw, frame: Frame, path: str, tol: float) -> tuple[str, Cbba]:
    body = _object(raw, path, ("name", "masses"))
    name = body["name"]
    if not isinstance(name, str) or not name:
        _fail(f"{path}.name", "body names must be non-empty strings")
    entries = body["masses"]
    if not isinstance(entries, list):
        _fail(f"{path}.masses", "expected a list of mass entries")

    masses: dict[Proposition, Complex] = {}
    for i, entry in enumerate(entries):
        epath = f"{path}.masses[{i}]"
        if isinstance(entry, (int, float)) and not isinstance(entry, bool):
            _fail(epath, "mass entries must be objects with a 'focal' list")
        entry = _object(entry, epath, ("focal",))
        labels = entry["focal"]
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            _fail(f"{epath}.focal", "expected a list of element labels")
        for s in labels:
            if s not in frame.elements:
                _fail(f"{epath}.focal", f"{s!r} is not in the frame {list(frame.elements)}")
        p = frame.proposition(labels)
        if p in masses:
            _fail(f"{epath}.focal", f"proposition {{{p}}} listed twice")
        masses[p] = _mass(entry, epath)

    try:
        if all(v.im == 0.0 for v in masses.values()):
            cbba = lift(validate_bba({p: v.re for p, v in masses.items()}, frame, tol))
        else:
            cbba = validate_cbba(masses, frame, tol)
    except EvidenceError as exc:
        raise type(exc)(f"body {name!r}: {exc}") from exc
    return name, cbba


def loads(text: str, tol: float = NORMALIZATION_TOL) -> tuple[Frame, dict[str, Cbba]]:
    """Parse evidence JSON text; see :func:`parse_evidence`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    doc = _object(doc, "$", ("frame", "bodies"))
    labels = doc["frame"]
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        _fail("$.frame", "expected a list of element labels")
    try:
        frame = Frame(labels)
    except ValueError as exc:
        raise ParseError(f"$.frame: {exc}") from exc
    if not isinstance(doc["bodies"], list) or not doc["bodies"]:
        _fail("$.bodies", "expected a non-empty list of bodies")

    bodies: dict[str, Cbba] = {}
    for i, raw in enumerate(doc["bodies"]):
        name, cbba = _body(raw, frame, f"$.bodies[{i}]", tol)
        if name in bodies:
            _fail(f"$.bodies[{i}].name", f"duplicate body name {name!r}")
        bodies[name] = cbba
    return frame, bodies


def parse_evidence(source: Source, tol: float = NORMALIZATION_TOL) -> tuple[Frame, dict[str, Cbba]]:
    """Read and validate an evidence file.

    ``source`` is a path or an open text stream.  Returns the frame and the
    bodies keyed by name, in file order.  ``tol`` is the normalization
    tolerance handed to the validators.
    """
    if hasattr(source, "read"):
        return loads(source.read(), tol)
    with open(source, encoding="utf-8") as fh:
        return loads(fh.read(), tol)


def serialize_evidence(frame: Frame, bodies: Mapping[str, Cbba]) -> str:
    """Evidence JSON for ``bodies`` using full-precision rectangular masses."""
    doc = {
        "frame": list(frame.elements),
        "bodies": [
            {
                "name": name,
                "masses": [
                    {"focal": list(p.elements), "rect": {"re": v.re, "im": v.im}}
                    for p, v in m.items()
                ],
            }
            for name, m in bodies.items()
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class DecisionResult:
    winner: Proposition
    scores: dict[Proposition, float]
    tie: bool


def decide(m: Cbba) -> DecisionResult:
    """Pick the singleton with the largest complex belief.

    Ties within ``TIE_TOL`` go to the lexicographically smallest label and
    set ``tie``.
    """
    scores = {s: bel_c(m, s) for s in m.frame.singletons()}
    top = max(scores.values())
    contenders = [s for s, v in scores.items() if top - v < TIE_TOL]
    winner = min(contenders, key=lambda s: s.elements[0])
    return DecisionResult(winner, scores, len(contenders) > 1)
