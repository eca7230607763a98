"""Reading and writing knot profiles (JSON, ``schema_version: 1``)."""

from __future__ import annotations

import json
import os
import re
from importlib import resources

import jsonschema

from .charcount import TriangleGroup
from .errors import CSNormError, ProfileError
from .peripheral import Slope
from .solver import SEIFERT, KnotProfile, RCurveHint, SurgeryFact

__all__ = [
    "PROFILE_SCHEMA",
    "load_profile",
    "loads_profile",
    "dump_profile",
    "save_profile",
    "profile_from_document",
    "profile_to_document",
    "bundled_profile_path",
]

_SLOPE_RE = r"^-?[0-9]+(/[0-9]+)?$"

PROFILE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": [
        "schema_version",
        "name",
        "boundary_slopes",
        "sigma2_cone_orders",
        "alexander_det",
        "surgeries",
        "r_curve_hints",
    ],
    "properties": {
        "schema_version": {"const": 1},
        "name": {"type": "string", "minLength": 1},
        "boundary_slopes": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "string", "pattern": _SLOPE_RE},
        },
        "sigma2_cone_orders": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "array",
                    "items": {"type": "integer", "minimum": 2},
                    "minItems": 3,
                    "maxItems": 3,
                },
            ]
        },
        "alexander_det": {"type": "integer", "minimum": 1},
        "surgeries": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["slope", "kind"],
                "properties": {
                    "slope": {"type": "string", "pattern": _SLOPE_RE},
                    "kind": {"enum": ["cyclic", "finite", "seifert"]},
                    "base": {
                        "type": "array",
                        "items": {"type": "integer", "minimum": 2},
                        "minItems": 3,
                        "maxItems": 3,
                    },
                    "budget": {"type": "integer", "minimum": 0, "multipleOf": 2},
                },
            },
        },
        "r_curve_hints": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["slope", "count", "minimal_norm"],
                "properties": {
                    "slope": {"type": "string", "pattern": _SLOPE_RE},
                    "count": {"type": "integer", "minimum": 0},
                    "minimal_norm": {"type": "integer", "minimum": 2, "multipleOf": 2},
                },
            },
        },
        "provenance": {
            "type": "object",
            "additionalProperties": {"type": "string"},
        },
    },
}


def _field(path) -> str:
    out = ""
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or "<document>"


def _slope(text: str, where: str) -> Slope:
    if not re.match(_SLOPE_RE, text):
        raise ProfileError(f"{where}: malformed slope {text!r}")
    if "/" in text:
        num, den = (int(v) for v in text.split("/"))
    else:
        num, den = int(text), 1
    if den == 0 and num != 1:
        raise ProfileError(f"{where}: slope {text!r} is not reduced (use 1/0)")
    try:
        s = Slope(num, den)
    except CSNormError as e:
        raise ProfileError(f"{where}: {e}") from None
    if (s.num, s.den) != (num, den):
        raise ProfileError(f"{where}: slope {text!r} is not a reduced fraction (expected {s})")
    return s


def profile_from_document(doc: dict) -> KnotProfile:
    """Validate a parsed document against the schema and build the profile."""
    validator = jsonschema.Draft202012Validator(PROFILE_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.path)))
    if errors:
        e = errors[0]
        raise ProfileError(f"field {_field(e.path)}: {e.message}")
    slopes = [_slope(t, f"boundary_slopes[{i}]") for i, t in enumerate(doc["boundary_slopes"])]
    cone = doc["sigma2_cone_orders"]
    facts = []
    for i, f in enumerate(doc["surgeries"]):
        where = f"surgeries[{i}]"
        if f["kind"] != SEIFERT and ("base" in f or "budget" in f):
            raise ProfileError(f"{where}: only seifert facts take 'base' or 'budget'")
        facts.append(
            SurgeryFact(
                _slope(f["slope"], f"{where}.slope"),
                f["kind"],
                base=TriangleGroup.of(f["base"]) if "base" in f else None,
                budget=f.get("budget"),
            )
        )
    hints = [
        RCurveHint(_slope(h["slope"], f"r_curve_hints[{i}].slope"), h["count"], h["minimal_norm"])
        for i, h in enumerate(doc["r_curve_hints"])
    ]
    return KnotProfile(
        name=doc["name"],
        boundary_slopes=slopes,
        cone_orders=TriangleGroup.of(cone) if cone is not None else None,
        alex_det=doc["alexander_det"],
        surgeries=facts,
        r_curve_hints=hints,
    )


def profile_to_document(profile: KnotProfile, provenance=None) -> dict:
    doc = {
        "schema_version": 1,
        "name": profile.name,
        "boundary_slopes": [str(s) for s in profile.boundary_slopes],
        "sigma2_cone_orders": list(profile.cone_orders.as_tuple()) if profile.cone_orders else None,
        "alexander_det": profile.alex_det,
        "surgeries": [],
        "r_curve_hints": [
            {"slope": str(h.slope), "count": h.count, "minimal_norm": h.minimal_norm}
            for h in profile.r_curve_hints
        ],
    }
    for f in profile.surgeries:
        entry = {"slope": str(f.slope), "kind": f.kind}
        if f.base is not None:
            entry["base"] = list(f.base.as_tuple())
        if f.budget is not None:
            entry["budget"] = f.budget
        doc["surgeries"].append(entry)
    if provenance:
        doc["provenance"] = dict(sorted(provenance.items()))
    return doc


def dump_profile(profile: KnotProfile, provenance=None) -> str:
    """Canonical text: two-space indent, fixed key order, trailing newline."""
    return json.dumps(profile_to_document(profile, provenance), indent=2, ensure_ascii=False) + "\n"


def loads_profile(text: str, source: str = "<string>") -> KnotProfile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProfileError(f"{source}:{e.lineno}:{e.colno}: invalid JSON: {e.msg}") from None
    try:
        return profile_from_document(doc)
    except ProfileError as e:
        raise ProfileError(f"{source}: {e}") from None


def load_profile(path) -> KnotProfile:
    path = os.fspath(path)
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ProfileError(f"{path}: cannot read profile ({e.strerror})") from None
    return loads_profile(text, source=path)


def save_profile(profile: KnotProfile, path, provenance=None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dump_profile(profile, provenance))


def bundled_profile_path(name: str):
    """Path of a profile shipped with the package, e.g. ``"k4"``."""
    return resources.files("csnorm") / "data" / f"{name.lower()}.profile.json"
