"""JSON (de)serialization for the repo-wide schema.

Inputs carry exact integers and rationals: JSON numbers are parsed with
arbitrary precision, decimals exactly via Fraction, and strings accept the
"p/q" form.  Point order is preserved; it indexes matrix columns and lifting
vectors.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import EmptyInput
from .lattice import Polytope, convex_hull


class ParseError(Exception):
    """Malformed input document; carries line/column when available."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        super().__init__(message)


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"expected a number, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse rational {value!r}: {exc}") from exc
    raise ParseError(f"expected a number or 'p/q' string, got {value!r}")


def parse_integer(value) -> int:
    q = parse_rational(value)
    if q.denominator != 1:
        raise ParseError(f"expected an integer, got {value!r}")
    return int(q)


def _parse_point_list(raw, what: str):
    if not isinstance(raw, list) or not raw:
        raise ParseError(f"{what} must be a nonempty list of points")
    pts = []
    width = None
    for entry in raw:
        if not isinstance(entry, list) or not entry:
            raise ParseError(f"each point in {what} must be a nonempty list")
        p = tuple(parse_integer(x) for x in entry)
        if width is None:
            width = len(p)
        elif len(p) != width:
            raise ParseError(f"points in {what} have inconsistent dimensions")
        pts.append(p)
    return pts


def load_document(text: str) -> dict:
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc), line=exc.lineno, column=exc.colno) from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level document must be a JSON object")
    return doc


def points_from_document(doc: dict):
    """Ordered configuration points (key "points")."""
    if "points" not in doc:
        raise ParseError('document lacks a "points" key')
    return _parse_point_list(doc["points"], '"points"')


def polytope_from_document(doc: dict) -> Polytope:
    """Polytope from "vertices" (taking the hull) or from "points"."""
    if "vertices" in doc:
        pts = _parse_point_list(doc["vertices"], '"vertices"')
    elif "points" in doc:
        pts = _parse_point_list(doc["points"], '"points"')
    else:
        raise ParseError('document lacks "vertices" or "points"')
    try:
        return convex_hull(pts)
    except EmptyInput as exc:
        raise ParseError(str(exc)) from exc


def lifting_from_document(doc: dict, count: int):
    if "u" not in doc:
        raise ParseError('document lacks a "u" key')
    raw = doc["u"]
    if not isinstance(raw, list):
        raise ParseError('"u" must be a list of rationals')
    u = [parse_rational(x) for x in raw]
    if len(u) != count:
        raise ParseError(f'"u" has {len(u)} entries for {count} points')
    return u


def jsonable(obj):
    """Recursively convert exact values to a JSON-stable structure."""
    from .linalg import format_rational

    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    return obj


def dump_document(doc: dict) -> str:
    return json.dumps(jsonable(doc), sort_keys=True, indent=2) + "\n"


def polytope_to_document(P: Polytope) -> dict:
    return {"vertices": [list(v) for v in P.vertices]}
