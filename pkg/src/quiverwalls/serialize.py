"""JSON input and output.

Input documents use 1-based vertex labels::

    {"vertices": 3, "arrows": [[1, 2, 1], [2, 3, 2]], "dimension_vector": [1, 2, 1]}

Vectors of rational numbers (stability parameters, cone generators and
normals) are written as lists of strings ``"p"`` or ``"p/q"`` so that no
precision is lost. Dimension vectors and counts are plain JSON integers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from . import polyhedral as ph
from .gitfan import Fan
from .quiver import DimVector, Quiver, build_quiver

__all__ = [
    "InputError",
    "parse_input",
    "parse_rational_vector",
    "format_rational",
    "rational_vector",
    "cone_to_json",
    "cone_from_json",
    "fan_to_json",
    "dumps",
]


class InputError(ValueError):
    """Malformed input document; ``field`` names the offending key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_input(data: bytes | str) -> tuple[Quiver, DimVector]:
    """Validate an input document and convert it to ``(quiver, d)`` with 0-based vertices."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError("document", f"not valid UTF-8 ({exc.reason})") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise InputError("document", f"malformed JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(doc, dict):
        raise InputError("document", "top level must be a JSON object")
    for key in ("vertices", "arrows", "dimension_vector"):
        if key not in doc:
            raise InputError(key, "missing")

    n = doc["vertices"]
    if not _is_int(n) or n < 1:
        raise InputError("vertices", f"must be a positive integer, got {n!r}")

    arrows = doc["arrows"]
    if not isinstance(arrows, list):
        raise InputError("arrows", "must be a list of [source, target, multiplicity]")
    triples = []
    for k, a in enumerate(arrows):
        where = f"arrows[{k}]"
        if not isinstance(a, list) or len(a) != 3 or not all(_is_int(x) for x in a):
            raise InputError(where, f"must be three integers [source, target, multiplicity], got {a!r}")
        s, t, m = a
        if m < 0:
            raise InputError(where, f"negative multiplicity {m}")
        if not (1 <= s <= n and 1 <= t <= n):
            raise InputError(where, f"label out of range 1..{n} in {a}")
        if m:
            triples.append((s - 1, t - 1, m))

    d = doc["dimension_vector"]
    if not isinstance(d, list) or not all(_is_int(x) for x in d):
        raise InputError("dimension_vector", f"must be a list of integers, got {d!r}")
    if len(d) != n:
        raise InputError("dimension_vector", f"has length {len(d)}, expected {n}")
    if any(x < 0 for x in d):
        raise InputError("dimension_vector", f"negative entry in {d}")
    return build_quiver(n, triples), tuple(d)


def parse_rational_vector(text: str, n: int, name: str = "theta") -> tuple[Fraction, ...]:
    """Parse ``"1,-1/2,0"``; entries may be integers, ``p/q`` or decimals."""
    parts = [p.strip() for p in text.split(",")]
    try:
        vec = tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise InputError(name, f"not a comma-separated list of rationals: {text!r}") from None
    if len(vec) != n:
        raise InputError(name, f"has {len(vec)} entries, expected {n}")
    return vec


def format_rational(x) -> str:
    return str(Fraction(x))


def rational_vector(v: Sequence) -> list[str]:
    return [format_rational(x) for x in v]


def cone_to_json(c: ph.Cone) -> dict[str, Any]:
    """Irredundant H- and V-representation of ``c``."""
    return {
        "equalities": [rational_vector(v) for v in c.equalities],
        "inequalities": [rational_vector(v) for v in c.inequalities],
        "rays": [rational_vector(v) for v in c.rays],
        "lineality": [rational_vector(v) for v in c.lineality],
        "dim": c.dim,
    }


def cone_from_json(doc: dict[str, Any], ambient_dim: int) -> ph.Cone:
    """Rebuild a cone from :func:`cone_to_json` output, using the V-representation."""

    def vecs(key):
        return [[Fraction(x) for x in v] for v in doc.get(key, [])]

    return ph.from_rays(ambient_dim, vecs("rays"), vecs("lineality"))


def fan_to_json(fan: Fan) -> dict[str, Any]:
    return {
        "rays": [rational_vector(v) for v in fan.rays],
        "lineality": [rational_vector(v) for v in fan.lineality],
        "cones": [{"dim": c.dim, "ray_indices": list(c.rays)} for c in fan.cones],
        "f_vector": list(fan.f_vector),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
