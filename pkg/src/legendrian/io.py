"""JSON documents for polygons, flag tuples and circles.

Rationals are written as "p/q" strings (integers as plain digit strings);
on input, JSON integers are accepted too. Floats are rejected.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .circles import Circle, CoorientedCircle, lagrangian_to_circle
from .core import Lagrangian
from .flags import OrientedFlag
from .linalg import rational
from .polygon import LegendrianPolygon


class ParseError(ValueError):
    """Malformed document; ``path`` locates the offending field."""

    def __init__(self, message: str, path: str = "$", source: str | None = None):
        self.path = path
        self.source = source
        where = f"{source}: " if source else ""
        super().__init__(f"{where}{path}: {message}")


def fmt_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _rational(x: Any, path: str) -> Fraction:
    if isinstance(x, float):
        raise ParseError(f"float {x!r} is not allowed; write rationals as \"p/q\" strings", path)
    try:
        return rational(x)
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc), path) from None


def _vec4(x: Any, path: str) -> tuple[Fraction, ...]:
    if not isinstance(x, list) or len(x) != 4:
        raise ParseError("expected a list of 4 rationals", path)
    return tuple(_rational(v, f"{path}[{i}]") for i, v in enumerate(x))


def _field(doc: Any, key: str, path: str = "$"):
    if not isinstance(doc, dict):
        raise ParseError("expected an object", path)
    if key not in doc:
        raise ParseError(f"missing field {key!r}", path)
    return doc[key]


def loads(text: str, source: str | None = None) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}", "$", source) from None


def load_file(path: str | Path) -> Any:
    return loads(Path(path).read_text(), str(path))


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------- polygons


def polygon_to_doc(P: LegendrianPolygon) -> dict:
    return {"sign": "-" if P.sign < 0 else "+", "vertices": [[fmt_rational(x) for x in v] for v in P.vertices]}


def polygon_from_doc(doc: Any) -> LegendrianPolygon:
    raw = _field(doc, "sign")
    signs = {"+": 1, "-": -1, "+1": 1, "-1": -1}
    if isinstance(raw, int) and not isinstance(raw, bool) and raw in (1, -1):
        sign = raw
    elif isinstance(raw, str) and raw.strip() in signs:
        sign = signs[raw.strip()]
    else:
        raise ParseError(f"sign must be \"+\" or \"-\" (or 1 / -1), got {raw!r}", "$.sign")
    vs = _field(doc, "vertices")
    if not isinstance(vs, list):
        raise ParseError("expected a list of vertices", "$.vertices")
    vertices = tuple(_vec4(v, f"$.vertices[{i}]") for i, v in enumerate(vs))
    return LegendrianPolygon(vertices, sign)


# ------------------------------------------------------------------- flags


def flags_to_doc(flags: Sequence[OrientedFlag]) -> dict:
    return {"flags": [[[fmt_rational(x) for x in F.f1], [fmt_rational(x) for x in F.f2]] for F in flags]}


def flags_from_doc(doc: Any) -> tuple[OrientedFlag, ...]:
    fs = _field(doc, "flags")
    if not isinstance(fs, list):
        raise ParseError("expected a list of flags", "$.flags")
    out = []
    for i, f in enumerate(fs):
        path = f"$.flags[{i}]"
        if not isinstance(f, list) or len(f) != 2:
            raise ParseError("expected [f1, f2]", path)
        f1, f2 = _vec4(f[0], f"{path}[0]"), _vec4(f[1], f"{path}[1]")
        try:
            out.append(OrientedFlag(f1, f2))
        except ValueError as exc:
            raise ParseError(str(exc), path) from None
    return tuple(out)


# ----------------------------------------------------------------- circles


def circles_to_doc(circles: Sequence[CoorientedCircle]) -> dict:
    items = []
    for c in circles:
        if isinstance(c, Circle):
            items.append({"center": [fmt_rational(c.a), fmt_rational(c.b)], "radius": fmt_rational(c.c)})
        else:
            u, v = c.lagrangian.basis
            items.append({"lagrangian": [[fmt_rational(x) for x in u], [fmt_rational(x) for x in v]]})
    return {"circles": items}


def circles_from_doc(doc: Any) -> tuple[CoorientedCircle, ...]:
    cs = _field(doc, "circles")
    if not isinstance(cs, list):
        raise ParseError("expected a list of circles", "$.circles")
    out: list[CoorientedCircle] = []
    for i, c in enumerate(cs):
        path = f"$.circles[{i}]"
        if isinstance(c, dict) and "center" in c:
            center = c["center"]
            if not isinstance(center, list) or len(center) != 2:
                raise ParseError("expected [a, b]", f"{path}.center")
            a, b = (_rational(x, f"{path}.center[{k}]") for k, x in enumerate(center))
            r = _rational(_field(c, "radius", path), f"{path}.radius")
            out.append(Circle(a, b, r))
        elif isinstance(c, dict) and "lagrangian" in c:
            L = c["lagrangian"]
            if not isinstance(L, list) or len(L) != 2:
                raise ParseError("expected two spanning vectors", f"{path}.lagrangian")
            u, v = _vec4(L[0], f"{path}.lagrangian[0]"), _vec4(L[1], f"{path}.lagrangian[1]")
            try:
                out.append(lagrangian_to_circle(Lagrangian(u, v)))
            except ValueError as exc:
                raise ParseError(str(exc), f"{path}.lagrangian") from None
        else:
            raise ParseError("expected {\"center\", \"radius\"} or {\"lagrangian\"}", path)
    return tuple(out)
