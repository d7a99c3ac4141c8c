"""Scene files and reports.

A scene is a JSON object::

    {
      "dimension": 2,
      "directions": [["1", "0"], ["0", "1"]],
      "lines": [{"base": ["0", "0"], "dir": ["1", "1"]}, ...],
      "points": [["0", "0"], ["0", "1"]],
      "data": ["1", "-3/2"]
    }

Rationals are strings ``"p/q"`` or ``"n"``; plain JSON integers are also
accepted, floats never.  Only ``dimension`` is required.  Reports written by
the CLI carry the same fields plus report-only ones, so any report can be
read back as a scene.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import SceneError
from .geometry import Line

SCENE_FIELDS = {"dimension", "directions", "lines", "points", "data"}
REPORT_FIELDS = {"kind", "command", "verdict", "case", "lambda", "line_assignment", "pairing", "assignment", "trace", "note"}
REPORT_KIND = "ridgepath-report"

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


@dataclass(frozen=True)
class Scene:
    dimension: int
    directions: tuple = ()
    lines: tuple = ()
    points: tuple | None = None
    data: tuple | None = None
    report: dict | None = None


_WS = re.compile(r"[ \t\n\r]*")


def _value_offsets(text: str) -> dict:
    """Offset of every value in a valid JSON document, keyed by field path."""
    decoder = json.JSONDecoder()
    out: dict = {}

    def ws(i):
        return _WS.match(text, i).end()

    def value(i, path):
        i = ws(i)
        out[path] = i
        c = text[i]
        if c in "{[":
            close = "}" if c == "{" else "]"
            i = ws(i + 1)
            k = 0
            while text[i] != close:
                if c == "{":
                    key, i = json.decoder.scanstring(text, i + 1)
                    i = ws(i) + 1  # the colon
                    sub = f"{path}.{key}" if path else key
                else:
                    sub = f"{path}[{k}]"
                i = ws(value(i, sub))
                if text[i] == ",":
                    i = ws(i + 1)
                k += 1
            return i + 1
        return decoder.raw_decode(text, i)[1]

    value(0, "")
    return out


class _Locator:
    """Source line of a field path such as ``lines[1].dir``."""

    def __init__(self, text: str, source: str):
        self.text = text
        self.source = source
        self._offsets = None

    def line_of(self, path: str) -> int:
        if self._offsets is None:
            self._offsets = _value_offsets(self.text)
        # fall back to the nearest enclosing field that was located
        while path and path not in self._offsets:
            path = re.sub(r"(\.[^.\[]*|\[\d+\])$", "", path)
        pos = self._offsets.get(path, 0)
        return self.text.count("\n", 0, pos) + 1

    def error(self, path: str, msg: str) -> SceneError:
        return SceneError(f"{self.source}:{self.line_of(path)}: field '{path}': {msg}")


def _rational(value, path, loc) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise loc.error(path, f"expected a rational string like \"-7/5\", got {json.dumps(value)}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str) or not _RATIONAL.match(value.strip()):
        raise loc.error(path, f"expected a rational string like \"-7/5\", got {json.dumps(value)}")
    try:
        return Fraction(value.strip())
    except ZeroDivisionError:
        raise loc.error(path, "zero denominator") from None


def _vector(value, n, path, loc) -> tuple:
    if not isinstance(value, list):
        raise loc.error(path, "expected a list of rationals")
    if len(value) != n:
        raise loc.error(path, f"expected {n} components, got {len(value)}")
    return tuple(_rational(x, f"{path}[{i}]", loc) for i, x in enumerate(value))


def _list(doc, key, loc) -> list:
    value = doc[key]
    if not isinstance(value, list):
        raise loc.error(key, "expected a list")
    return value


def parse_scene(text: str, source: str = "<scene>") -> Scene:
    loc = _Locator(text, source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(f"{source}:{exc.lineno}: invalid JSON: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise SceneError(f"{source}:1: top level must be a JSON object")

    is_report = doc.get("kind") == REPORT_KIND
    allowed = SCENE_FIELDS | REPORT_FIELDS if is_report else SCENE_FIELDS
    for key in doc:
        if key not in allowed:
            raise loc.error(key, "unknown field")

    if "dimension" not in doc:
        raise SceneError(f"{source}:1: field 'dimension': missing")
    n = doc["dimension"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise loc.error("dimension", "expected a positive integer")

    directions = ()
    if "directions" in doc:
        directions = tuple(
            _vector(v, n, f"directions[{i}]", loc) for i, v in enumerate(_list(doc, "directions", loc))
        )
        for i, a in enumerate(directions):
            if all(x == 0 for x in a):
                raise loc.error(f"directions[{i}]", "direction must be nonzero")

    lines = []
    if "lines" in doc:
        for i, item in enumerate(_list(doc, "lines", loc)):
            path = f"lines[{i}]"
            if not isinstance(item, dict):
                raise loc.error(path, "expected an object with 'base' and 'dir'")
            for key in item:
                if key not in ("base", "dir"):
                    raise loc.error(f"{path}.{key}", "unknown field")
            for key in ("base", "dir"):
                if key not in item:
                    raise loc.error(f"{path}.{key}", "missing")
            base = _vector(item["base"], n, f"{path}.base", loc)
            d = _vector(item["dir"], n, f"{path}.dir", loc)
            if all(x == 0 for x in d):
                raise loc.error(f"{path}.dir", "line direction must be nonzero")
            lines.append(Line(base, d))

    points = None
    if "points" in doc and doc["points"] is not None:
        points = tuple(_vector(p, n, f"points[{i}]", loc) for i, p in enumerate(_list(doc, "points", loc)))
        seen = {}
        for i, p in enumerate(points):
            if p in seen:
                raise loc.error(f"points[{i}]", f"duplicates points[{seen[p]}]")
            seen[p] = i

    data = None
    if "data" in doc and doc["data"] is not None:
        data = tuple(_rational(x, f"data[{i}]", loc) for i, x in enumerate(_list(doc, "data", loc)))
        if points is None or len(data) != len(points):
            raise loc.error("data", "must have exactly one value per point")

    return Scene(n, directions, tuple(lines), points, data, doc if is_report else None)


def load_scene(path: str) -> Scene:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SceneError(f"{path}: cannot read: {exc.strerror}") from None
    return parse_scene(text, path)


# -- serialization ------------------------------------------------------------


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vector(v) -> list[str]:
    return [fmt_rational(x) for x in v]


def scene_fields(scene: Scene) -> dict:
    out = {"dimension": scene.dimension, "directions": [fmt_vector(a) for a in scene.directions]}
    if scene.lines:
        out["lines"] = [{"base": fmt_vector(ln.base), "dir": fmt_vector(ln.dir)} for ln in scene.lines]
    return out


def make_report(command: str, verdict: str, scene: Scene, points=None, **extra) -> dict:
    """Report dict in a fixed key order, readable back by :func:`parse_scene`."""
    rep = {"kind": REPORT_KIND, "command": command, "verdict": verdict}
    rep.update(scene_fields(scene))
    if points is not None:
        rep["points"] = [fmt_vector(p) for p in points]
    for key, value in extra.items():
        if value is not None:
            rep[key] = value
    return rep


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
