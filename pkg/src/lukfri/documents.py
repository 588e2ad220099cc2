"""JSON problem/assignment files and result rendering."""
from __future__ import annotations

import decimal
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Dict, Sequence

from .core import Assignment, Problem, as_assignment, format_decimal, to_fraction
from .exceptions import InputError

APPROX_DIGITS = 12


def _parse_json(text) -> Any:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"document is not UTF-8: {exc}") from None
    try:
        # floats keep their literal text so 0.1 means 1/10
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed document: {exc}") from None


def _literal(value, where: str) -> Fraction:
    if isinstance(value, (list, dict)) or value is None:
        raise InputError(f"{where}: expected a number literal, got {json.dumps(value, default=str)}")
    try:
        return to_fraction(value)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def parse_problem(text) -> Problem:
    """Read ``{"A": [[...], ...], "b": [...]}`` into an exact :class:`Problem`."""
    doc = _parse_json(text)
    if not isinstance(doc, dict):
        raise InputError("problem document must be an object")
    for key in ("A", "b"):
        if key not in doc:
            raise InputError(f"problem document is missing {key!r}")
    A, b = doc["A"], doc["b"]
    if not isinstance(A, list) or not all(isinstance(r, list) for r in A):
        raise InputError("'A' must be an array of arrays")
    if not isinstance(b, list):
        raise InputError("'b' must be an array")
    rows = []
    for i, row in enumerate(A):
        vals = []
        for j, v in enumerate(row):
            q = _literal(v, f"A[{i}][{j}]")
            if not 0 <= q <= 1:
                raise InputError(f"A[{i}][{j}] = {q} is outside [0, 1]")
            vals.append(q)
        rows.append(vals)
    reqs = []
    for i, v in enumerate(b):
        q = _literal(v, f"b[{i}]")
        if q <= 0:
            raise InputError(f"b[{i}] = {q} must be positive")
        reqs.append(q)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        bad = next(i for i, r in enumerate(rows) if len(r) != len(rows[0]))
        raise InputError(f"A is ragged at row {bad}: {len(rows[bad])} entries, expected {len(rows[0])}")
    for key in ("name", "comment"):
        if key in doc and not isinstance(doc[key], str):
            raise InputError(f"{key!r} must be a string")
    return Problem(rows, reqs)


def parse_assignment(text, n: int | None = None) -> Assignment:
    """Read ``{"x": [...]}``."""
    doc = _parse_json(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("x"), list):
        raise InputError("assignment document must be an object with an array 'x'")
    vals = [_literal(v, f"x[{j}]") for j, v in enumerate(doc["x"])]
    return as_assignment(vals, n)


def render_literal(q: Fraction) -> str:
    """Shortest exact text for ``q``: a decimal when it terminates, else ``p/q``."""
    return format_decimal(q) or str(q)


def render_problem(p: Problem, **extra) -> str:
    doc: Dict[str, Any] = {
        "A": [[render_literal(v) for v in row] for row in p.A],
        "b": [render_literal(v) for v in p.b],
    }
    doc.update(extra)
    return json.dumps(doc, indent=2, ensure_ascii=False)


def approx(q: Fraction) -> str:
    with decimal.localcontext() as ctx:
        ctx.prec = APPROX_DIGITS
        d = decimal.Decimal(q.numerator) / decimal.Decimal(q.denominator)
    return format(d.normalize(), "f") if d == d.to_integral_value() else str(d)


def scalar(q: Fraction) -> Dict[str, str]:
    return {"exact": str(q), "approx": approx(q)}


def vector(x: Sequence[Fraction]) -> list:
    return [scalar(v) for v in x]


def bundled_fixture(name: str) -> Path | None:
    """Path of a shipped example file such as ``example6.json``, if it exists."""
    ref = resources.files("lukfri") / "data" / name
    return Path(str(ref)) if ref.is_file() else None


def read_source(path: str) -> bytes:
    """Bytes of ``path`` (``-`` is stdin); falls back to a bundled example of the same name."""
    if path == "-":
        return sys.stdin.buffer.read()
    p = Path(path)
    if p.exists() and not p.is_dir():
        try:
            return p.read_bytes()
        except OSError as exc:
            raise InputError(f"cannot read {path!r}: {exc.strerror}") from None
    fixture = bundled_fixture(p.name) if p.parent == Path(".") else None
    if fixture is not None:
        return fixture.read_bytes()
    raise InputError(f"cannot read {path!r}: no such file")
