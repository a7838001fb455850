"""Deterministic JSON and text rendering of command results.

Every report is an object with keys ``command``, ``input_digest``, ``passed``
and ``findings``, in that order.  Rationals are strings ``"p/q"``.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any, Sequence

from .algebra import ValidationReport
from .linalg import Subspace
from .radicals import SeriesTrace


def rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def vector(v: Sequence) -> list[str]:
    return [rational(x) for x in v]


def subspace(S: Subspace, labels: Sequence[str] | None = None) -> dict:
    out: dict[str, Any] = {"dim": S.dim, "basis": [vector(v) for v in S.basis]}
    if labels is not None:
        out["labels"] = list(labels)
    return out


def validation(r: ValidationReport) -> dict:
    return {
        "passed": r.passed,
        "checked": r.checked,
        "violations": r.total_violations,
        "witnesses": [
            {"identity": v.identity, "at": list(v.witness), "lhs": vector(v.lhs),
             "rhs": vector(v.rhs)}
            for v in r.violations
        ],
        "notes": list(r.notes),
    }


def series(tr: SeriesTrace) -> dict:
    return {"kind": tr.kind, "dims": [S.dim for S in tr.terms], "reaches_zero": tr.reaches_zero,
            "terms": [[vector(v) for v in S.basis] for S in tr.terms]}


def make(command: str, data: bytes, passed: bool, findings: dict) -> dict:
    return {"command": command, "input_digest": digest(data), "passed": passed,
            "findings": findings}


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _is_subspace(v: Any) -> bool:
    return isinstance(v, dict) and {"dim", "basis"} <= set(v)


def _row(v: list) -> str:
    return "(" + ", ".join(_short(x) for x in v) + ")"


def _inline(v: Any) -> str | None:
    """One-line rendering, or None when the value needs several lines."""
    if _is_subspace(v):
        rows = " ".join(_row(r) for r in v["basis"])
        return f"dim {v['dim']}" + (f": {rows}" if rows else "")
    if isinstance(v, list):
        if not v:
            return "none"
        if all(not isinstance(x, (dict, list)) for x in v):
            return " ".join(_short(x) for x in v)
        if all(isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x) for x in v):
            return " ".join(_row(x) for x in v)
        return None
    if isinstance(v, dict):
        return None if v else "none"
    return _short(v)


def _text_value(v: Any, indent: int) -> list[str]:
    pad = "  " * indent
    if isinstance(v, dict):
        lines = []
        for k, x in v.items():
            one = _inline(x)
            if one is not None:
                lines.append(f"{pad}{k}: {one}")
            else:
                lines.append(f"{pad}{k}:")
                lines.extend(_text_value(x, indent + 1))
        return lines
    if isinstance(v, list):
        out = []
        for k, x in enumerate(v):
            one = _inline(x)
            if one is not None:
                out.append(f"{pad}[{k}] {one}")
            else:
                out.append(f"{pad}[{k}]")
                out.extend(_text_value(x, indent + 1))
        return out
    return [pad + _short(v)]


def _short(x: Any) -> str:
    if isinstance(x, str) and x.endswith("/1"):
        return x[:-2]
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def to_text(report: dict) -> str:
    head = f"{report['command']}: {'PASS' if report['passed'] else 'FAIL'}"
    return "\n".join([head] + _text_value(report["findings"], 1)) + "\n"
