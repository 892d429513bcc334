"""Structured verification reports and their JSON / text renderings."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

SCHEMA_VERSION = "1.0"
STATUSES = ("pass", "fail", "flagged")


@dataclass
class Check:
    id: str
    paper_anchor: str
    status: str
    details: dict = field(default_factory=dict)
    timing_ms: float | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    params: dict = field(default_factory=dict)

    def add(self, id: str, anchor: str, ok: bool | str, **details) -> Check:
        status = ok if isinstance(ok, str) else ("pass" if ok else "fail")
        chk = Check(id, anchor, status, jsonable(details))
        self.checks.append(chk)
        return chk

    def run(self, id: str, anchor: str, fn: Callable[[], tuple[bool | str, dict]]) -> Check:
        """Time ``fn`` and record its (status, details). Exceptions become failures."""
        t0 = time.perf_counter()
        try:
            ok, details = fn()
        except Exception as exc:  # noqa: BLE001 - a crashing check is a failing check
            ok, details = False, {"error": f"{type(exc).__name__}: {exc}"}
        chk = self.add(id, anchor, ok, **details)
        chk.timing_ms = round((time.perf_counter() - t0) * 1000, 3)
        return chk

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def summary(self) -> dict[str, int]:
        counts = {s: 0 for s in STATUSES}
        for c in self.checks:
            counts[c.status] += 1
        counts["total"] = len(self.checks)
        return counts

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def get(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def to_dict(self, timings: bool = False) -> dict:
        checks = []
        for c in self.checks:
            entry = {
                "id": c.id,
                "paper_anchor": c.paper_anchor,
                "status": c.status,
                "details": c.details,
            }
            if timings:
                entry["timing_ms"] = c.timing_ms
            checks.append(entry)
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "params": jsonable(self.params),
            "summary": self.summary,
            "checks": checks,
        }


def jsonable(x: Any) -> Any:
    """Convert exact values to JSON-friendly ones (rationals become "p/q" strings)."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((jsonable(v) for v in x), key=repr)
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


def render_json(r: VerificationReport, timings: bool = False) -> str:
    return json.dumps(r.to_dict(timings), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _short(details: dict, width: int = 72) -> str:
    text = json.dumps(details, sort_keys=True, ensure_ascii=False)
    return text if len(text) <= width else text[: width - 3] + "..."


def render_text(r: VerificationReport, timings: bool = False) -> str:
    rows = [(c.status.upper(), c.id, c.paper_anchor, _short(c.details)) for c in r.checks]
    heads = ("STATUS", "CHECK", "ANCHOR", "DETAILS")
    widths = [max([len(h)] + [len(row[i]) for row in rows]) for i, h in enumerate(heads[:3])]
    lines = [f"suite: {r.suite}  (schema {SCHEMA_VERSION})"]
    if r.params:
        lines.append("params: " + json.dumps(jsonable(r.params), sort_keys=True))
    fmt = "  ".join(f"{{:<{w}}}" for w in widths) + "  {}"
    lines.append(fmt.format(*heads))
    lines.append(fmt.format(*("-" * w for w in widths), "-" * 7))
    for c, row in zip(r.checks, rows):
        line = fmt.format(*row)
        if timings and c.timing_ms is not None:
            line += f"  [{c.timing_ms:.1f} ms]"
        lines.append(line.rstrip())
    s = r.summary
    lines.append(f"summary: {s['pass']} pass, {s['flagged']} flagged, {s['fail']} fail ({s['total']} checks)")
    return "\n".join(lines) + "\n"


def emit_report(r: VerificationReport, format: str = "json", path: str | Path | None = None,
                timings: bool = False) -> str:
    """Render ``r``; write it to ``path`` when given. Returns the rendered text."""
    if format == "json":
        text = render_json(r, timings)
    elif format == "text":
        text = render_text(r, timings)
    else:
        raise ValueError(f"unknown report format {format!r}")
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
