"""Deterministic run reports for the command-line front end."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence


def input_digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _plain(value: Any) -> Any:
    """JSON-ready copy: fractions become "p/q" strings, sets become sorted lists."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, Mapping):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [_plain(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


@dataclass
class RunReport:
    command: str
    input_digest: str | None
    parameters: dict[str, Any]
    results: dict[str, Any]
    counters: dict[str, int] = field(default_factory=dict)
    wall_time: float | None = None
    # rows for --format csv, with a fixed column order
    table: list[dict[str, Any]] = field(default_factory=list)
    columns: Sequence[str] = ()
    lines: list[str] = field(default_factory=list)

    def as_dict(self) -> dict[str, Any]:
        return _plain({
            "command": self.command,
            "input_digest": self.input_digest,
            "parameters": self.parameters,
            "results": self.results,
            "counters": self.counters,
            "wall_time": self.wall_time,
        })

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        out = list(self.lines)
        d = self.as_dict()
        out.append(f"# command: {d['command']}")
        if d["input_digest"]:
            out.append(f"# input: {d['input_digest']}")
        for section in ("parameters", "counters"):
            for key in sorted(d[section]):
                out.append(f"# {section[:-1]} {key}: {_scalar(d[section][key])}")
        if self.wall_time is not None:
            out.append(f"# wall_time: {self.wall_time:.3f}s")
        return "\n".join(out) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        columns = list(self.columns) or sorted({k for row in self.table for k in row})
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for row in self.table:
            writer.writerow({k: _scalar(_plain(v)) for k, v in row.items()})
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_scalar(v) for v in value)
    return str(value)


def cycle_lines(cycles: Iterable[Sequence[int]]) -> list[str]:
    return [" ".join(map(str, c)) for c in cycles]
