"""Run reports: JSON and CSV rendering with exact integers only."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any


def exact(v: Any) -> str:
    """Exact decimal string for ints, ``p/q`` for non-integral rationals."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return str(v)
    raise TypeError(f"not an exact number: {v!r}")


@dataclass
class Check:
    name: str
    passed: bool
    lhs: str
    rhs: str
    n: int | None = None
    k: int | None = None

    @classmethod
    def of(cls, name: str, lhs, rhs, n: int | None = None, k: int | None = None) -> "Check":
        return cls(name, Fraction(lhs) == Fraction(rhs), exact(lhs), exact(rhs), n, k)


@dataclass
class RunReport:
    command: list[str]
    shape: dict[str, int]
    results: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    findings: list[Check] = field(default_factory=list)
    elapsed_ms: int = 0
    workers: int = 1

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["ok"] = self.ok
        for key in ("checks", "findings"):
            d[key] = [_check_dict(c) for c in d[key]]
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "RunReport":
        def load(items):
            return [
                Check(c["name"], c["pass"], c["lhs"], c["rhs"], c.get("n"), c.get("k")) for c in items
            ]

        return cls(
            command=list(d["command"]),
            shape=dict(d["shape"]),
            results=d["results"],
            checks=load(d["checks"]),
            findings=load(d["findings"]),
            elapsed_ms=int(d["elapsed_ms"]),
            workers=int(d["workers"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if "counts" in self.results and self.command and self.command[0] == "census":
            w.writerow(["rank", "count"])
            for i, c in enumerate(self.results["counts"]):
                w.writerow([i, c])
            return buf.getvalue()
        w.writerow(["check", "n", "k", "pass", "lhs", "rhs"])
        for c in self.checks:
            n = c.n if c.n is not None else self.shape.get("n", "")
            k = c.k if c.k is not None else self.shape.get("k", "")
            w.writerow([c.name, n, k, "true" if c.passed else "false", c.lhs, c.rhs])
        return buf.getvalue()


def _check_dict(c: dict[str, Any]) -> dict[str, Any]:
    out = {"name": c["name"], "pass": c["passed"], "lhs": c["lhs"], "rhs": c["rhs"]}
    if c["n"] is not None:
        out["n"] = c["n"]
    if c["k"] is not None:
        out["k"] = c["k"]
    return out
