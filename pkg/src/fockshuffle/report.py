"""Check records and verification reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA_VERSION = 1


@dataclass
class Check:
    """Outcome of one identity check.

    ``identity`` is a stable id, ``anchor`` a short human description of
    the identity being checked.  A failing check always carries a witness.
    """

    identity: str
    anchor: str
    passed: bool
    witness: dict | None = None
    count: int = 0  # number of individual equalities compared
    info: dict | None = None
    seconds: float | None = None

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError(f"failing check {self.identity} needs a witness")

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json(self, timings: bool = False) -> dict:
        out: dict[str, Any] = {
            "identity": self.identity,
            "anchor": self.anchor,
            "status": self.status,
            "compared": self.count,
        }
        if self.witness:
            out["witness"] = self.witness
        if self.info:
            out["info"] = self.info
        if timings and self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out


class Tally:
    """Accumulates comparisons for one check and keeps the first mismatch."""

    def __init__(self, identity: str, anchor: str):
        self.identity = identity
        self.anchor = anchor
        self.count = 0
        self.witness: dict | None = None
        self.info: dict = {}

    def compare(self, lhs, rhs, **where) -> bool:
        self.count += 1
        if lhs == rhs:
            return True
        if self.witness is None:
            self.witness = {**{k: _plain(v) for k, v in where.items()}, "lhs": _plain(lhs), "rhs": _plain(rhs)}
        return False

    def require(self, ok: bool, **where) -> bool:
        self.count += 1
        if not ok and self.witness is None:
            self.witness = {k: _plain(v) for k, v in where.items()}
        return ok

    def fail(self, **where):
        if self.witness is None:
            self.witness = {k: _plain(v) for k, v in where.items()}

    def result(self) -> Check:
        return Check(
            self.identity,
            self.anchor,
            self.witness is None,
            self.witness,
            self.count,
            self.info or None,
        )


def _plain(v):
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if hasattr(v, "to_text"):
        return v.to_text()
    if hasattr(v, "to_string"):
        return v.to_string()
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    return str(v)


@dataclass
class Report:
    suite: str
    params: dict
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def totals(self) -> dict:
        n_pass = sum(1 for c in self.checks if c.passed)
        return {"checks": len(self.checks), "pass": n_pass, "fail": len(self.checks) - n_pass}

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self, timings: bool = False) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "params": self.params,
            "totals": self.totals,
            "status": "PASS" if self.passed else "FAIL",
            "checks": [c.to_json(timings) for c in self.checks],
        }

    def dumps(self, timings: bool = False) -> str:
        return json.dumps(self.to_json(timings), indent=2, sort_keys=False, ensure_ascii=False) + "\n"

    def to_text(self, timings: bool = False) -> str:
        lines = [f"suite {self.suite}  " + " ".join(f"{k}={v}" for k, v in self.params.items())]
        for c in self.checks:
            t = f"  {c.seconds:.2f}s" if timings and c.seconds is not None else ""
            lines.append(f"{c.status}  {c.identity}  ({c.count} compared){t}  {c.anchor}")
            if not c.passed:
                lines.append(f"      witness: {json.dumps(c.witness, ensure_ascii=False)}")
        t = self.totals
        lines.append(f"{t['pass']}/{t['checks']} checks passed")
        return "\n".join(lines) + "\n"
