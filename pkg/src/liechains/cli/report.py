"""Machine-readable reports, schema ``report/1``."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field as dc_field

SCHEMA = "report/1"
STATUSES = ("pass", "fail", "indeterminate", "measured")


@dataclass
class Check:
    statement: str
    instance: str
    status: str
    details: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class SuiteReport:
    suite: str
    checks: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)

    def add(self, statement: str, instance: str, status: str, **details) -> Check:
        c = Check(statement, instance, status, details)
        self.checks.append(c)
        return c

    def expect(self, statement: str, instance: str, ok: bool, **details) -> Check:
        return self.add(statement, instance, "pass" if ok else "fail", **details)

    def summary(self) -> dict:
        counts = {s: 0 for s in STATUSES}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    def to_dict(self) -> dict:
        checks = sorted((asdict(c) for c in self.checks),
                        key=lambda d: (d["statement"], d["instance"], json.dumps(d["details"], sort_keys=True)))
        return {"suite": self.suite, "checks": checks, "notes": list(self.notes), "summary": self.summary()}


def render_json(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA, **payload}, sort_keys=True, indent=1, default=str) + "\n"


def render_suites(reports: list, header: list) -> str:
    return render_json({
        "kind": "verify",
        "header": header,
        "suites": [r.to_dict() for r in sorted(reports, key=lambda r: r.suite)],
        "failed": any(r.failed for r in reports),
    })


def render_table(rows: list[tuple]) -> str:
    if not rows:
        return ""
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"
