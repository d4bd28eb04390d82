"""Machine-readable reports for the CLI.

Reports are deterministic: identical inputs produce byte-identical text
and JSON output (canonical subspace bases upstream make the numbers
reproducible; rendering never includes timing or environment data —
timing goes to stderr).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    status: str                 # "pass" | "fail"
    witnesses: list[str] = field(default_factory=list)


@dataclass
class Report:
    command: str
    document: str = ""
    checks: list[CheckResult] = field(default_factory=list)
    dims: dict = field(default_factory=dict)       # label -> int | list
    values: dict = field(default_factory=dict)     # label -> nested exact strings
    tables: dict = field(default_factory=dict)     # name -> {"columns": [...], "rows": [...]}
    notes: list[str] = field(default_factory=list)

    def add_check(self, name: str, ok: bool, witnesses=None) -> None:
        self.checks.append(CheckResult(name, "pass" if ok else "fail",
                                       [str(w) for w in (witnesses or [])]))

    def add_report(self, name: str, verification, group=None) -> None:
        """Fold a VerificationReport into one named check."""
        self.add_check(name, verification.ok,
                       [v.render(group) for v in verification.violations])

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "document": self.document,
            "result": "pass" if self.ok else "fail",
            "checks": [
                {"name": c.name, "status": c.status, "witnesses": c.witnesses}
                for c in self.checks
            ],
            "dims": self.dims,
            "values": self.values,
            "tables": self.tables,
            "notes": self.notes,
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        if self.document:
            lines.append(f"document: {self.document}")
        if self.dims:
            lines.append("dimensions:")
            for k in self.dims:
                lines.append(f"  {k}: {self.dims[k]}")
        if self.values:
            lines.append("values:")
            lines.extend(_render_nested(self.values, indent=2))
        for tname, table in self.tables.items():
            lines.append(f"{tname}:")
            cols = table["columns"]
            rows = [[str(x) for x in row] for row in table["rows"]]
            widths = [max(len(str(c)), *(len(r[i]) for r in rows)) if rows else len(str(c))
                      for i, c in enumerate(cols)]
            lines.append("  " + "  ".join(str(c).ljust(w) for c, w in zip(cols, widths)))
            for r in rows:
                lines.append("  " + "  ".join(x.ljust(w) for x, w in zip(r, widths)))
        if self.checks:
            lines.append("checks:")
            for c in self.checks:
                lines.append(f"  [{c.status}] {c.name}")
                for w in c.witnesses:
                    lines.append(f"      {w}")
        for note in self.notes:
            lines.append(f"note: {note}")
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _render_nested(obj, indent: int) -> list[str]:
    pad = " " * indent
    lines = []
    if isinstance(obj, dict):
        for k in obj:
            v = obj[k]
            if isinstance(v, (dict, list)) and not _is_flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_nested(v, indent + 2))
            else:
                lines.append(f"{pad}{k}: {_flat(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _is_flat(v):
                lines.append(f"{pad}-")
                lines.extend(_render_nested(v, indent + 2))
            else:
                lines.append(f"{pad}- {_flat(v)}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


def _is_flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return not isinstance(v, (dict, list))


def _flat(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)
