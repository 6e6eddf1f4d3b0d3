"""Theorem reports and their text, JSON and CSV renderings.

JSON schema: a list of objects with exactly the :class:`TheoremReport` field
names. ``lhs``/``rhs``/``slack`` are integers (or ``null`` when the hypothesis
was not met); ``relation`` is ``"<="`` for bounds and containment depths and
``"=="`` for golden comparisons. Checkers whose verdict is a yes/no
containment or equality encode it as ``lhs`` = number of violations,
``rhs = 0``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields

from .errors import InputError

MET = "met"
NOT_MET = "not-met"
CAPACITY = "capacity"
ERROR = "error"


@dataclass
class TheoremReport:
    entry: str
    checker: str
    hypothesis: str
    lhs: int | None
    rhs: int | None
    slack: int | None
    passed: bool
    timing: float
    relation: str = "<="
    detail: str = ""

    @classmethod
    def compare(cls, entry, checker, lhs, rhs, *, relation="<=", detail="", timing=0.0):
        ok = lhs <= rhs if relation == "<=" else lhs == rhs
        return cls(entry, checker, MET, lhs, rhs, rhs - lhs, ok, round(timing, 4), relation, detail)

    @classmethod
    def skipped(cls, entry, checker, status, detail="", timing=0.0):
        return cls(entry, checker, status, None, None, None, False, round(timing, 4), "<=", detail)

    @property
    def failed(self) -> bool:
        """True for a met hypothesis whose inequality does not hold, or an internal error."""
        return (self.hypothesis == MET and not self.passed) or self.hypothesis == ERROR


FIELD_NAMES = [f.name for f in fields(TheoremReport)]
FORMATS = ("text", "json", "csv")


def _sorted(reports, order=None):
    # corpus order, then checker id
    if order is None:
        order = {}
        for r in reports:
            order.setdefault(r.entry, len(order))
    return sorted(reports, key=lambda r: (order.get(r.entry, len(order)), r.checker))


def _text_line(r: TheoremReport) -> str:
    if r.hypothesis != MET:
        return f"{r.entry:<14} {r.checker:<22} {r.hypothesis.upper():<8} {r.detail}".rstrip()
    verdict = "PASS" if r.passed else "FAIL"
    line = f"{r.entry:<14} {r.checker:<22} {r.lhs} {r.relation} {r.rhs}  {verdict}"
    return f"{line}  {r.detail}" if r.detail else line


def emit_report(reports, fmt: str = "text", *, order=None, include_timing: bool = True) -> str:
    if fmt not in FORMATS:
        raise InputError(f"unknown report format {fmt!r}; expected one of {', '.join(FORMATS)}")
    reports = _sorted(reports, order)
    if fmt == "text":
        lines = [_text_line(r) for r in reports]
        return "\n".join(lines) + ("\n" if lines else "")
    rows = [asdict(r) for r in reports]
    if not include_timing:
        for row in rows:
            row["timing"] = 0.0
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELD_NAMES, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def parse_json_report(text: str) -> list[TheoremReport]:
    return [TheoremReport(**row) for row in json.loads(text)]
