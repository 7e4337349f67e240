"""Verdict records and their deterministic serialisation (json, csv, pretty)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Union

from .enumeration import Distribution
from .polynomials import IntPoly, ShiftedCoeffs, to_shifted_basis

CONFIRMED = "confirmed"
COUNTEREXAMPLE = "counterexample"
DISCREPANCY = "discrepancy-with-paper"
VERDICTS = (CONFIRMED, COUNTEREXAMPLE, DISCREPANCY)

FIELDS = ("check", "params", "expected", "observed", "verdict", "witness")


@dataclass
class VerdictReport:
    check: str
    params: dict
    expected: Any
    observed: Any
    verdict: str
    witness: Any = None
    note: Optional[str] = None
    runtime: Optional[float] = field(default=None, compare=False)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def ok(self) -> bool:
        return self.verdict == CONFIRMED

    def sort_key(self):
        return (self.check, tuple(sorted((k, str(v)) for k, v in self.params.items())))

    def to_dict(self, timing: bool = False) -> dict:
        out = {name: jsonable(getattr(self, name)) for name in FIELDS}
        if self.note:
            out["note"] = self.note
        if timing and self.runtime is not None:
            # milliseconds, as a decimal string like every other number
            out["runtime_ms"] = str(round(self.runtime * 1000))
        return out


def jsonable(value: Any) -> Any:
    """Convert to JSON-ready data with every number as an exact decimal string."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, IntPoly):
        return [str(a) for a in value.coeffs]
    if isinstance(value, ShiftedCoeffs):
        return [str(a) for a in value.coeffs]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    if isinstance(value, float):
        raise TypeError("floating point values are not allowed in reports")
    raise TypeError(f"cannot serialise {type(value).__name__}")


def poly_record(p: IntPoly) -> dict:
    return {"coeffs": jsonable(p), "shifted": jsonable(to_shifted_basis(p))}


Reportable = Union[VerdictReport, Iterable[VerdictReport], Distribution, IntPoly, dict]


def emit_report(obj: Reportable, fmt: str = "json", timing: bool = False) -> bytes:
    """Serialise ``obj`` deterministically.

    JSON keys are sorted.  CSV output always starts with a header row.
    """
    if fmt not in ("json", "csv", "pretty"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(obj, Distribution):
        return _emit_distribution(obj, fmt)
    if isinstance(obj, IntPoly):
        return _emit_record(poly_record(obj), fmt)
    if isinstance(obj, VerdictReport):
        return _emit_verdicts([obj], fmt, timing, single=True)
    if isinstance(obj, dict):
        return _emit_record(jsonable(obj), fmt)
    return _emit_verdicts(list(obj), fmt, timing, single=False)


def _dump(data) -> bytes:
    return (json.dumps(data, sort_keys=True, indent=2) + "\n").encode()


def _csv(rows: list[list[str]]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().encode()


def _emit_distribution(dist: Distribution, fmt: str) -> bytes:
    items = sorted(dist.items())
    if fmt == "json":
        return _dump({str(k): str(v) for k, v in items})
    if fmt == "csv":
        return _csv([["value", "count"]] + [[str(k), str(v)] for k, v in items])
    width = max([len("total")] + [len(str(k)) for k, _ in items])
    lines = [f"{str(k):>{width}}  {v}" for k, v in items]
    lines.append(f"{'total':>{width}}  {dist.total()}")
    return ("\n".join(lines) + "\n").encode()


def _emit_record(record: dict, fmt: str) -> bytes:
    if fmt == "json":
        return _dump(record)
    keys = sorted(record)
    if fmt == "csv":
        return _csv([keys, [_cell(record[k]) for k in keys]])
    return ("\n".join(f"{k}: {_cell(record[k])}" for k in keys) + "\n").encode()


def _cell(value) -> str:
    return value if isinstance(value, str) else json.dumps(value, sort_keys=True, separators=(",", ":"))


def _emit_verdicts(reports: list[VerdictReport], fmt: str, timing: bool, single: bool) -> bytes:
    records = [r.to_dict(timing) for r in reports]
    if fmt == "json":
        return _dump(records[0] if single else records)
    header = list(FIELDS) + (["runtime_ms"] if timing else [])
    if fmt == "csv":
        rows = [header] + [[_cell(rec.get(k)) if rec.get(k) is not None else "" for k in header] for rec in records]
        return _csv(rows)
    lines = []
    for rec in records:
        params = " ".join(f"{k}={v}" for k, v in sorted(rec["params"].items()))
        mark = "ok  " if rec["verdict"] == CONFIRMED else "FAIL"
        lines.append(f"[{mark}] {rec['check']:<14} {params:<36} {rec['verdict']}")
        if rec["verdict"] != CONFIRMED:
            lines.append(f"       expected: {_cell(rec['expected'])}")
            lines.append(f"       observed: {_cell(rec['observed'])}")
            if rec["witness"] is not None:
                lines.append(f"       witness:  {_cell(rec['witness'])}")
        if rec.get("note"):
            lines.append(f"       note: {rec['note']}")
    confirmed = sum(1 for rec in records if rec["verdict"] == CONFIRMED)
    lines.append(f"{confirmed}/{len(records)} confirmed")
    return ("\n".join(lines) + "\n").encode()
