"""Verification reports and their JSON/CSV serialisation."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any

SCHEMA_VERSION = 1
CSV_COLUMNS = ("suite", "check_id", "input", "value_re", "value_im", "ref_re", "ref_im",
               "abs_err", "estimate", "pass")


def format_complex(z: complex) -> str:
    """a+bi notation, lossless (repr of both parts)."""
    z = complex(z)
    im = repr(z.imag)
    sign = "" if im.startswith("-") else "+"
    return f"{z.real!r}{sign}{im}i"


def parse_complex(s: str) -> complex:
    """Parse 'a+bi', 'a-bi', 'bi', 'a' (also accepts j)."""
    t = s.strip().replace(" ", "").replace("I", "i").replace("J", "j").replace("i", "j")
    if t in ("j", "+j", "-j"):
        t = t.replace("j", "1j")
    elif t.endswith("j") and t[-2:-1] in ("+", "-"):
        t = t[:-1] + "1j"
    try:
        return complex(t)
    except ValueError as exc:
        raise ValueError(f"cannot parse complex number {s!r}") from exc


@dataclass(frozen=True)
class CheckRecord:
    """One verification check.

    ``passed`` is True iff the routine met its own accuracy target
    (``converged``) and abs_err <= max(tol, estimate).
    """

    suite: str
    check_id: str
    inputs: str
    value: complex
    reference: complex
    abs_err: float
    rel_err: float
    estimate: float
    tol: float
    converged: bool = True
    passed: bool = field(default=False)

    @classmethod
    def make(cls, suite: str, check_id: str, inputs: str, value: complex, reference: complex,
             estimate: float, tol: float, converged: bool = True) -> CheckRecord:
        value, reference = complex(value), complex(reference)
        err = float(abs(value - reference))
        rel = err / abs(reference) if reference != 0 else err
        ok = bool(converged) and bool(err <= max(tol, estimate))
        return cls(suite, check_id, inputs, value, reference, float(err), float(rel),
                   float(estimate), float(tol), bool(converged), ok)


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    checks: tuple[CheckRecord, ...]
    environment: dict[str, Any]
    notes: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def payload(self) -> dict:
        """Everything except the wall time (deterministic for a given config)."""
        d = to_dict(self)
        d.pop("wall_time")
        return d


def _enc_check(c: CheckRecord) -> dict:
    d = asdict(c)
    d["value"] = [c.value.real, c.value.imag]
    d["reference"] = [c.reference.real, c.reference.imag]
    return d


def to_dict(r: VerificationReport) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "suite": r.suite,
        "environment": r.environment,
        "notes": r.notes,
        "checks": [_enc_check(c) for c in r.checks],
        "wall_time": r.wall_time,
    }


def from_dict(d: dict) -> VerificationReport:
    if d.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {d.get('schema')!r}")
    checks = []
    for c in d["checks"]:
        c = dict(c)
        c["value"] = complex(*c["value"])
        c["reference"] = complex(*c["reference"])
        checks.append(CheckRecord(**c))
    return VerificationReport(d["suite"], tuple(checks), d["environment"], d["notes"], d["wall_time"])


def emit_json(r: VerificationReport) -> str:
    return json.dumps(to_dict(r), indent=2, sort_keys=True)


def parse_json(s: str) -> VerificationReport:
    return from_dict(json.loads(s))


def emit_csv(r: VerificationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for c in r.checks:
        w.writerow([c.suite, c.check_id, c.inputs, repr(c.value.real), repr(c.value.imag),
                    repr(c.reference.real), repr(c.reference.imag), repr(c.abs_err), repr(c.estimate),
                    "true" if c.passed else "false"])
    return buf.getvalue()


def emit_report(r: VerificationReport, fmt: str = "json") -> str:
    if fmt == "json":
        return emit_json(r)
    if fmt == "csv":
        return emit_csv(r)
    raise ValueError(f"unknown format {fmt!r}")
