"""Verification records and reports.

A :class:`Record` is one checked instance of a claim; a
:class:`VerificationReport` collects the records of one claim.  Reports merge
order-independently: records are kept sorted by ``(claim, r, k, n, N)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

PARAM_KEYS = ("r", "k", "n", "N")


def _fmt(value) -> str | None:
    if value is None:
        return None
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, Fraction)):
        return str(value)
    return str(value)


@dataclass(frozen=True)
class Record:
    claim: str
    params: dict
    lhs: Any
    rhs: Any
    status: str
    detail: str = ""

    def sort_key(self):
        def key(v):
            return (0, v) if isinstance(v, int) else (1, str(v))

        return (self.claim,) + tuple(
            key(self.params[k]) if self.params.get(k) is not None else (-1, 0)
            for k in PARAM_KEYS
        ) + tuple(sorted((k, str(v)) for k, v in self.params.items() if k not in PARAM_KEYS))

    def to_json(self) -> dict:
        """Stable-order dict: claim, params, lhs, rhs, status (and detail if set)."""
        out = {
            "claim": self.claim,
            "params": {k: v for k, v in self.params.items()},
            "lhs": _fmt(self.lhs),
            "rhs": _fmt(self.rhs),
            "status": self.status,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


def check(claim: str, params: dict, lhs, rhs, detail: str = "") -> Record:
    """Record comparing two exact values."""
    return Record(claim, params, lhs, rhs, PASS if lhs == rhs else FAIL, detail)


def skip(claim: str, params: dict, detail: str) -> Record:
    return Record(claim, params, None, None, SKIP, detail)


@dataclass
class VerificationReport:
    claim: str
    ranges: dict = field(default_factory=dict)
    records: list[Record] = field(default_factory=list)

    def add(self, record: Record) -> None:
        self.records.append(record)

    def extend(self, records: Iterable[Record]) -> None:
        self.records.extend(records)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        merged = VerificationReport(self.claim, {**self.ranges, **other.ranges})
        merged.records = sorted(self.records + other.records, key=Record.sort_key)
        return merged

    def sorted(self) -> "VerificationReport":
        out = VerificationReport(self.claim, dict(self.ranges))
        out.records = sorted(self.records, key=Record.sort_key)
        return out

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    @property
    def counterexample(self) -> Record | None:
        return next((r for r in self.sorted().records if r.status == FAIL), None)

    @property
    def n_checked(self) -> int:
        return sum(r.status == PASS for r in self.records)

    @property
    def n_failed(self) -> int:
        return sum(r.status == FAIL for r in self.records)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.claim}: {status} ({self.n_checked} checked, {self.n_failed} failed)"
        ce = self.counterexample
        if ce is not None:
            line += f"; first counterexample {ce.params}: lhs={ce.lhs} rhs={ce.rhs}"
        return line
