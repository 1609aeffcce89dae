"""Sweeps over (family, m, case, kind), rendering, and the print cross-check."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field

from .arith import DEFAULT_EFFORT
from .catalogue import (
    FAMILY_ORDER,
    CatalogueCase,
    Family,
    enumerate_cases,
    field_size,
)
from .crosscheck import _rows_for, case_crosscheck, check_display, class_size_identity_row
from .eliminator import Outcome, Verdict, evaluate_case
from .polygon import PolygonKind

__all__ = [
    "CaseReport",
    "SweepConfig",
    "parse_m_range",
    "paper_crosscheck",
    "render_report",
    "reports_from_json",
    "run_sweep",
    "summarize",
]

KIND_ORDER = (PolygonKind.HEXAGON, PolygonKind.OCTAGON)
FORMATS = ("json", "md", "csv")


def parse_m_range(text: str) -> list[int]:
    """``"3..13"`` -> [3, 5, ..., 13]; a bare ``"7"`` -> [7]. Only odd m >= 3."""
    text = text.strip()
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    values = [m for m in range(max(lo, 3), hi + 1) if m % 2 == 1]
    if not values:
        raise ValueError(f"m range {text!r} contains no odd m >= 3")
    return values


@dataclass
class SweepConfig:
    families: tuple[Family, ...]
    m_values: tuple[int, ...]
    kinds: tuple[PolygonKind, ...] = KIND_ORDER
    factor_effort: int = DEFAULT_EFFORT
    format: str = "json"
    out: str | None = None

    def __post_init__(self):
        if not self.families:
            raise ValueError("at least one family is required")
        if not self.kinds:
            raise ValueError("at least one polygon kind is required")
        if not self.m_values:
            raise ValueError("empty m range")
        for m in self.m_values:
            if m < 3 or m % 2 == 0:
                raise ValueError(f"m must be odd and >= 3, got {m}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        # canonical order regardless of how they were given
        self.families = tuple(f for f in FAMILY_ORDER if f in self.families)
        self.kinds = tuple(k for k in KIND_ORDER if k in self.kinds)
        self.m_values = tuple(sorted(set(self.m_values)))


@dataclass
class CaseReport:
    family: str
    m: int
    q: str
    case: str
    kind: str
    point_count: str
    outcome: str
    test: str | None
    witnesses: list[str] = field(default_factory=list)
    reasons: list[str] = field(default_factory=list)
    evidence: dict = field(default_factory=dict)
    crosscheck: str = "n/a"

    @classmethod
    def build(cls, family: Family, m: int, case: CatalogueCase, kind: PolygonKind, v: Verdict):
        return cls(
            family=family.cli_name,
            m=m,
            q=str(field_size(family, m)),
            case=case.label,
            kind=kind.value,
            point_count=v.evidence["point_count"],
            outcome=v.outcome.value,
            test=v.test,
            witnesses=[str(w) for w in v.witnesses],
            reasons=list(v.reasons),
            evidence=v.evidence,
            crosscheck=case_crosscheck(case, m, kind),
        )

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "m": self.m,
            "q": self.q,
            "case": self.case,
            "kind": self.kind,
            "point_count": self.point_count,
            "verdict": {
                "outcome": self.outcome,
                "test": self.test,
                "witnesses": self.witnesses,
                "reasons": self.reasons,
            },
            "evidence": self.evidence,
            "crosscheck": self.crosscheck,
        }

    @classmethod
    def from_dict(cls, d: dict) -> CaseReport:
        v = d["verdict"]
        return cls(
            family=d["family"],
            m=d["m"],
            q=d["q"],
            case=d["case"],
            kind=d["kind"],
            point_count=d["point_count"],
            outcome=v["outcome"],
            test=v["test"],
            witnesses=list(v.get("witnesses", [])),
            reasons=list(v.get("reasons", [])),
            evidence=d.get("evidence", {}),
            crosscheck=d.get("crosscheck", "n/a"),
        )


def run_sweep(config: SweepConfig) -> list[CaseReport]:
    reports = []
    for family in config.families:
        for m in config.m_values:
            for case in sorted(enumerate_cases(family, m), key=CatalogueCase.sort_key):
                for kind in config.kinds:
                    v = evaluate_case(family, m, case, kind, effort=config.factor_effort)
                    reports.append(CaseReport.build(family, m, case, kind, v))
    return reports


def summarize(reports: list[CaseReport]) -> dict:
    counts = Counter(r.outcome for r in reports)
    out = {o.value: counts.get(o.value, 0) for o in Outcome}
    out["total"] = len(reports)
    return out


def render_report(reports: list[CaseReport], fmt: str) -> bytes:
    if fmt == "json":
        payload = {"cases": [r.to_dict() for r in reports], "summary": summarize(reports)}
        return (json.dumps(payload, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "m", "q", "case", "kind", "point_count",
                    "outcome", "test", "witnesses", "reasons", "crosscheck"])
        for r in reports:
            w.writerow([r.family, r.m, r.q, r.case, r.kind, r.point_count, r.outcome,
                        r.test or "", ";".join(r.witnesses), ";".join(r.reasons), r.crosscheck])
        return buf.getvalue().encode()
    if fmt == "md":
        return _markdown(reports).encode()
    raise ValueError(f"unknown format {fmt!r}")


def _markdown(reports: list[CaseReport]) -> str:
    lines = []
    current = None
    for r in reports:
        key = (r.family, r.m)
        if key != current:
            if current is not None:
                lines.append("")
            current = key
            lines += [
                f"## {r.family} m={r.m} (q={r.q})",
                "",
                "| case | kind | point count | verdict | test | cross-check |",
                "|---|---|---:|---|---|---|",
            ]
        verdict = r.outcome
        if r.witnesses:
            verdict += " " + ", ".join(r.witnesses)
        if r.reasons:
            verdict += " (" + "; ".join(r.reasons) + ")"
        lines.append(
            f"| {r.case} | {r.kind} | {r.point_count} | {verdict} | {r.test or ''} | {r.crosscheck} |"
        )
    lines += ["", "| outcome | count |", "|---|---:|"]
    lines += [f"| {k} | {v} |" for k, v in summarize(reports).items()]
    return "\n".join(lines) + "\n"


def reports_from_json(data: bytes | str) -> list[CaseReport]:
    payload = json.loads(data)
    return [CaseReport.from_dict(d) for d in payload["cases"]]


def paper_crosscheck(family: Family, m: int) -> list[dict]:
    """Printed index expressions versus exact quotients, one row per display."""
    rows = []
    for case in sorted(enumerate_cases(family, m), key=CatalogueCase.sort_key):
        for d in _rows_for(case, None):
            rows.append(check_display(d, case, m))
    if family is Family.LARGE_REE:
        rows.append(class_size_identity_row(field_size(family, m)))
    return rows
