"""JSON and CSV emission for count sequences, censuses and reports.

All potentially huge integers travel as decimal strings (counts reach
2^(universe size) immediately).  Field order is fixed and no timing or
host information enters any body, so identical inputs serialize to
byte-identical output.

Count record schema, one record per node count:
  {"b": int, "n": int, "family": str, "method": str,
   "semantics": "head-to-tail", "coeffs": [["q", "count"], ...]}
coeffs lists nonzero coefficients only, q ascending, both entries
decimal strings.  CSV columns: b,n,family,method,q,count.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from ..formulas import CountSequence
from ..oracle import SEMANTICS, CensusTable
from ..polynomials import ZERO, YPoly
from .compare import CompareReport, PerNComparison

__all__ = [
    "CensusSummary",
    "census_summary",
    "emit_census_csv",
    "emit_census_json",
    "emit_compare_json",
    "emit_counts_csv",
    "emit_counts_json",
    "emit_eval_csv",
    "emit_eval_json",
    "pairs_to_poly",
    "parse_census_json",
    "parse_compare_json",
    "parse_counts_json",
    "poly_pairs",
]


def poly_pairs(p: YPoly) -> list[list[str]]:
    return [[str(q), str(c)] for q, c in enumerate(p.coeffs) if c]


def pairs_to_poly(pairs: list[list[str]]) -> YPoly:
    if not pairs:
        return ZERO
    coeffs = [0] * (max(int(q) for q, _ in pairs) + 1)
    for q, c in pairs:
        coeffs[int(q)] = int(c)
    return YPoly(coeffs)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------- counts

def count_records(seq: CountSequence) -> list[dict]:
    return [
        {
            "b": seq.b,
            "n": n,
            "family": seq.family,
            "method": seq.method,
            "semantics": SEMANTICS,
            "coeffs": poly_pairs(p),
        }
        for n, p in enumerate(seq.counts)
    ]


def emit_counts_json(seq: CountSequence) -> str:
    return _dumps(count_records(seq))


def parse_counts_json(text: str) -> CountSequence:
    records = json.loads(text)
    if not records:
        raise ValueError("no count records")
    head = records[0]
    counts = [ZERO] * len(records)
    for rec in records:
        for key in ("b", "family", "method"):
            if rec[key] != head[key]:
                raise ValueError(f"records disagree on {key}")
        counts[rec["n"]] = pairs_to_poly(rec["coeffs"])
    return CountSequence(head["b"], head["family"], head["method"], tuple(counts))


def emit_counts_csv(seq: CountSequence) -> str:
    lines = ["b,n,family,method,q,count"]
    for n, p in enumerate(seq.counts):
        for q, c in enumerate(p.coeffs):
            if c:
                lines.append(f"{seq.b},{n},{seq.family},{seq.method},{q},{c}")
    return "\n".join(lines) + "\n"


def emit_eval_json(seq: CountSequence, y0: int) -> str:
    return _dumps(
        {
            "b": seq.b,
            "family": seq.family,
            "method": seq.method,
            "semantics": SEMANTICS,
            "y0": y0,
            "values": [str(v) for v in seq.evaluated(y0)],
        }
    )


def emit_eval_csv(seq: CountSequence, y0: int) -> str:
    lines = ["b,n,family,method,y0,value"]
    for n, v in enumerate(seq.evaluated(y0)):
        lines.append(f"{seq.b},{n},{seq.family},{seq.method},{y0},{v}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- census

@dataclass(frozen=True, slots=True)
class CensusSummary:
    """The value content of a census, independent of how it was swept."""

    b: int
    n: int
    semantics: str
    universe_size: int
    totals: YPoly
    acyclic: YPoly
    strong: YPoly
    source_profile: tuple[tuple[int, int, int, int], ...]


def census_summary(table: CensusTable) -> CensusSummary:
    return CensusSummary(
        b=table.b,
        n=table.n,
        semantics=table.semantics,
        universe_size=table.universe_size,
        totals=table.totals_poly(),
        acyclic=table.acyclic_poly(),
        strong=table.strong_poly(),
        source_profile=table.source_profile(),
    )


def emit_census_json(table: CensusTable | CensusSummary) -> str:
    s = table if isinstance(table, CensusSummary) else census_summary(table)
    return _dumps(
        {
            "b": s.b,
            "n": s.n,
            "semantics": s.semantics,
            "universe_size": s.universe_size,
            "totals": poly_pairs(s.totals),
            "acyclic": poly_pairs(s.acyclic),
            "strong": poly_pairs(s.strong),
            "source_profile": [
                [str(q), str(c), str(src), str(count)]
                for q, c, src, count in s.source_profile
            ],
        }
    )


def parse_census_json(text: str) -> CensusSummary:
    raw = json.loads(text)
    return CensusSummary(
        b=raw["b"],
        n=raw["n"],
        semantics=raw["semantics"],
        universe_size=raw["universe_size"],
        totals=pairs_to_poly(raw["totals"]),
        acyclic=pairs_to_poly(raw["acyclic"]),
        strong=pairs_to_poly(raw["strong"]),
        source_profile=tuple(
            (int(q), int(c), int(src), int(count))
            for q, c, src, count in raw["source_profile"]
        ),
    )


def emit_census_csv(table: CensusTable | CensusSummary) -> str:
    s = table if isinstance(table, CensusSummary) else census_summary(table)
    lines = ["b,n,family,method,q,count"]
    for family, poly in (
        ("total", s.totals),
        ("acyclic", s.acyclic),
        ("strong", s.strong),
    ):
        for q, c in enumerate(poly.coeffs):
            if c:
                lines.append(f"{s.b},{s.n},{family},census,{q},{c}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- compare

def emit_compare_json(report: CompareReport) -> str:
    return _dumps(
        {
            "b": report.b,
            "family": report.family,
            "method": report.method,
            "semantics": report.semantics,
            "n_max": report.n_max,
            "verdict": report.verdict,
            "records": [
                {
                    "n": rec.n,
                    "status": rec.status,
                    "formula": poly_pairs(rec.formula),
                    "oracle": None if rec.oracle is None else poly_pairs(rec.oracle),
                    "mismatches": [
                        [str(q), str(f), str(o)] for q, f, o in rec.mismatches
                    ],
                    "note": rec.note,
                }
                for rec in report.records
            ],
        }
    )


def parse_compare_json(text: str) -> CompareReport:
    raw = json.loads(text)
    records = tuple(
        PerNComparison(
            n=rec["n"],
            status=rec["status"],
            formula=pairs_to_poly(rec["formula"]),
            oracle=None if rec["oracle"] is None else pairs_to_poly(rec["oracle"]),
            mismatches=tuple(
                (int(q), int(f), int(o)) for q, f, o in rec["mismatches"]
            ),
            note=rec["note"],
        )
        for rec in raw["records"]
    )
    return CompareReport(
        b=raw["b"],
        family=raw["family"],
        method=raw["method"],
        n_max=raw["n_max"],
        records=records,
        verdict=raw["verdict"],
        semantics=raw["semantics"],
    )
