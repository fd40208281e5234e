"""Formula-versus-oracle comparison and the marked-source identity check."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..formulas import acyclic_via_reciprocal, count_sequence
from ..oracle import SEMANTICS, UniverseTooLargeError, census
from ..polynomials import ZERO, YPoly, binomial, mix_exponent, one_plus_y_pow

__all__ = [
    "CompareReport",
    "MarkedSourceResult",
    "PerNComparison",
    "compare_family",
    "marked_source_check",
]


@dataclass(frozen=True, slots=True)
class PerNComparison:
    """Outcome for one node count: both polynomials plus the differing q."""

    n: int
    status: str  # "match" | "mismatch" | "oracle-unavailable"
    formula: YPoly
    oracle: YPoly | None
    mismatches: tuple[tuple[int, int, int], ...]  # (q, formula, oracle)
    note: str = ""


@dataclass(frozen=True, slots=True)
class CompareReport:
    b: int
    family: str
    method: str
    n_max: int
    records: tuple[PerNComparison, ...]
    verdict: str  # "match" | "mismatch" | "oracle-unavailable"
    semantics: str = SEMANTICS
    # wall time is diagnostic output, never part of report identity
    elapsed_seconds: float = field(default=0.0, compare=False)

    def first_mismatch(self) -> tuple[int, int, int, int] | None:
        """(n, q, formula value, oracle value) of the earliest divergence."""
        for rec in self.records:
            if rec.mismatches:
                q, f, o = rec.mismatches[0]
                return rec.n, q, f, o
        return None


def _diff(formula: YPoly, oracle: YPoly) -> tuple[tuple[int, int, int], ...]:
    top = max(formula.degree, oracle.degree)
    return tuple(
        (q, formula[q], oracle[q])
        for q in range(top + 1)
        if formula[q] != oracle[q]
    )


def compare_family(
    b: int,
    n_max: int,
    family: str,
    method: str | None = None,
    *,
    cap: int | None = None,
    jobs: int | None = None,
    backend: str | None = None,
) -> CompareReport:
    """Compare a counting pipeline against the census for n = 0..n_max.

    Oracle-infeasible sizes produce per-n "oracle-unavailable" records
    with the cap message; they are never silently dropped.
    """
    if family not in ("acyclic", "strong"):
        raise ValueError(f"comparable families are acyclic and strong, got {family!r}")
    start = time.monotonic()
    seq = count_sequence(family, b, n_max, method)
    records: list[PerNComparison] = []
    for n in range(n_max + 1):
        formula = seq.counts[n]
        try:
            table = census(n, b, cap=cap, jobs=jobs, backend=backend)
        except UniverseTooLargeError as exc:
            records.append(
                PerNComparison(n, "oracle-unavailable", formula, None, (), str(exc))
            )
            continue
        oracle_poly = table.family_poly(family)
        mismatches = _diff(formula, oracle_poly)
        status = "mismatch" if mismatches else "match"
        records.append(PerNComparison(n, status, formula, oracle_poly, mismatches))
    if any(r.status == "mismatch" for r in records):
        verdict = "mismatch"
    elif any(r.status == "oracle-unavailable" for r in records):
        verdict = "oracle-unavailable"
    else:
        verdict = "match"
    elapsed = time.monotonic() - start
    return CompareReport(
        b, family, seq.method, n_max, tuple(records), verdict,
        elapsed_seconds=elapsed,
    )


@dataclass(frozen=True, slots=True)
class MarkedSourceResult:
    """Pointwise-in-u evaluation of the source-marking identity.

    lhs: census sum over acyclic graphs of (1+u0)^sources, graded by y^q.
    rhs: sum_k C(n,k) u0^k (1+y)^mix_exponent(n,k,b) a_{n-k}(y) with a
    from the reciprocal pipeline.  Both sides are polynomials in y.
    """

    b: int
    n: int
    u0: int
    lhs: YPoly
    rhs: YPoly
    semantics: str = SEMANTICS

    @property
    def residual(self) -> YPoly:
        return self.lhs - self.rhs

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def marked_source_check(
    b: int,
    n: int,
    u0: int,
    *,
    cap: int | None = None,
    jobs: int | None = None,
    backend: str | None = None,
) -> MarkedSourceResult:
    table = census(n, b, cap=cap, jobs=jobs, backend=backend)
    lhs = table.marked_source_poly(u0)
    a = acyclic_via_reciprocal(b, n).counts
    rhs = ZERO
    for k in range(n + 1):
        scalar = binomial(n, k) * u0**k
        rhs = rhs + (one_plus_y_pow(mix_exponent(n, k, b)) * a[n - k]).scale(scalar)
    return MarkedSourceResult(b, n, u0, lhs, rhs)
