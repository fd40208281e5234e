"""Counting pipelines for b-uniform labeled directed hypergraphs.

Each pipeline returns a :class:`CountSequence`: one polynomial in y per
node count n, whose y^q coefficient is the claimed number of n-node
structures with q hyperarcs.

Every pipeline computes its defining identity faithfully, including the
variants that demonstrably fail to enumerate for b >= 3 (the reciprocal
and inversion pipelines) or already for b = 2 (both lambda-recurrence
variants).  Adjudicating those outputs against the exhaustive oracle is
the harness's job; nothing here patches a divergent formula silently.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .polynomials import (
    ONE,
    ZERO,
    YPoly,
    binomial,
    mix_exponent,
    multinomial,
    one_plus_y_pow,
)
from .series import (
    GradedSeries,
    alternating_series,
    egf_log,
    graded_reciprocal,
    graded_to_egf,
)

__all__ = [
    "COMPOSITION_LIMIT",
    "CountSequence",
    "LambdaResult",
    "acyclic_via_compositions",
    "acyclic_via_compositions_sequence",
    "acyclic_via_reciprocal",
    "acyclic_via_recurrence",
    "all_dihypergraphs",
    "all_dihypergraphs_graded",
    "count_findings",
    "count_sequence",
    "lambda_recurrence",
    "strong_via_inversion",
    "total_hyperarc_count",
]

# The explicit composition sum walks all 2^(n-1) compositions of n; it
# exists for cross-validation only and is capped.
COMPOSITION_LIMIT = 12

LambdaVariant = Literal["as_printed", "index_corrected"]


@dataclass(frozen=True, slots=True)
class CountSequence:
    """Per-n count polynomials for one family and method."""

    b: int
    family: str  # "total" | "acyclic" | "strong"
    method: str
    counts: tuple[YPoly, ...]

    @property
    def order(self) -> int:
        return len(self.counts) - 1

    def evaluated(self, y0: int) -> list[int]:
        return [p.evaluate(y0) for p in self.counts]

    def as_graded(self) -> GradedSeries:
        return GradedSeries(self.b, self.counts)


def total_hyperarc_count(n: int, b: int) -> int:
    """(2^b - 2) * C(n, b): number of distinct hyperarcs on n labeled nodes."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if b < 2:
        raise ValueError(f"uniformity b must be >= 2, got {b}")
    return (2**b - 2) * binomial(n, b)


def all_dihypergraphs(b: int, order: int) -> CountSequence:
    """counts[n] = (1+y)^((2^b-2) C(n,b)): every hyperarc subset, by size."""
    counts = tuple(one_plus_y_pow(total_hyperarc_count(n, b)) for n in range(order + 1))
    return CountSequence(b, "total", "direct", counts)


def all_dihypergraphs_graded(b: int, order: int) -> GradedSeries:
    """Graded-series form of the all-dihypergraphs sequence (same stored
    polynomials; the implicit denominator carries the grading)."""
    return all_dihypergraphs(b, order).as_graded()


def acyclic_via_reciprocal(b: int, order: int) -> CountSequence:
    """Acyclic counts as the graded reciprocal of the alternating series."""
    rec = graded_reciprocal(alternating_series(b, order))
    return CountSequence(b, "acyclic", "reciprocal", rec.coeffs)


def acyclic_via_recurrence(b: int, order: int) -> CountSequence:
    """Inclusion-exclusion recurrence
    a_n = sum_{k=1..n} (-1)^(k-1) C(n,k) (1+y)^mix_exponent(n,k,b) a_{n-k},
    a_0 = 1."""
    a: list[YPoly] = [ONE]
    for n in range(1, order + 1):
        acc = ZERO
        for k in range(1, n + 1):
            term = (one_plus_y_pow(mix_exponent(n, k, b)) * a[n - k]).scale(
                binomial(n, k)
            )
            acc = acc + term if k % 2 else acc - term
        a.append(acc)
    return CountSequence(b, "acyclic", "recurrence", tuple(a))


def _compositions(n: int):
    # Compositions of n encoded by cut points between n unit cells.
    for mask in range(1 << (n - 1)) if n else iter(()):
        parts = []
        prev = 0
        for pos in range(1, n):
            if mask >> (pos - 1) & 1:
                parts.append(pos - prev)
                prev = pos
        parts.append(n - prev)
        yield parts


def acyclic_via_compositions(
    n: int, b: int, *, corrected: bool = True, limit: int = COMPOSITION_LIMIT
) -> YPoly:
    """Explicit sum over compositions n_1 + ... + n_j = n of
    sign * multinomial(n; n_1..n_j) * (1+y)^(C(n,b) - sum C(n_i,b)).

    With ``corrected=True`` the sign is (-1)^(n+j); the uncorrected
    variant uses (-1)^j, which already fails at n = 1 (it yields -1 where
    the count is 1).  Both are kept computable for adjudication.
    """
    if n > limit:
        raise ValueError(
            f"composition sum over 2^{n - 1} terms refused for n={n} > limit={limit}"
        )
    if n == 0:
        return ONE
    cnb = binomial(n, b)
    acc = ZERO
    for parts in _compositions(n):
        j = len(parts)
        exponent = cnb - sum(binomial(p, b) for p in parts)
        term = one_plus_y_pow(exponent).scale(multinomial(n, parts))
        sign = (-1) ** (n + j) if corrected else (-1) ** j
        acc = acc + term if sign > 0 else acc - term
    return acc


def acyclic_via_compositions_sequence(
    b: int, order: int, *, corrected: bool = True, limit: int = COMPOSITION_LIMIT
) -> CountSequence:
    counts = tuple(
        acyclic_via_compositions(n, b, corrected=corrected, limit=limit)
        for n in range(order + 1)
    )
    method = "compositions" if corrected else "compositions-as-printed"
    return CountSequence(b, "acyclic", method, counts)


def strong_via_inversion(b: int, order: int) -> CountSequence:
    """Strong counts extracted from the all-dihypergraphs series:

    take the graded reciprocal of the all-dihypergraphs series, re-read it
    as an EGF, and negate its logarithm.  The reciprocal is the ordinary
    x-series reciprocal computed in stored graded coordinates (this is the
    inversion sense that reproduces the classical b=2 strong-digraph
    counts).  counts[0] is fixed at 0: the empty structure is not counted
    as strongly connected.
    """
    H = all_dihypergraphs_graded(b, order)
    e = graded_to_egf(graded_reciprocal(H))
    s = egf_log(e).negate()
    counts = (ZERO,) + s.coeffs[1:]
    return CountSequence(b, "strong", "inversion", counts)


@dataclass(frozen=True, slots=True)
class LambdaResult:
    """Both sequences produced by the lambda recurrence."""

    variant: str
    lambdas: tuple[YPoly, ...]
    counts: CountSequence


def lambda_recurrence(b: int, order: int, variant: LambdaVariant) -> LambdaResult:
    """Recursive strong-count candidate:

    s_n = lambda_n + sum_{t=1..n-1} C(n-1,t) s_{n-t} lambda_t, with
    lambda_n = (1+y)^((2^b-2)C(n,b))
               - sum_{t=1..n-1} C(n,t) (1+y)^((2^b-2)C(t,b)) * lambda_J.

    ``as_printed`` takes J = n-1 inside the sum; ``index_corrected``
    substitutes J = n-t.  Neither variant is asserted correct here: for
    b=2 both already give s_2 = y^2 + 2y instead of the census value y^2,
    and the harness reports that divergence.  lambdas[0] extends the
    closed form to n=0 (empty sum), giving 1; the recurrences never
    consume it.
    """
    if variant not in ("as_printed", "index_corrected"):
        raise ValueError(f"unknown lambda variant {variant!r}")
    lam: list[YPoly] = [ONE]
    for n in range(1, order + 1):
        acc = one_plus_y_pow(total_hyperarc_count(n, b))
        for t in range(1, n):
            j = n - 1 if variant == "as_printed" else n - t
            term = (one_plus_y_pow(total_hyperarc_count(t, b)) * lam[j]).scale(
                binomial(n, t)
            )
            acc = acc - term
        lam.append(acc)
    s: list[YPoly] = [ZERO]
    for n in range(1, order + 1):
        acc = lam[n]
        for t in range(1, n):
            acc = acc + (s[n - t] * lam[t]).scale(binomial(n - 1, t))
        s.append(acc)
    method = "lambda-printed" if variant == "as_printed" else "lambda-corrected"
    return LambdaResult(variant, tuple(lam), CountSequence(b, "strong", method, tuple(s)))


_METHODS = {
    ("total", "direct"): lambda b, order: all_dihypergraphs(b, order),
    ("acyclic", "reciprocal"): lambda b, order: acyclic_via_reciprocal(b, order),
    ("acyclic", "recurrence"): lambda b, order: acyclic_via_recurrence(b, order),
    ("acyclic", "compositions"): lambda b, order: acyclic_via_compositions_sequence(b, order),
    ("strong", "inversion"): lambda b, order: strong_via_inversion(b, order),
    ("strong", "lambda-printed"): lambda b, order: lambda_recurrence(b, order, "as_printed").counts,
    ("strong", "lambda-corrected"): lambda b, order: lambda_recurrence(b, order, "index_corrected").counts,
}

DEFAULT_METHOD = {"total": "direct", "acyclic": "reciprocal", "strong": "inversion"}


def count_sequence(family: str, b: int, order: int, method: str | None = None) -> CountSequence:
    """Dispatch a (family, method) pair to its pipeline."""
    if family not in DEFAULT_METHOD:
        raise ValueError(f"unknown family {family!r}")
    method = method or DEFAULT_METHOD[family]
    try:
        build = _METHODS[(family, method)]
    except KeyError:
        raise ValueError(f"method {method!r} not available for family {family!r}") from None
    return build(b, order)


def count_findings(seq: CountSequence) -> list[str]:
    """Plausibility findings for a claimed counting sequence.

    A genuine counting sequence has nonnegative coefficients and y-degree
    at most the hyperarc-universe size.  Violations are returned as
    human-readable findings (they are results, not errors: the divergent
    pipelines produce exactly such polynomials for b >= 3).
    """
    findings: list[str] = []
    for n, p in enumerate(seq.counts):
        bound = total_hyperarc_count(n, seq.b)
        if p.degree > bound:
            findings.append(
                f"counts[{n}] has degree {p.degree} above the universe size {bound}"
            )
        negative = [q for q, c in enumerate(p.coeffs) if c < 0]
        if negative:
            findings.append(
                f"counts[{n}] has negative coefficients at q={negative} (not a count)"
            )
    return findings
