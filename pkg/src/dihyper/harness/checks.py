"""Named self-check suites behind the `check` CLI subcommand.

Three suites: "identities" (series algebra and counting identities that
must hold), "marked-source" (the source-marking identity, pointwise in
the marking value), and "fixtures" (the shipped example graphs).

Entries whose point is a known erratum are phrased so that `passed`
means "the divergence is present and recorded"; a vanished divergence
would be a real failure (it would mean this toolkit no longer
reproduces the result it was built to adjudicate).
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..formulas import (
    acyclic_via_compositions,
    acyclic_via_reciprocal,
    acyclic_via_recurrence,
    all_dihypergraphs_graded,
    lambda_recurrence,
    strong_via_inversion,
    total_hyperarc_count,
)
from ..oracle import census, hyperarc_universe
from ..polynomials import (
    ONE,
    ZERO,
    YPoly,
    binomial,
    format_poly,
    mix_exponent,
    one_plus_y_pow,
)
from ..series import (
    EgfSeries,
    GradedSeries,
    alternating_series,
    egf_exp,
    egf_log,
    egf_to_graded,
    graded_mul,
    graded_one,
    graded_reciprocal,
    graded_to_egf,
    hadamard,
    ones_series,
)
from .compare import marked_source_check
from .fixtures import fixture_report

__all__ = [
    "SUITE_NAMES",
    "CheckResult",
    "fixture_suite",
    "format_results",
    "identity_suite",
    "marked_source_suite",
    "run_suite",
]

SUITE_NAMES = ("identities", "marked-source", "fixtures")

_SEED = 20240815


@dataclass(frozen=True, slots=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _random_poly(rng: random.Random, max_degree: int = 4) -> YPoly:
    return YPoly(rng.randint(-3, 3) for _ in range(rng.randint(0, max_degree + 1)))


def _random_egf(rng: random.Random, b: int, order: int) -> EgfSeries:
    return EgfSeries(b, tuple(_random_poly(rng) for _ in range(order + 1)))


def _vandermonde_check() -> CheckResult:
    for b in range(2, 6):
        for n in range(21):
            for k in range(n + 1):
                direct = mix_exponent(n, k, b)
                summed = sum(
                    binomial(k, i) * binomial(n - k, b - i) for i in range(1, b)
                )
                if direct != summed:
                    return CheckResult(
                        "mix-exponent-vandermonde",
                        False,
                        f"disagreement at n={n} k={k} b={b}: {direct} vs {summed}",
                    )
    return CheckResult(
        "mix-exponent-vandermonde", True, "binomial split matches for n<=20, b<=5"
    )


def _round_trip_checks() -> list[CheckResult]:
    rng = random.Random(_SEED)
    results = []
    ok = True
    for b in (2, 3, 4):
        for _ in range(5):
            f = _random_egf(rng, b, 8)
            ok = ok and graded_to_egf(egf_to_graded(f)) == f
    results.append(
        CheckResult(
            "graded-retag-round-trip",
            ok,
            "EGF -> graded -> EGF is the identity on random series",
        )
    )
    ok = True
    for b in (2, 3, 4):
        for _ in range(5):
            f = _random_egf(rng, b, 8)
            f = EgfSeries(b, (ZERO,) + f.coeffs[1:])
            ok = ok and egf_log(egf_exp(f)) == f
            e = EgfSeries(b, (ONE,) + f.coeffs[1:])
            ok = ok and egf_exp(egf_log(e)) == e
    results.append(
        CheckResult(
            "exp-log-round-trip", ok, "exp and log invert each other on random series"
        )
    )
    ok = True
    for b in (2, 3, 4):
        for _ in range(5):
            f = _random_egf(rng, b, 8)
            F = GradedSeries(b, (ONE,) + f.coeffs[1:])
            ok = ok and graded_mul(F, graded_reciprocal(F)) == graded_one(b, 8)
    results.append(
        CheckResult(
            "graded-reciprocal-product",
            ok,
            "series times its reciprocal is one on random series",
        )
    )
    ok = True
    for b in (2, 3):
        h = EgfSeries(
            b, tuple(one_plus_y_pow(total_hyperarc_count(n, b)) for n in range(7))
        )
        all_ones = graded_to_egf(ones_series(b, 6))
        ok = ok and hadamard(all_ones, h) == h
        ok = ok and egf_to_graded(h).coeffs == all_dihypergraphs_graded(b, 6).coeffs
    results.append(
        CheckResult(
            "hadamard-identity",
            ok,
            "all-ones sequence is the Hadamard identity; re-tagging the "
            "all-dihypergraphs EGF gives its graded series",
        )
    )
    return results


def _counting_identity_checks() -> list[CheckResult]:
    results = []
    ok = True
    for b in (2, 3, 4):
        A = GradedSeries(b, acyclic_via_reciprocal(b, 10).counts)
        ok = ok and graded_mul(A, alternating_series(b, 10)) == graded_one(b, 10)
    results.append(
        CheckResult(
            "acyclic-reciprocal-product",
            ok,
            "acyclic series times the alternating series is one (b in 2..4, order 10)",
        )
    )
    ok = True
    for b in (2, 3, 4):
        s = EgfSeries(b, strong_via_inversion(b, 10).counts)
        G = egf_to_graded(egf_exp(s.negate()))
        ok = ok and graded_mul(G, all_dihypergraphs_graded(b, 10)) == graded_one(b, 10)
    results.append(
        CheckResult(
            "strong-pipeline-product",
            ok,
            "graded exp(-strong series) times the all-dihypergraphs series is one",
        )
    )
    ok = True
    for b in (2, 3, 4):
        ok = ok and (
            acyclic_via_reciprocal(b, 10).counts == acyclic_via_recurrence(b, 10).counts
        )
    for b in (2, 3):
        rec = acyclic_via_reciprocal(b, 8).counts
        ok = ok and all(
            acyclic_via_compositions(n, b) == rec[n] for n in range(9)
        )
    results.append(
        CheckResult(
            "acyclic-methods-agree",
            ok,
            "reciprocal, recurrence and corrected composition sum coincide",
        )
    )
    ok = True
    for b in (2, 3, 4):
        for n in range(9):
            ok = ok and len(hyperarc_universe(n, b)) == total_hyperarc_count(n, b)
    results.append(
        CheckResult(
            "universe-size",
            ok,
            "enumerated universe length equals (2^b-2)*C(n,b) for n<=8, b<=4",
        )
    )
    ok = True
    for b, n_top in ((2, 4), (3, 3)):
        for n in range(n_top + 1):
            table = census(n, b)
            ok = ok and table.totals_poly() == one_plus_y_pow(
                total_hyperarc_count(n, b)
            )
    results.append(
        CheckResult(
            "census-totals",
            ok,
            "census totals reproduce (1+y)^(universe size) on full sweeps",
        )
    )
    return results


def _lambda_adjudication() -> CheckResult:
    inversion = strong_via_inversion(2, 5).counts
    printed = lambda_recurrence(2, 5, "as_printed").counts.counts
    corrected = lambda_recurrence(2, 5, "index_corrected").counts.counts
    agree_below = printed[1] == inversion[1] and corrected[1] == inversion[1]
    diverge_at_2 = printed[2] != inversion[2] and corrected[2] != inversion[2]
    detail = (
        f"b=2: inversion s_2 = {format_poly(inversion[2])}; as-printed variant "
        f"s_2 = {format_poly(printed[2])}; index-corrected variant "
        f"s_2 = {format_poly(corrected[2])}; neither recursive variant matches"
    )
    return CheckResult("lambda-recurrence-adjudication", agree_below and diverge_at_2, detail)


def identity_suite() -> list[CheckResult]:
    results = [_vandermonde_check()]
    results.extend(_round_trip_checks())
    results.extend(_counting_identity_checks())
    results.append(_lambda_adjudication())
    return results


def marked_source_suite() -> list[CheckResult]:
    results = []
    for n in range(1, 5):
        for u0 in (0, 1, 2, 3):
            r = marked_source_check(2, n, u0)
            results.append(
                CheckResult(
                    f"marked-source-b2-n{n}-u{u0}",
                    r.equal,
                    f"both sides {format_poly(r.lhs)}"
                    if r.equal
                    else f"residual {format_poly(r.residual)}",
                )
            )
    for u0 in (0, 1, 2):
        r = marked_source_check(3, 3, u0)
        results.append(
            CheckResult(
                f"marked-source-b3-n3-u{u0}-expect-divergence",
                not r.equal,
                f"residual {format_poly(r.residual)} (census {format_poly(r.lhs)} "
                f"vs formula {format_poly(r.rhs)})",
            )
        )
    return results


def fixture_suite() -> list[CheckResult]:
    results = []
    fig1 = fixture_report("fig1")
    witness_ok = (
        not fig1.acyclic
        and fig1.cycle is not None
        and len(fig1.cycle) >= 2
        and set(fig1.cycle) <= {2, 3, 4, 6}
    )
    results.append(
        CheckResult(
            "fig1-cyclic",
            witness_ok,
            "cycle witness "
            + ("->".join(str(v) for v in fig1.cycle or ()) or "missing"),
        )
    )
    fig2 = fixture_report("fig2")
    partition = {frozenset(cls) for cls in fig2.sccs}
    expected = {
        frozenset({1}),
        frozenset({5}),
        frozenset({7}),
        frozenset({2, 3, 4, 6}),
    }
    results.append(
        CheckResult(
            "fig2-strong-components",
            partition == expected and not fig2.strong,
            "partition " + " ".join(sorted("{%s}" % ",".join(map(str, sorted(c))) for c in partition)),
        )
    )
    expected_arcs = {(1, 2), (3, 2), (2, 5), (2, 6), (6, 2), (6, 4), (7, 3), (4, 3)}
    results.append(
        CheckResult(
            "fig2-induced-arcs",
            set(fig2.induced_arcs) == expected_arcs,
            " ".join(f"{u}->{v}" for u, v in fig2.induced_arcs),
        )
    )
    results.append(
        CheckResult(
            "fixture-source-components",
            fig1.source_component_count == 2
            and fig1.source_count == 2
            and fig2.source_component_count == 2
            and fig2.source_count == 2,
            "both figures have 2 source strong components, both of them sources",
        )
    )
    return results


def run_suite(name: str) -> list[CheckResult]:
    if name == "identities":
        return identity_suite()
    if name == "marked-source":
        return marked_source_suite()
    if name == "fixtures":
        return fixture_suite()
    raise ValueError(f"unknown suite {name!r}; available: {SUITE_NAMES}")


def format_results(results: list[CheckResult]) -> str:
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results
    ]
    failed = sum(not r.passed for r in results)
    lines.append(
        f"{len(results) - failed}/{len(results)} checks passed"
        if failed
        else f"all {len(results)} checks passed"
    )
    return "\n".join(lines)
