"""Acceptance gate: the seven headline behaviors with runtime bounds.

Each test times its own body with time.monotonic.  Kernel JIT warmup
happens once in conftest.py so compiled-code caching does not distort
the bounds.  All numeric assertions are exact; no tolerances anywhere.
"""
import time

import numpy as np

from dihyper.cli import run_cli
from dihyper.formulas import (
    lambda_recurrence,
    strong_via_inversion,
    total_hyperarc_count,
)
from dihyper.harness import (
    compare_family,
    identity_suite,
    marked_source_check,
    parse_compare_json,
)
from dihyper.oracle import census, hyperarc_universe
from dihyper.polynomials import YPoly, one_plus_y_pow


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_criterion_1_b2_acyclic_equivalence(capsys):
    start = time.monotonic()
    code, out, _ = run(
        capsys, "formula", "--family", "acyclic", "--b", "2", "--n", "5",
        "--eval", "1",
    )
    assert code == 0
    assert out == "1 1 3 25 543 29281\n"
    report = compare_family(2, 4, "acyclic")
    assert report.verdict == "match"
    assert all(r.status == "match" for r in report.records)
    elapsed = time.monotonic() - start
    assert elapsed < 5, f"criterion 1 took {elapsed:.1f}s, bound is 5s"


def test_criterion_2_b2_strong_equivalence(capsys):
    start = time.monotonic()
    code, out, _ = run(
        capsys, "formula", "--family", "strong", "--b", "2", "--n", "5",
        "--method", "inversion", "--eval", "1",
    )
    assert code == 0
    assert out == "0 1 1 18 1606 565080\n"
    assert strong_via_inversion(2, 2).counts[2] == YPoly([0, 0, 1])
    report = compare_family(2, 4, "strong")
    assert report.verdict == "match"
    elapsed = time.monotonic() - start
    assert elapsed < 5, f"criterion 2 took {elapsed:.1f}s, bound is 5s"


def test_criterion_3_identity_suite():
    start = time.monotonic()
    results = identity_suite()
    failures = [r for r in results if not r.passed]
    assert not failures, [f"{r.name}: {r.detail}" for r in failures]
    names = {r.name for r in results}
    assert {
        "mix-exponent-vandermonde",
        "graded-retag-round-trip",
        "exp-log-round-trip",
        "graded-reciprocal-product",
        "acyclic-reciprocal-product",
        "strong-pipeline-product",
        "acyclic-methods-agree",
    } <= names
    elapsed = time.monotonic() - start
    assert elapsed < 60, f"criterion 3 took {elapsed:.1f}s, bound is 60s"


def test_criterion_4_universe_and_census_invariants():
    start = time.monotonic()
    for b in (2, 3, 4):
        for n in range(9):
            assert len(hyperarc_universe(n, b)) == total_hyperarc_count(n, b)
    for b, n_top in ((2, 4), (3, 3)):
        for n in range(n_top + 1):
            table = census(n, b)
            assert table.totals_poly() == one_plus_y_pow(total_hyperarc_count(n, b))
            if n >= 1:
                # no dihypergraph on a nonempty node set lacks a source
                # strong component
                assert not np.any(table.cells[:, 0])
    elapsed = time.monotonic() - start
    assert elapsed < 30, f"criterion 4 took {elapsed:.1f}s, bound is 30s"


def test_criterion_5_fixtures(capsys):
    start = time.monotonic()
    code, out, _ = run(capsys, "fixtures", "--name", "fig1")
    assert code == 0
    assert "acyclic: no" in out
    witness_line = next(
        line for line in out.splitlines() if line.startswith("cycle witness:")
    )
    witness = {int(v) for v in witness_line.split(":")[1].split("->")}
    assert witness <= {2, 3, 4, 6}

    code, out, _ = run(capsys, "fixtures", "--name", "fig2")
    assert code == 0
    scc_line = next(
        line for line in out.splitlines() if line.startswith("strong components:")
    )
    partition = {
        frozenset(int(v) for v in chunk.strip("{}").split(","))
        for chunk in scc_line.split(":")[1].split()
    }
    assert partition == {
        frozenset({1}),
        frozenset({5}),
        frozenset({7}),
        frozenset({2, 3, 4, 6}),
    }
    assert "source strong components: 2" in out
    assert "sources: 2" in out
    elapsed = time.monotonic() - start
    assert elapsed < 1, f"criterion 5 took {elapsed:.2f}s, bound is 1s"


def test_criterion_6_b3_adjudication(capsys):
    start = time.monotonic()
    code, out, err = run(
        capsys, "compare", "--family", "acyclic", "--b", "3", "--n-max", "3",
        "--strict",
    )
    assert code == 1
    report = parse_compare_json(out)
    assert report.verdict == "mismatch"
    assert report.first_mismatch() == (3, 1, 0, 6)
    assert "first mismatch at n=3, q=1" in err

    code, out, _ = run(
        capsys, "formula", "--family", "acyclic", "--b", "3", "--n", "4",
        "--eval", "1",
    )
    assert code == 0
    assert out.split()[-1] == "-33"

    for n in range(5):
        for u0 in (0, 1, 2):
            assert marked_source_check(2, n, u0).equal
    for u0 in (0, 1, 2):
        r = marked_source_check(3, 3, u0)
        assert r.residual != YPoly([])
    elapsed = time.monotonic() - start
    assert elapsed < 30, f"criterion 6 took {elapsed:.1f}s, bound is 30s"


def test_criterion_6_full_b3_n4_census_feeds_strong_report():
    start = time.monotonic()
    report = compare_family(3, 4, "strong", jobs=4)
    elapsed = time.monotonic() - start
    assert elapsed < 600, f"(n=4, b=3) sweep took {elapsed:.0f}s, bound is 600s"
    assert report.verdict == "mismatch"
    assert report.first_mismatch() == (3, 1, 6, 0)
    full = report.records[4]
    assert full.status != "oracle-unavailable"
    assert full.oracle is not None
    assert full.oracle.evaluate(1) <= 2 ** total_hyperarc_count(4, 3)


def test_criterion_7_lambda_recurrence_verdict():
    start = time.monotonic()
    inversion = strong_via_inversion(2, 5).counts
    printed = lambda_recurrence(2, 5, "as_printed")
    corrected = lambda_recurrence(2, 5, "index_corrected")
    for variant in (printed, corrected):
        assert variant.counts.counts[1] == inversion[1]
        assert variant.counts.counts[2] != inversion[2]
    assert printed == lambda_recurrence(2, 5, "as_printed")
    assert corrected == lambda_recurrence(2, 5, "index_corrected")

    entries = [
        r for r in identity_suite() if r.name == "lambda-recurrence-adjudication"
    ]
    assert len(entries) == 1 and entries[0].passed
    again = [
        r for r in identity_suite() if r.name == "lambda-recurrence-adjudication"
    ]
    assert entries == again
    elapsed = time.monotonic() - start
    assert elapsed < 5, f"criterion 7 took {elapsed:.1f}s, bound is 5s"
