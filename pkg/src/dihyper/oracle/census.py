"""Exhaustive census of all b-uniform dihypergraphs on n nodes.

Every subset of the hyperarc universe is classified once; the result is
a cell array counting graphs by (hyperarc count, number of source
strong components, number of sources, acyclic flag, strong flag).
The sweep is data-parallel over disjoint subset ranges and merged by
addition, so results do not depend on the chunking.

Environment knobs:
  DIHYPER_ORACLE_BACKEND  "numba" (default when importable) or "numpy"
  DIHYPER_ORACLE_CAP      universe-size cap in bits (default 26)
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..polynomials import YPoly, one_plus_y_pow
from .structures import SEMANTICS, hyperarc_universe

__all__ = [
    "DEFAULT_CAP_BITS",
    "CensusTable",
    "UniverseTooLargeError",
    "available_backends",
    "census",
    "resolve_backend",
]

DEFAULT_CAP_BITS = 26

_BACKEND_ENV = "DIHYPER_ORACLE_BACKEND"
_CAP_ENV = "DIHYPER_ORACLE_CAP"


class UniverseTooLargeError(Exception):
    """Raised when a census would sweep more subsets than the cap allows."""

    def __init__(self, n: int, b: int, universe_size: int, cap_bits: int):
        self.n = n
        self.b = b
        self.universe_size = universe_size
        self.cap_bits = cap_bits
        super().__init__(
            f"census(n={n}, b={b}) needs 2^{universe_size} subsets but the cap is "
            f"2^{cap_bits}; pass cap={universe_size} (or set {_CAP_ENV}) to allow it"
        )


@dataclass(frozen=True, eq=False)
class CensusTable:
    """Aggregated classification counts for one (n, b) sweep.

    cells[q, c, s, a, t] = number of dihypergraphs with q hyperarcs,
    c source strong components, s sources, acyclic flag a, strong flag t.
    """

    n: int
    b: int
    cells: np.ndarray
    backend: str
    jobs: int
    semantics: str = SEMANTICS

    def __eq__(self, other: object) -> bool:
        # backend and jobs are how the table was computed, not what it says
        if not isinstance(other, CensusTable):
            return NotImplemented
        return (
            (self.n, self.b, self.semantics) == (other.n, other.b, other.semantics)
            and np.array_equal(self.cells, other.cells)
        )

    @property
    def universe_size(self) -> int:
        return self.cells.shape[0] - 1

    def _poly(self, table: np.ndarray) -> YPoly:
        return YPoly(int(v) for v in table)

    def totals_poly(self) -> YPoly:
        return self._poly(self.cells.sum(axis=(1, 2, 3, 4)))

    def acyclic_poly(self) -> YPoly:
        return self._poly(self.cells[:, :, :, 1, :].sum(axis=(1, 2, 3)))

    def strong_poly(self) -> YPoly:
        return self._poly(self.cells[:, :, :, :, 1].sum(axis=(1, 2, 3)))

    def family_poly(self, family: str) -> YPoly:
        if family == "total":
            return self.totals_poly()
        if family == "acyclic":
            return self.acyclic_poly()
        if family == "strong":
            return self.strong_poly()
        raise ValueError(f"unknown family {family!r}")

    def source_profile(self) -> tuple[tuple[int, int, int, int], ...]:
        """Nonzero (q, source components, sources, count) rows, sorted."""
        flat = self.cells.sum(axis=(3, 4))
        return tuple(
            (q, c, s, int(flat[q, c, s]))
            for q in range(flat.shape[0])
            for c in range(flat.shape[1])
            for s in range(flat.shape[2])
            if flat[q, c, s]
        )

    def marked_source_poly(self, u0: int) -> YPoly:
        """Sum over acyclic graphs of (1+u0)^sources, graded by y^q.

        For an acyclic graph every strong component is a single node, so
        sources and source strong components coincide there.
        """
        acyclic = self.cells[:, :, :, 1, :].sum(axis=(1, 3))
        weights = [(1 + u0) ** s for s in range(acyclic.shape[1])]
        coeffs = [
            sum(int(acyclic[q, s]) * weights[s] for s in range(acyclic.shape[1]))
            for q in range(acyclic.shape[0])
        ]
        return YPoly(coeffs)

    def sanity_check(self) -> None:
        """Cross-checks asserted after every sweep."""
        if self.n >= 1 and self.cells[:, 0, :, :, :].any():
            raise AssertionError(
                "census found a dihypergraph on a nonempty node set without a "
                "source strong component, which is impossible (the condensation "
                "is a finite nonempty DAG)"
            )
        if self.totals_poly() != one_plus_y_pow(self.universe_size):
            raise AssertionError("census totals disagree with the subset count")


def available_backends() -> tuple[str, ...]:
    names = []
    try:
        from . import kernels_numba  # noqa: F401

        names.append("numba")
    except ImportError:
        pass
    names.append("numpy")
    return tuple(names)


def resolve_backend(name: str | None = None):
    """Pick the sweep implementation; returns (name, callable)."""
    if name is None:
        name = os.environ.get(_BACKEND_ENV) or None
    if name is None:
        name = "numba" if "numba" in available_backends() else "numpy"
    if name == "numba":
        from .kernels_numba import sweep
    elif name == "numpy":
        from .kernels_numpy import sweep
    else:
        raise ValueError(f"unknown oracle backend {name!r} (use numba or numpy)")
    return name, sweep


def _resolve_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(_CAP_ENV)
    return int(env) if env else DEFAULT_CAP_BITS


def census(
    n: int,
    b: int,
    *,
    cap: int | None = None,
    jobs: int | None = None,
    backend: str | None = None,
) -> CensusTable:
    """Classify every b-uniform dihypergraph on n labeled nodes."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if b < 2:
        raise ValueError(f"uniformity b must be >= 2, got {b}")
    universe = hyperarc_universe(n, b)
    size = len(universe)
    cap_bits = _resolve_cap(cap)
    if size > cap_bits:
        raise UniverseTooLargeError(n, b, size, cap_bits)

    if n == 0:
        cells = np.zeros((1, 1, 1, 2, 2), np.int64)
        cells[0, 0, 0, 1, 0] = 1  # the empty graph: acyclic, not strong
        return CensusTable(0, b, cells, backend="trivial", jobs=1)
    shape = (size + 1, n + 1, n + 1, 2, 2)
    if size == 0:
        # One graph: n isolated nodes, each its own source component.
        cells = np.zeros(shape, np.int64)
        cells[0, n, n, 1, 1 if n == 1 else 0] = 1
        table = CensusTable(n, b, cells, backend="trivial", jobs=1)
        table.sanity_check()
        return table

    backend_name, sweep = resolve_backend(backend)
    tails = np.array([a.tail for a in universe], np.int64)
    heads = np.array([a.head for a in universe], np.int64)
    total = 1 << size
    if jobs is None:
        jobs = 1 if size <= 18 else min(4, os.cpu_count() or 1)
    jobs = max(1, min(jobs, total))

    def run(start: int, stop: int) -> np.ndarray:
        part = np.zeros(shape, np.int64)
        sweep(tails, heads, n, start, stop, part)
        return part

    if jobs == 1:
        cells = run(0, total)
    else:
        bounds = [total * i // jobs for i in range(jobs + 1)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(
                pool.map(lambda se: run(*se), zip(bounds[:-1], bounds[1:]))
            )
        cells = np.sum(parts, axis=0)
    table = CensusTable(n, b, cells, backend=backend_name, jobs=jobs)
    table.sanity_check()
    return table
