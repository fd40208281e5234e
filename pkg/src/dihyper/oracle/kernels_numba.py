"""JIT-compiled census kernel.

The sweep classifies every hyperarc subset in [start, stop) and
accumulates into a 5-axis cell array indexed by
(q, source components, sources, acyclic flag, strong flag).
nogil lets a thread pool run disjoint subset ranges in parallel.
"""
from __future__ import annotations

import numpy as np
from numba import njit

__all__ = ["sweep"]


@njit(cache=True, nogil=True)
def sweep(tails, heads, n, start, stop, cells):  # pragma: no cover - jitted
    n_arcs = tails.shape[0]
    adj = np.zeros(n, np.int64)
    clo = np.zeros(n, np.int64)
    rep = np.zeros(n, np.int64)
    incoming = np.zeros(n, np.int64)
    size = np.zeros(n, np.int64)
    for sub in range(start, stop):
        q = 0
        for u in range(n):
            adj[u] = 0
        for a in range(n_arcs):
            if sub >> a & 1:
                q += 1
                t = tails[a]
                h = heads[a]
                for u in range(n):
                    if t >> u & 1:
                        adj[u] |= h
        for u in range(n):
            clo[u] = adj[u]
        for k in range(n):
            bit = np.int64(1) << k
            for u in range(n):
                if clo[u] & bit:
                    clo[u] |= clo[k]
        acyclic = 1
        for u in range(n):
            if clo[u] >> u & 1:
                acyclic = 0
                break
        # rep[u] = smallest node mutually reachable with u (its component).
        for u in range(n):
            r = u
            for v in range(u):
                if clo[u] >> v & 1 and clo[v] >> u & 1:
                    r = v
                    break
            rep[u] = r
        strong = 1
        for u in range(n):
            if rep[u] != 0:
                strong = 0
                break
        for u in range(n):
            incoming[u] = 0
            size[u] = 0
        for u in range(n):
            size[rep[u]] += 1
            au = adj[u]
            for v in range(n):
                if au >> v & 1 and rep[u] != rep[v]:
                    incoming[rep[v]] = 1
        n_components = 0
        n_sources = 0
        for u in range(n):
            if rep[u] == u and incoming[u] == 0:
                n_components += 1
                if size[u] == 1:
                    n_sources += 1
        cells[q, n_components, n_sources, acyclic, strong] += 1
