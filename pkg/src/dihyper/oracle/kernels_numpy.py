"""Pure-numpy census kernel: same contract as the jitted sweep.

Works on chunks of subset indices at once; every per-graph quantity
becomes a column vector over the chunk.  Slower than the compiled
kernel but dependency-light; selected via DIHYPER_ORACLE_BACKEND=numpy.
"""
from __future__ import annotations

import numpy as np

__all__ = ["sweep"]

_CHUNK = 1 << 15


def _popcount(values: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(values).astype(np.int64)
    out = np.zeros_like(values)
    v = values.copy()
    while v.any():
        out += v & 1
        v >>= 1
    return out


def sweep(tails, heads, n, start, stop, cells) -> None:
    n_arcs = tails.shape[0]
    nodes = np.arange(n, dtype=np.int64)
    for base in range(start, stop, _CHUNK):
        subs = np.arange(base, min(base + _CHUNK, stop), dtype=np.int64)
        m = subs.shape[0]
        q = _popcount(subs)
        adj = np.zeros((m, n), np.int64)
        for a in range(n_arcs):
            present = -(subs >> a & 1)  # 0 or all-ones mask
            masked_head = heads[a] & present
            t = int(tails[a])
            for u in range(n):
                if t >> u & 1:
                    adj[:, u] |= masked_head
        clo = adj.copy()
        for k in range(n):
            has_k = (clo >> k & 1).astype(bool)
            np.bitwise_or(clo, clo[:, k : k + 1], out=clo, where=has_k)
        acyclic = (clo >> nodes & 1 == 0).all(axis=1)
        # rep[:, u] = smallest node mutually reachable with u.
        rep = np.broadcast_to(nodes, (m, n)).copy()
        for u in range(n):
            unassigned = np.ones(m, bool)
            for v in range(u):
                mutual = ((clo[:, u] >> v & 1) & (clo[:, v] >> u & 1)).astype(bool)
                take = mutual & unassigned
                rep[take, u] = v
                unassigned &= ~mutual
        strong = (rep == 0).all(axis=1)
        incoming = np.zeros((m, n), bool)
        for u in range(n):
            for v in range(n):
                if u == v:
                    continue
                cross = (adj[:, u] >> v & 1).astype(bool) & (rep[:, u] != rep[:, v])
                incoming[cross, rep[cross, v]] = True
        is_rep = rep == nodes
        src = is_rep & ~incoming
        n_components = src.sum(axis=1)
        sizes = np.zeros((m, n), np.int64)
        rows = np.arange(m)
        for u in range(n):
            np.add.at(sizes, (rows, rep[:, u]), 1)
        n_sources = (src & (sizes == 1)).sum(axis=1)
        np.add.at(
            cells,
            (q, n_components, n_sources, acyclic.astype(np.int64), strong.astype(np.int64)),
            1,
        )
