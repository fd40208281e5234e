"""Explicit directed-hypergraph structures and their reachability semantics.

Nodes are indexed 0..n-1 and node sets are bitmasks (bit i = node i).
Every classification predicate here reduces to the induced binary
relation u -> v iff some hyperarc has u in its tail and v in its head
(head-to-tail traversal: a walk enters a hyperarc at a tail node and
leaves at a head node).  The census kernels reimplement the same sweep
over flat arrays; these object-level functions are the readable
reference and serve the fixtures.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "SEMANTICS",
    "Dihypergraph",
    "Hyperarc",
    "find_cycle",
    "hyperarc_universe",
    "induced_adjacency",
    "is_acyclic",
    "is_strong",
    "reachability_closure",
    "relation_pairs",
    "scc_decompose",
    "source_components",
]

# Tag recorded in every census/report so downstream consumers know which
# traversal convention produced the numbers.
SEMANTICS = "head-to-tail"


def _mask_from_nodes(nodes: Iterable[int]) -> int:
    mask = 0
    for v in nodes:
        if v < 0:
            raise ValueError(f"node index must be nonnegative, got {v}")
        mask |= 1 << v
    return mask


def _nodes_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Hyperarc:
    """Ordered pair of disjoint nonempty node sets, stored as bitmasks."""

    tail: int
    head: int

    def __post_init__(self) -> None:
        if self.tail <= 0 or self.head <= 0:
            raise ValueError("tail and head must be nonempty node sets")
        if self.tail & self.head:
            raise ValueError(
                f"tail {self.tail:#b} and head {self.head:#b} must be disjoint"
            )

    @classmethod
    def from_nodes(cls, tail: Iterable[int], head: Iterable[int]) -> "Hyperarc":
        return cls(_mask_from_nodes(tail), _mask_from_nodes(head))

    @property
    def nodes(self) -> int:
        return self.tail | self.head

    @property
    def size(self) -> int:
        return self.nodes.bit_count()

    @property
    def tail_nodes(self) -> tuple[int, ...]:
        return _nodes_from_mask(self.tail)

    @property
    def head_nodes(self) -> tuple[int, ...]:
        return _nodes_from_mask(self.head)

    def __repr__(self) -> str:
        return f"Hyperarc({set(self.tail_nodes)} -> {set(self.head_nodes)})"


@dataclass(frozen=True, slots=True)
class Dihypergraph:
    """n labeled nodes plus a duplicate-free tuple of hyperarcs.

    Uniformity is not enforced: b-uniform universes are built by
    hyperarc_universe, but fixtures may mix hyperarc sizes.
    """

    n: int
    arcs: tuple[Hyperarc, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"need n >= 0, got {self.n}")
        full = (1 << self.n) - 1
        for arc in self.arcs:
            if arc.nodes & ~full:
                raise ValueError(f"{arc!r} uses nodes outside 0..{self.n - 1}")
        if len(set(self.arcs)) != len(self.arcs):
            raise ValueError("duplicate hyperarcs")

    @classmethod
    def from_node_sets(
        cls, n: int, pairs: Iterable[tuple[Iterable[int], Iterable[int]]]
    ) -> "Dihypergraph":
        return cls(n, tuple(Hyperarc.from_nodes(t, h) for t, h in pairs))

    @property
    def q(self) -> int:
        return len(self.arcs)


def hyperarc_universe(n: int, b: int) -> list[Hyperarc]:
    """All b-uniform hyperarcs on n nodes in canonical order.

    Ordered by the underlying b-node-set ascending as a bitmask, then by
    tail bitmask ascending; length is (2^b - 2) * C(n, b).
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if b < 2:
        raise ValueError(f"uniformity b must be >= 2, got {b}")
    arcs: list[Hyperarc] = []
    if n < b:
        return arcs
    support = (1 << b) - 1
    limit = 1 << n
    while support < limit:
        positions = _nodes_from_mask(support)
        # Mapping selector bits onto the sorted positions preserves
        # numeric order, so tails come out ascending.
        for selector in range(1, (1 << b) - 1):
            tail = 0
            for j in range(b):
                if selector >> j & 1:
                    tail |= 1 << positions[j]
            arcs.append(Hyperarc(tail, support ^ tail))
        # Gosper's hack: next bitmask with exactly b bits set.
        low = support & -support
        ripple = support + low
        support = ripple | ((support ^ ripple) >> 2) // low
    return arcs


def induced_adjacency(g: Dihypergraph) -> list[int]:
    """Row bitmasks of the induced relation: bit v of row u set iff u -> v."""
    adj = [0] * g.n
    for arc in g.arcs:
        for u in _nodes_from_mask(arc.tail):
            adj[u] |= arc.head
    return adj


def relation_pairs(adj: Sequence[int]) -> list[tuple[int, int]]:
    """The relation as sorted (u, v) pairs, convenient for display."""
    return [(u, v) for u in range(len(adj)) for v in _nodes_from_mask(adj[u])]


def reachability_closure(adj: Sequence[int]) -> list[int]:
    """Transitive (not reflexive) closure of a row-bitmask relation."""
    clo = list(adj)
    n = len(clo)
    for k in range(n):
        bit = 1 << k
        for u in range(n):
            if clo[u] & bit:
                clo[u] |= clo[k]
    return clo


def is_acyclic(g: Dihypergraph) -> bool:
    clo = reachability_closure(induced_adjacency(g))
    return all(not clo[u] >> u & 1 for u in range(g.n))


def scc_decompose(g: Dihypergraph) -> tuple[tuple[int, ...], ...]:
    """Strong components as node tuples, ordered by smallest member."""
    clo = reachability_closure(induced_adjacency(g))
    classes: list[list[int]] = []
    rep_class: dict[int, list[int]] = {}
    for u in range(g.n):
        for v in range(u):
            if clo[u] >> v & 1 and clo[v] >> u & 1:
                rep_class[v].append(u)
                break
        else:
            cls: list[int] = [u]
            rep_class[u] = cls
            classes.append(cls)
    return tuple(tuple(cls) for cls in classes)


def is_strong(g: Dihypergraph) -> bool:
    return g.n >= 1 and len(scc_decompose(g)) == 1


def source_components(g: Dihypergraph) -> tuple[int, int]:
    """(number of source strong components, number of sources).

    A source strong component has no incoming arc from another
    component; a source is a source strong component of one node.
    """
    if g.n == 0:
        raise ValueError("source components are undefined for the empty dihypergraph")
    adj = induced_adjacency(g)
    sccs = scc_decompose(g)
    comp_of = [0] * g.n
    for i, cls in enumerate(sccs):
        for u in cls:
            comp_of[u] = i
    incoming = [False] * len(sccs)
    for u, v in relation_pairs(adj):
        if comp_of[u] != comp_of[v]:
            incoming[comp_of[v]] = True
    n_components = 0
    n_sources = 0
    for i, cls in enumerate(sccs):
        if not incoming[i]:
            n_components += 1
            if len(cls) == 1:
                n_sources += 1
    return n_components, n_sources


def find_cycle(g: Dihypergraph) -> tuple[int, ...] | None:
    """Nodes of one directed cycle (start node not repeated), or None.

    Returns a shortest cycle through the lowest-indexed node that lies
    on any cycle, found by breadth-first search back to its start.
    """
    adj = induced_adjacency(g)
    clo = reachability_closure(adj)
    start = next((u for u in range(g.n) if clo[u] >> u & 1), None)
    if start is None:
        return None
    parent: dict[int, int] = {}
    frontier = [start]
    while frontier:
        nxt: list[int] = []
        for u in frontier:
            for v in _nodes_from_mask(adj[u]):
                if v == start:
                    path = [u]
                    while path[-1] != start:
                        path.append(parent[path[-1]])
                    return tuple(reversed(path))
                if v not in parent:
                    parent[v] = u
                    nxt.append(v)
        frontier = nxt
    raise AssertionError("closure reported a cycle that the walk could not find")
