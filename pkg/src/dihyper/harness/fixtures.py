"""Named example dihypergraphs shipped as package data.

Fixture JSON schema:
  {"name": str, "description": str, "nodes": [label, ...],
   "hyperarcs": [{"tail": [label, ...], "head": [label, ...]}, ...]}

Labels are arbitrary integers (the shipped files use 1..7); internally
nodes are reindexed 0..n-1 in the order given by "nodes", and reports
translate back to the original labels.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from ..oracle import (
    SEMANTICS,
    Dihypergraph,
    find_cycle,
    induced_adjacency,
    is_acyclic,
    is_strong,
    relation_pairs,
    scc_decompose,
    source_components,
)

__all__ = [
    "FIXTURE_NAMES",
    "Fixture",
    "FixtureReport",
    "classify_fixture",
    "fixture_report",
    "format_fixture_report",
    "load_fixture",
]

FIXTURE_NAMES = ("fig1", "fig2")


@dataclass(frozen=True, slots=True)
class Fixture:
    name: str
    description: str
    labels: tuple[int, ...]
    graph: Dihypergraph

    def label_of(self, index: int) -> int:
        return self.labels[index]


@dataclass(frozen=True, slots=True)
class FixtureReport:
    name: str
    description: str
    n: int
    hyperarcs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]  # label sets
    induced_arcs: tuple[tuple[int, int], ...]  # label pairs
    acyclic: bool
    cycle: tuple[int, ...] | None  # labels along one cycle, if any
    sccs: tuple[tuple[int, ...], ...]  # label partition
    source_component_count: int
    source_count: int
    strong: bool
    semantics: str = SEMANTICS


def load_fixture(name: str) -> Fixture:
    if name not in FIXTURE_NAMES:
        raise ValueError(f"unknown fixture {name!r}; available: {FIXTURE_NAMES}")
    text = resources.files("dihyper.data").joinpath(f"{name}.json").read_text()
    raw = json.loads(text)
    labels = tuple(int(v) for v in raw["nodes"])
    if len(set(labels)) != len(labels):
        raise ValueError(f"duplicate node labels in fixture {name!r}")
    index = {label: i for i, label in enumerate(labels)}
    pairs = [
        ([index[int(v)] for v in arc["tail"]], [index[int(v)] for v in arc["head"]])
        for arc in raw["hyperarcs"]
    ]
    graph = Dihypergraph.from_node_sets(len(labels), pairs)
    return Fixture(raw["name"], raw.get("description", ""), labels, graph)


def classify_fixture(fx: Fixture) -> FixtureReport:
    g = fx.graph
    adj = induced_adjacency(g)
    cycle = find_cycle(g)
    components, sources = source_components(g)
    return FixtureReport(
        name=fx.name,
        description=fx.description,
        n=g.n,
        hyperarcs=tuple(
            (
                tuple(fx.label_of(u) for u in arc.tail_nodes),
                tuple(fx.label_of(v) for v in arc.head_nodes),
            )
            for arc in g.arcs
        ),
        induced_arcs=tuple(
            (fx.label_of(u), fx.label_of(v)) for u, v in relation_pairs(adj)
        ),
        acyclic=is_acyclic(g),
        cycle=None if cycle is None else tuple(fx.label_of(u) for u in cycle),
        sccs=tuple(
            tuple(fx.label_of(u) for u in cls) for cls in scc_decompose(g)
        ),
        source_component_count=components,
        source_count=sources,
        strong=is_strong(g),
    )


def fixture_report(name: str) -> FixtureReport:
    return classify_fixture(load_fixture(name))


def _node_set(labels: tuple[int, ...]) -> str:
    return "{" + ",".join(str(v) for v in labels) + "}"


def format_fixture_report(r: FixtureReport) -> str:
    lines = [
        f"fixture: {r.name}",
        f"description: {r.description}",
        f"nodes: {r.n}",
        f"semantics: {r.semantics}",
        "hyperarcs:",
    ]
    for tail, head in r.hyperarcs:
        lines.append(f"  {_node_set(tail)} -> {_node_set(head)}")
    lines.append(
        "induced arcs: "
        + " ".join(f"{u}->{v}" for u, v in r.induced_arcs)
    )
    lines.append(f"acyclic: {'yes' if r.acyclic else 'no'}")
    if r.cycle is not None:
        lines.append("cycle witness: " + "->".join(str(v) for v in r.cycle))
    lines.append(
        "strong components: " + " ".join(_node_set(cls) for cls in r.sccs)
    )
    lines.append(f"source strong components: {r.source_component_count}")
    lines.append(f"sources: {r.source_count}")
    lines.append(f"strongly connected: {'yes' if r.strong else 'no'}")
    return "\n".join(lines)
