"""Ground truth by exhaustion: explicit structures plus the census sweep."""
from .census import (
    DEFAULT_CAP_BITS,
    CensusTable,
    UniverseTooLargeError,
    available_backends,
    census,
    resolve_backend,
)
from .structures import (
    SEMANTICS,
    Dihypergraph,
    Hyperarc,
    find_cycle,
    hyperarc_universe,
    induced_adjacency,
    is_acyclic,
    is_strong,
    reachability_closure,
    relation_pairs,
    scc_decompose,
    source_components,
)

__all__ = [
    "DEFAULT_CAP_BITS",
    "SEMANTICS",
    "CensusTable",
    "Dihypergraph",
    "Hyperarc",
    "UniverseTooLargeError",
    "available_backends",
    "census",
    "find_cycle",
    "hyperarc_universe",
    "induced_adjacency",
    "is_acyclic",
    "is_strong",
    "reachability_closure",
    "relation_pairs",
    "resolve_backend",
    "scc_decompose",
    "source_components",
]
