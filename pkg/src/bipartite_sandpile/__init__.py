"""Sandpile toolkit for complete bipartite graphs: linear-time rank
computation, the grid-shift operator calculus behind it, and exact
verification of the enumerative identities it produces."""

from .core import (
    Configuration,
    GraphShape,
    ProofOfRank,
    SandpileError,
    config,
    counting_sort,
    degree,
    is_compact,
    is_effective,
    is_quasi_stable,
    is_sorted,
    is_stable,
    sort_config,
    stabilize,
    topple,
    topple_set,
)
from .rank import (
    GridShift,
    RVector,
    canonical_divisor,
    decompose_compact,
    greedy_step,
    greedy_step_rvector,
    is_parking_sorted,
    is_recurrent_sorted,
    next_toward_parking,
    next_toward_recurrent,
    park_sort,
    parking_representative,
    r_vector,
    rank_greedy,
    rank_of,
    rank_parking_sorted,
    rank_scan,
    shift_east,
    shift_north,
    shift_south,
    shift_west,
)
from .series import SeriesRing, TruncatedSeries

__all__ = [
    "Configuration",
    "GraphShape",
    "GridShift",
    "ProofOfRank",
    "RVector",
    "SandpileError",
    "SeriesRing",
    "TruncatedSeries",
    "canonical_divisor",
    "config",
    "counting_sort",
    "decompose_compact",
    "degree",
    "greedy_step",
    "greedy_step_rvector",
    "is_compact",
    "is_effective",
    "is_parking_sorted",
    "is_quasi_stable",
    "is_recurrent_sorted",
    "is_sorted",
    "is_stable",
    "next_toward_parking",
    "next_toward_recurrent",
    "park_sort",
    "parking_representative",
    "r_vector",
    "rank_greedy",
    "rank_of",
    "rank_parking_sorted",
    "rank_scan",
    "shift_east",
    "shift_north",
    "shift_south",
    "shift_west",
    "sort_config",
    "stabilize",
    "topple",
    "topple_set",
]
