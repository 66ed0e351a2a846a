from itertools import combinations_with_replacement

from bipartite_sandpile.core import Configuration, GraphShape


def stable_sorted_partials(m: int, n: int):
    """Every stable sorted partial configuration of K_{m,n}."""
    shape = GraphShape(m, n)
    for a in combinations_with_replacement(range(n), m - 1):
        for b in combinations_with_replacement(range(m), n):
            yield Configuration(shape, a, None, b)


def exhaustive_suite(m: int, n: int, sink_lo: int = -3, sink_hi: int | None = None):
    """Stable sorted configurations with a sink sweep, as in the oracle
    equivalence runs."""
    if sink_hi is None:
        sink_hi = 3 * m * n
    for u in stable_sorted_partials(m, n):
        for sink in range(sink_lo, sink_hi + 1):
            yield u.with_sink(sink)
