"""Configurations on the complete bipartite graph K_{m,n} and basic chip moves.

The graph has parts ``A = {a_1..a_m}`` and ``B = {b_1..b_n}``, every a-vertex
adjacent to every b-vertex, and ``a_m`` distinguished as the sink.  A
configuration assigns an integer to every vertex; the sink value is optional
("partial" configurations stand for a whole family indexed by the sink value).

Vertices are addressed by the 1-based labels ``"a1".."am"`` / ``"b1".."bn"``
used in serialized form; internally everything is 0-based tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class SandpileError(ValueError):
    """Domain error: bad configuration, violated precondition, or bad vertex."""


@dataclass(frozen=True)
class GraphShape:
    """Sizes (m, n) of the two parts; a-vertices have degree n and vice versa."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise SandpileError(f"need m >= 1 and n >= 1, got ({self.m}, {self.n})")


@dataclass(frozen=True)
class Configuration:
    """Integer values on K_{m,n}: a-part (m-1 values), optional sink, b-part.

    Values are unrestricted integers; stability and friends are predicates,
    not invariants.  ``sink=None`` is the partial configuration u[*].
    """

    shape: GraphShape
    a: tuple[int, ...]
    sink: int | None
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != self.shape.m - 1:
            raise SandpileError(
                f"a-part has {len(self.a)} values, expected m-1 = {self.shape.m - 1}"
            )
        if len(self.b) != self.shape.n:
            raise SandpileError(
                f"b-part has {len(self.b)} values, expected n = {self.shape.n}"
            )

    @property
    def is_partial(self) -> bool:
        return self.sink is None

    def with_sink(self, sink: int | None) -> "Configuration":
        return Configuration(self.shape, self.a, sink, self.b)

    def require_sink(self) -> int:
        if self.sink is None:
            raise SandpileError("partial configuration: sink value required")
        return self.sink


def config(m: int, n: int, a: list[int] | tuple[int, ...], sink: int | None,
           b: list[int] | tuple[int, ...]) -> Configuration:
    """Shorthand constructor used all over the tests."""
    return Configuration(GraphShape(m, n), tuple(a), sink, tuple(b))


@dataclass(frozen=True)
class ProofOfRank:
    """Non-negative configuration f witnessing the rank: degree(f) = rank+1
    and u - f is non-effective.  The greedy algorithm always returns one
    supported on the b-vertices."""

    f: Configuration

    def __post_init__(self) -> None:
        if self.f.sink is None:
            raise SandpileError("a rank proof carries an explicit sink value")
        if any(v < 0 for v in self.f.a) or self.f.sink < 0 or any(v < 0 for v in self.f.b):
            raise SandpileError("a rank proof must be non-negative everywhere")


# ---------------------------------------------------------------------------
# vertex addressing


def parse_vertex(shape: GraphShape, label: str) -> tuple[str, int]:
    """Turn "a3"/"b1" into ("a", index0).  The sink "am" is a valid a-vertex."""
    part = label[:1]
    try:
        pos = int(label[1:])
    except ValueError:
        raise SandpileError(f"bad vertex label {label!r}") from None
    if part == "a" and 1 <= pos <= shape.m:
        return "a", pos - 1
    if part == "b" and 1 <= pos <= shape.n:
        return "b", pos - 1
    raise SandpileError(f"vertex {label!r} does not exist on K_{{{shape.m},{shape.n}}}")


# ---------------------------------------------------------------------------
# degree and toppling


def degree(u: Configuration) -> int:
    """Sum of all values, sink included."""
    return sum(u.a) + u.require_sink() + sum(u.b)


def topple(u: Configuration, vertex: str) -> Configuration:
    """One toppling of ``vertex``: it loses its degree, every neighbour gains 1.

    Toppling changes the sink value (every a-vertex is a neighbour of each
    b-vertex), hence the sink must be present.
    """
    m, n = u.shape.m, u.shape.n
    sink = u.require_sink()
    part, i = parse_vertex(u.shape, vertex)
    if part == "a":
        a = list(u.a)
        if i == m - 1:
            sink -= n
        else:
            a[i] -= n
        b = [v + 1 for v in u.b]
        return Configuration(u.shape, tuple(a), sink, tuple(b))
    b = list(u.b)
    b[i] -= m
    a = [v + 1 for v in u.a]
    return Configuration(u.shape, tuple(a), sink + 1, tuple(b))


def topple_set(u: Configuration, vertices: set[str] | frozenset[str]) -> Configuration:
    """Topple every vertex of a non-sink set once (order does not matter)."""
    m, n = u.shape.m, u.shape.n
    in_a = [False] * (m - 1)
    in_b = [False] * n
    for label in vertices:
        part, i = parse_vertex(u.shape, label)
        if part == "a" and i == m - 1:
            raise SandpileError("the sink may not belong to a toppling set")
        if part == "a":
            in_a[i] = True
        else:
            in_b[i] = True
    p, q = sum(in_a), sum(in_b)
    a = tuple(v - (n if in_a[i] else 0) + q for i, v in enumerate(u.a))
    b = tuple(v - (m if in_b[j] else 0) + p for j, v in enumerate(u.b))
    sink = None if u.sink is None else u.sink + q
    return Configuration(u.shape, a, sink, b)


# ---------------------------------------------------------------------------
# predicates


def is_quasi_stable(u: Configuration) -> bool:
    """Every non-sink value below its vertex degree (no lower bound)."""
    m, n = u.shape.m, u.shape.n
    return all(v < n for v in u.a) and all(v < m for v in u.b)


def is_stable(u: Configuration) -> bool:
    """Quasi-stable and non-negative outside the sink."""
    m, n = u.shape.m, u.shape.n
    return all(0 <= v < n for v in u.a) and all(0 <= v < m for v in u.b)


def is_sorted(u: Configuration) -> bool:
    """Both parts weakly increasing (the sink takes no part)."""
    a, b = u.a, u.b
    return all(a[i] <= a[i + 1] for i in range(len(a) - 1)) and all(
        b[j] <= b[j + 1] for j in range(len(b) - 1)
    )


def is_compact(u: Configuration) -> bool:
    """Value spread at most n on the a-part and at most m on the b-part."""
    m, n = u.shape.m, u.shape.n
    if u.a and max(u.a) - min(u.a) > n:
        return False
    return max(u.b) - min(u.b) <= m


# ---------------------------------------------------------------------------
# stabilization (Euclidean division scheme) and sorting


def stabilize(u: Configuration) -> Configuration:
    """Stable configuration toppling-equivalent to u, in O(m+n) operations.

    Two passes of Euclidean division: reduce the b-part mod m collecting the
    quotients, shift the a-part by their total and reduce mod n, then recover
    the sink from degree conservation.
    """
    m, n = u.shape.m, u.shape.n
    deg = degree(u)
    quot_total = 0
    b = []
    for v in u.b:
        q, r = divmod(v, m)
        quot_total += q
        b.append(r)
    a = [(v + quot_total) % n for v in u.a]
    sink = deg - sum(a) - sum(b)
    return Configuration(u.shape, tuple(a), sink, tuple(b))


def counting_sort(bound: int, values: list[int] | tuple[int, ...]) -> list[int]:
    """Sort integers in [0, bound] in O(bound + len) operations."""
    counts = [0] * (bound + 1)
    for v in values:
        if not 0 <= v <= bound:
            raise SandpileError(f"counting_sort: value {v} outside [0, {bound}]")
        counts[v] += 1
    out = []
    for v in range(bound + 1):
        c = counts[v]
        if c:
            out.extend([v] * c)
    return out


def sort_config(u: Configuration) -> Configuration:
    """The sorted representative of a stable configuration; sink untouched."""
    m, n = u.shape.m, u.shape.n
    if not is_stable(u):
        raise SandpileError("sort_config expects a stable configuration")
    a = counting_sort(n - 1, u.a) if u.a else []
    b = counting_sort(m - 1, u.b)
    return Configuration(u.shape, tuple(a), u.sink, tuple(b))


def is_effective(u: Configuration) -> bool:
    """Whether u is toppling-equivalent to a non-negative configuration.

    Equivalent to a non-negative sink value on the parking representative.
    """
    from . import rank

    return rank.parking_representative(u).sink >= 0


# ---------------------------------------------------------------------------
# JSON form: {"m":, "n":, "a": [...], "sink": int|null, "b": [...]}


def to_json_dict(u: Configuration) -> dict:
    return {
        "m": u.shape.m,
        "n": u.shape.n,
        "a": list(u.a),
        "sink": u.sink,
        "b": list(u.b),
    }


def from_json_dict(data: dict) -> Configuration:
    try:
        m, n = data["m"], data["n"]
        a, sink, b = data["a"], data.get("sink"), data["b"]
    except (KeyError, TypeError) as exc:
        raise SandpileError(f"configuration JSON missing field: {exc}") from None
    if not all(isinstance(v, int) for v in list(a) + list(b)):
        raise SandpileError("configuration values must be integers")
    if sink is not None and not isinstance(sink, int):
        raise SandpileError("sink must be an integer or null")
    return Configuration(GraphShape(m, n), tuple(a), sink, tuple(b))


def dumps(u: Configuration) -> str:
    return json.dumps(to_json_dict(u))


def loads(text: str) -> Configuration:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SandpileError(f"malformed configuration JSON: {exc}") from None
    return from_json_dict(data)
