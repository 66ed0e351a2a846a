"""Rank computation on K_{m,n}: row-gap vectors, grid-shift operators, the
closed-form parking map, and three mutually checking rank algorithms.

Everything here works on sorted configurations.  The graphical picture behind
the code: a stable sorted configuration is a pair of monotone lattice paths in
an m x n grid (green path from the b-part, red path from the a-part), and the
operators below slide that grid along the doubly periodic continuation of the
two paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Configuration,
    GraphShape,
    ProofOfRank,
    SandpileError,
    config,
    degree,
    is_compact,
    is_sorted,
    is_stable,
    sort_config,
    stabilize,
)


@dataclass(frozen=True)
class RVector:
    """Per-row gap between the green and red paths of a stable sorted
    configuration: entry i is (green column in row i) - (red column in row i).

    Row i of the intersection area holds max(0, entries[i-1]) cells, so the
    configuration is parking exactly when every entry is at most 1.
    """

    entries: tuple[int, ...]
    shape: GraphShape


@dataclass(frozen=True)
class GridShift:
    """Unique pair of east/north shift exponents taking the parking sorted
    representative back to a compact sorted configuration."""

    k_a: int
    k_b: int


# ---------------------------------------------------------------------------
# row gaps


def _r_entries(a: tuple[int, ...], b: tuple[int, ...], m: int, n: int) -> list[int]:
    """Two-finger scan computing all row gaps in O(m+n); no validation."""
    out = []
    h = 0  # number of a-values <= i-2, maintained as i grows
    for i in range(1, n + 1):
        while h < m - 1 and a[h] <= i - 2:
            h += 1
        out.append(b[i - 1] + 1 - h)
    return out


def r_vector(u: Configuration) -> RVector:
    """Row-gap vector of a stable sorted configuration (sink ignored)."""
    if not (is_stable(u) and is_sorted(u)):
        raise SandpileError("r_vector expects a stable sorted configuration")
    return RVector(tuple(_r_entries(u.a, u.b, u.shape.m, u.shape.n)), u.shape)


def is_parking_sorted(u: Configuration) -> bool:
    """No row of the intersection area holds two cells: all row gaps <= 1."""
    if not (is_stable(u) and is_sorted(u)):
        raise SandpileError("is_parking_sorted expects a stable sorted configuration")
    return all(r <= 1 for r in _r_entries(u.a, u.b, u.shape.m, u.shape.n))


def _intersection_cells(u: Configuration) -> set[tuple[int, int]]:
    """Cells (column, row), 1-based, under the red path and left of the green
    path; the sink column counts as full height."""
    m, n = u.shape.m, u.shape.n
    cells = set()
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            below_red = True if i == m else u.a[i - 1] >= j - 1
            if below_red and u.b[j - 1] >= i - 1:
                cells.add((i, j))
    return cells


def is_recurrent_sorted(u: Configuration) -> bool:
    """Intersection area edge-connected and touching both extreme corners."""
    if not (is_stable(u) and is_sorted(u)):
        raise SandpileError("is_recurrent_sorted expects a stable sorted configuration")
    m, n = u.shape.m, u.shape.n
    cells = _intersection_cells(u)
    if (1, 1) not in cells or (m, n) not in cells:
        return False
    stack = [(1, 1)]
    seen = {(1, 1)}
    while stack:
        x, y = stack.pop()
        for nxt in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen == cells


# ---------------------------------------------------------------------------
# grid-shift operators (east/north moves of the grid on the periodic diagram)


def _require_compact_sorted(u: Configuration, who: str) -> None:
    if not (is_sorted(u) and is_compact(u)):
        raise SandpileError(f"{who} expects a compact sorted configuration")


def shift_east(u: Configuration) -> Configuration:
    """Move the grid one step east: the sorted form of one reverse toppling of
    the smallest a-vertex.  Cycles the a-part and lowers the whole b-part."""
    _require_compact_sorted(u, "shift_east")
    n = u.shape.n
    a = u.a[1:] + (u.a[0] + n,) if u.a else ()
    b = tuple(v - 1 for v in u.b)
    return Configuration(u.shape, a, u.sink, b)


def shift_west(u: Configuration) -> Configuration:
    """Inverse of shift_east."""
    _require_compact_sorted(u, "shift_west")
    n = u.shape.n
    a = (u.a[-1] - n,) + u.a[:-1] if u.a else ()
    b = tuple(v + 1 for v in u.b)
    return Configuration(u.shape, a, u.sink, b)


def shift_north(u: Configuration) -> Configuration:
    """Move the grid one step north: cycles the b-part, lowers the a-part and
    the sink (when present) by one."""
    _require_compact_sorted(u, "shift_north")
    m = u.shape.m
    a = tuple(v - 1 for v in u.a)
    b = u.b[1:] + (u.b[0] + m,)
    sink = None if u.sink is None else u.sink - 1
    return Configuration(u.shape, a, sink, b)


def shift_south(u: Configuration) -> Configuration:
    """Inverse of shift_north."""
    _require_compact_sorted(u, "shift_south")
    m = u.shape.m
    a = tuple(v + 1 for v in u.a)
    b = (u.b[-1] - m,) + u.b[:-1]
    sink = None if u.sink is None else u.sink + 1
    return Configuration(u.shape, a, sink, b)


def _shift_power(u: Configuration, op, inv, k: int) -> Configuration:
    for _ in range(abs(k)):
        u = op(u) if k > 0 else inv(u)
    return u


# ---------------------------------------------------------------------------
# one-step moves toward the parking / recurrent representative


def next_toward_parking(u: Configuration) -> Configuration:
    """One grid slide southwest to the previous stable configuration; fixed
    points are exactly the parking sorted configurations.

    The designated double cell sits in the highest row j with gap >= 2 whose
    red north step is reachable by the green path (the green north step of
    row j-1 weakly left of it); the move topples the a-suffix from the
    leftmost cell of that row and the b-suffix from that row upward.
    """
    if not (is_stable(u) and is_sorted(u)):
        raise SandpileError("next_toward_parking expects a stable sorted configuration")
    m, n = u.shape.m, u.shape.n
    r = _r_entries(u.a, u.b, m, n)
    red_col = [sum(1 for v in u.a if v <= t - 1) for t in range(n)]
    row = 0
    for j in range(1, n + 1):
        if r[j - 1] >= 2 and (j == 1 or u.b[j - 2] <= red_col[j - 1]):
            row = j
    if row == 0:
        return u
    col = 1 + red_col[row - 1]
    p = m - col  # reverse topplings of a_{col}..a_{m-1}
    q = n - row + 1  # reverse topplings of b_{row}..b_n
    a = sorted(v + q - (n if k >= col else 0) for k, v in enumerate(u.a, start=1))
    b = sorted(v + p - (m if h >= row else 0) for h, v in enumerate(u.b, start=1))
    sink = None if u.sink is None else u.sink + q
    return Configuration(u.shape, tuple(a), sink, tuple(b))


def next_toward_recurrent(u: Configuration) -> Configuration:
    """One grid slide northeast to the next stable configuration; fixed points
    are exactly the recurrent sorted configurations.

    Walks the green path step by step (east while the first b-value is
    non-negative, else north) until the window shows a stable configuration.
    """
    if not (is_stable(u) and is_sorted(u)):
        raise SandpileError("next_toward_recurrent expects a stable sorted configuration")
    if is_recurrent_sorted(u):
        return u
    m, n = u.shape.m, u.shape.n
    v = u
    for _ in range(4 * (m + n) + 8):
        v = shift_east(v) if v.b[0] >= 0 else shift_north(v)
        if is_stable(v):
            return v
    raise RuntimeError("no stable configuration found northeast; this cannot happen")


# ---------------------------------------------------------------------------
# closed-form parking map (linear time)


def park_sort(u: Configuration) -> Configuration:
    """Sorted parking representative of a sorted configuration, in O(m+n).

    Accepts the slightly relaxed precondition needed by the greedy step:
    a-values in [0, n), b-values in [-1, m), both parts sorted.  Picks the
    first row attaining the maximal gap, slides the grid there in one shot via
    the two closed-form value maps, and restores the sink (when present) from
    degree conservation.
    """
    m, n = u.shape.m, u.shape.n
    if not is_sorted(u):
        raise SandpileError("park_sort expects a sorted configuration")
    if not (all(0 <= v < n for v in u.a) and all(-1 <= v < m for v in u.b)):
        raise SandpileError("park_sort expects a-values in [0,n) and b-values in [-1,m)")
    out, _ = _park_sort_rotation(u)
    return out


def _park_sort_rotation(u: Configuration) -> tuple[Configuration, int]:
    """park_sort plus the amount the b-part was cyclically rotated left."""
    m, n = u.shape.m, u.shape.n
    r = _r_entries(u.a, u.b, m, n)
    rh = max(r)
    h = r.index(rh) + 1
    bh = u.b[h - 1]
    k = bh - rh + 2
    b1 = [v - bh + (m if i <= h - 1 else 0) for i, v in enumerate(u.b, start=1)]
    a1 = [v - (h - 1) + (n if j <= k - 1 else 0) for j, v in enumerate(u.a, start=1)]
    a2 = a1[k - 1:] + a1[: k - 1]
    b2 = b1[h - 1:] + b1[: h - 1]
    if any(a2[i] > a2[i + 1] for i in range(len(a2) - 1)) or any(
        b2[j] > b2[j + 1] for j in range(len(b2) - 1)
    ):
        raise RuntimeError("park_sort produced an unsorted result; this cannot happen")
    sink = None
    if u.sink is not None:
        sink = degree(u) - sum(a2) - sum(b2)
    return Configuration(u.shape, tuple(a2), sink, tuple(b2)), h - 1


def parking_representative(u: Configuration) -> Configuration:
    """sort(park(u)) for an arbitrary full configuration: stabilize, sort,
    then apply the closed-form parking map.  O(m+n) overall."""
    return park_sort(sort_config(stabilize(u)))


# ---------------------------------------------------------------------------
# greedy step and its action on row gaps


def greedy_step(u: Configuration) -> Configuration:
    """One iteration of the greedy rank loop: remove a chip from the first
    b-vertex (its value is 0 on a parking sorted configuration) and re-park.
    Degree drops by exactly 1; on a full configuration the sink absorbs the
    north moves of the slide."""
    if not is_parking_sorted(u):
        raise SandpileError("greedy_step expects a parking sorted configuration")
    v = Configuration(u.shape, u.a, u.sink, (u.b[0] - 1,) + u.b[1:])
    return park_sort(v)


def greedy_step_rvector(r: RVector) -> RVector:
    """Action of one greedy step on row gaps: rotate left, the freed last slot
    becoming 1 if the dropped gap was 1 and gaining 1 otherwise."""
    entries = r.entries
    if any(v > 1 for v in entries):
        raise SandpileError("greedy_step_rvector expects all entries <= 1")
    first = entries[0]
    last = 1 if first == 1 else first + 1
    return RVector(entries[1:] + (last,), r.shape)


# ---------------------------------------------------------------------------
# rank: closed formula, greedy algorithm, scan algorithm, fast pipeline


def rank_parking_sorted(u: Configuration) -> int:
    """Rank of a parking sorted configuration from its sink value and row
    gaps: write sink+1 = nQ+R and sum the per-row counts of cells the rank
    loop visits right of the red path."""
    if not is_parking_sorted(u):
        raise SandpileError("rank_parking_sorted expects a parking sorted configuration")
    sink = u.require_sink()
    if sink < 0:
        return -1
    n = u.shape.n
    q, rem = divmod(sink + 1, n)
    r = _r_entries(u.a, u.b, u.shape.m, n)
    total = 0
    for i in range(1, n + 1):
        term = q + (1 if i <= rem else 0) + r[i - 1] - 1
        if term > 0:
            total += term
    return total - 1


def rank_greedy(u: Configuration) -> tuple[int, ProofOfRank]:
    """Greedy rank algorithm; also returns a proof configuration.

    Repeatedly removes one chip from a zero b-vertex of the current parking
    representative until it stops being effective.  The removals are tracked
    back through every sorting rotation so the proof applies to the input's
    own vertex labels.
    """
    u.require_sink()
    w = stabilize(u)
    m, n = u.shape.m, u.shape.n
    perm = sorted(range(n), key=lambda j: w.b[j])  # slot -> original b-index
    v = Configuration(u.shape, tuple(sorted(w.a)), w.sink, tuple(w.b[j] for j in perm))
    v, rot = _park_sort_rotation(v)
    perm = perm[rot:] + perm[:rot]
    removals = [0] * n
    rank = -1
    while v.sink >= 0:
        removals[perm[0]] += 1
        rank += 1
        v = Configuration(v.shape, v.a, v.sink, (v.b[0] - 1,) + v.b[1:])
        v, rot = _park_sort_rotation(v)
        perm = perm[rot:] + perm[:rot]
    proof = ProofOfRank(config(m, n, [0] * (m - 1), 0, removals))
    return rank, proof


def rank_scan(u: Configuration) -> int:
    """Scan rank algorithm: walk the grid northeast along the green path,
    paying one sink unit per north step and scoring the north steps whose
    crossed cell lies right of the red cut."""
    u.require_sink()
    m, n = u.shape.m, u.shape.n
    v = parking_representative(u)
    sink = v.sink
    v = v.with_sink(None)
    rank = -1
    while sink >= 0:
        while v.b[0] >= 0:
            v = shift_east(v)
        v = shift_north(v)
        if m == 1 or v.a[m - 2] >= n - 1:
            rank += 1
        sink -= 1
    return rank


def rank_of(u: Configuration) -> int:
    """Rank of an arbitrary full configuration in O(m+n): stabilize, sort,
    park in closed form, then apply the sink/row-gap formula."""
    return rank_parking_sorted(parking_representative(u))


# ---------------------------------------------------------------------------
# canonical divisor and the compact decomposition


def canonical_divisor(shape: GraphShape) -> Configuration:
    """n-2 on every a-vertex (sink included), m-2 on every b-vertex."""
    m, n = shape.m, shape.n
    return Configuration(shape, (n - 2,) * (m - 1), n - 2, (m - 2,) * n)


def decompose_compact(u: Configuration) -> GridShift:
    """The unique (k_a, k_b) with u = east^{k_a} north^{k_b} of its parking
    sorted representative; found by searching the window [-(m+n), m+n]^2 and
    verified by re-application."""
    _require_compact_sorted(u, "decompose_compact")
    u.require_sink()
    m, n = u.shape.m, u.shape.n
    p = parking_representative(u)
    w = m + n
    for k_b in range(-w, w + 1):
        base = _shift_power(p, shift_north, shift_south, k_b)
        for k_a in range(-w, w + 1):
            if _shift_power(base, shift_east, shift_west, k_a) == u:
                return GridShift(k_a, k_b)
    raise RuntimeError("no grid-shift decomposition in the search window; this cannot happen")
