"""Cylindric diagrams: the rank loop's cell labels on the rolled strip.

For a parking sorted configuration the rank loop visits one cell per sink
unit; rolling the periodic diagram into an n-row strip puts the cell labelled
s at column u_{b_{t+1}} + q, row t, where s = qn + t by floor division.  The
red path cuts the strip into a left and a right component; the rank counts
visited right cells, and the pair of statistics below refines that count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Configuration, SandpileError, degree
from .rank import _r_entries, is_parking_sorted, rank_parking_sorted
from .series import SeriesRing, TruncatedSeries


@dataclass(frozen=True)
class CylCell:
    """One labelled cell of the rolled strip."""

    s: int
    column: int
    row: int
    side: str  # "left" or "right" of the red cut


@dataclass(frozen=True)
class BoundarySets:
    """Sink values where consecutive labels switch sides: s_plus collects the
    left-to-right switches, s_minus the right-to-left ones.  Along the whole
    label line they interleave and |s_plus| = |s_minus| + 1."""

    s_plus: tuple[int, ...]
    s_minus: tuple[int, ...]


def _require_parking(u: Configuration, who: str) -> None:
    if not is_parking_sorted(u):
        raise SandpileError(f"{who} expects a parking sorted configuration")


def _red_column(u: Configuration, t: int) -> int:
    """Column of the red cut in strip row t: the count of a-values <= t-1."""
    return sum(1 for v in u.a if v <= t - 1)


def label_cell(u: Configuration, s: int) -> CylCell:
    """The cell carrying label s, with its side of the red cut."""
    _require_parking(u, "label_cell")
    n = u.shape.n
    q, t = divmod(s, n)
    column = u.b[t] + q
    side = "right" if column >= _red_column(u, t) else "left"
    return CylCell(s, column, t, side)


def rank_via_cylindric(u: Configuration) -> int:
    """Rank as -1 plus the number of right-side labels in [0, sink]."""
    _require_parking(u, "rank_via_cylindric")
    sink = u.require_sink()
    n = u.shape.n
    r = _r_entries(u.a, u.b, u.shape.m, n)
    total = 0
    for t in range(n):
        # right cells of row t have label s = qn + t with q >= 1 - r[t]
        q_hi = (sink - t) // n
        count = q_hi - (1 - r[t]) + 1
        if count > 0:
            total += count
    return total - 1


def xpara(u: Configuration) -> int:
    """Unvisited left cells; equals (m-1)(n-1) + rank - degree."""
    _require_parking(u, "xpara")
    m, n = u.shape.m, u.shape.n
    return (m - 1) * (n - 1) + rank_parking_sorted(u) - degree(u)


def ypara(u: Configuration) -> int:
    """Visited right cells; equals rank + 1."""
    _require_parking(u, "ypara")
    return rank_parking_sorted(u) + 1


def xpara_by_counting(u: Configuration) -> int:
    """xpara straight from the cells: per row, the left labels are those with
    q <= -gap, so count the ones above the sink."""
    _require_parking(u, "xpara_by_counting")
    sink = u.require_sink()
    n = u.shape.n
    r = _r_entries(u.a, u.b, u.shape.m, n)
    total = 0
    for t in range(n):
        q_visited = (sink - t) // n  # largest q with label <= sink in row t
        count = -r[t] - q_visited
        if count > 0:
            total += count
    return total


def ypara_by_counting(u: Configuration) -> int:
    """ypara straight from the cells (same counting as rank_via_cylindric)."""
    _require_parking(u, "ypara_by_counting")
    return rank_via_cylindric(u) + 1


def boundary_sets(u: Configuration) -> BoundarySets:
    """Scan labels over [-1, nm+n] collecting the side switches.

    The window suffices: right cells never carry negative labels (parking
    keeps every gap <= 1) and left cells have q <= m-2; both facts are checked
    on the fly while scanning.
    """
    _require_parking(u, "boundary_sets")
    m, n = u.shape.m, u.shape.n
    red = [_red_column(u, t) for t in range(n)]
    lo, hi = -1, n * m + n

    def side_right(s: int) -> bool:
        q, t = divmod(s, n)
        right = u.b[t] + q >= red[t]
        if right and s < 0:
            raise RuntimeError("right cell with negative label; window bound violated")
        if not right and q > m - 2:
            raise RuntimeError("left cell beyond the window; window bound violated")
        return right

    s_plus, s_minus = [], []
    prev = side_right(lo)
    for s in range(lo + 1, hi + 1):
        cur = side_right(s)
        if cur and not prev:
            s_plus.append(s - 1)
        elif prev and not cur:
            s_minus.append(s - 1)
        prev = cur
    return BoundarySets(tuple(s_plus), tuple(s_minus))


def sink_series(u: Configuration, ring: SeriesRing) -> TruncatedSeries:
    """Generating function of (xpara, ypara) over every sink value, as a
    truncated series in the ring's x and y.

    Uses the closed form: the boundary sinks contribute an alternating sum of
    monomials, and the geometric runs between them are restored by the factor
    (1-xy)/((1-x)(1-y)).
    """
    _require_parking(u, "sink_series")
    bnd = boundary_sets(u.with_sink(None))
    acc = ring.zero()
    for s in bnd.s_plus:
        acc = acc + _stat_monomial(u, s, ring)
    for s in bnd.s_minus:
        acc = acc - _stat_monomial(u, s, ring)
    return axes_prefactor(ring) * acc


def sink_series_direct(u: Configuration, ring: SeriesRing) -> TruncatedSeries:
    """Same series by brute summation over the finitely many contributing
    sink values (xpara decreases and ypara increases with the sink, so both
    scan directions stop once they leave the caps)."""
    cap_x = ring.caps[ring._index("x")]
    cap_y = ring.caps[ring._index("y")]
    acc = ring.zero()
    s = 0
    if xpara(u.with_sink(0)) <= cap_x:
        while xpara(u.with_sink(s - 1)) <= cap_x:
            s -= 1
    else:
        while xpara(u.with_sink(s)) > cap_x:
            s += 1
    while True:
        v = u.with_sink(s)
        yp = ypara(v)
        if yp > cap_y:
            break
        xp = xpara(v)
        if xp <= cap_x:
            acc = acc + ring.monomial({"x": xp, "y": yp})
        s += 1
    return acc


def _stat_monomial(u: Configuration, sink: int, ring: SeriesRing) -> TruncatedSeries:
    v = u.with_sink(sink)
    return ring.monomial({"x": xpara(v), "y": ypara(v)})


def axes_prefactor(ring: SeriesRing) -> TruncatedSeries:
    """(1-xy)/((1-x)(1-y)): coefficient 1 exactly on the two axes."""
    one = ring.one()
    return (
        (one - ring.monomial({"x": 1, "y": 1}))
        * (one - ring.var("x")).geom_inverse()
        * (one - ring.var("y")).geom_inverse()
    )
