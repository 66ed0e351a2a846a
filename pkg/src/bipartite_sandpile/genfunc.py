"""Enumeration of parking sorted configurations and the generating-function
identities tying their degree/rank distribution to parallelogram polyominoes.

The tables come in two equivalent parameterizations: (degree, rank) and the
pair (xpara, ypara) = ((m-1)(n-1)+rank-degree, rank+1), whose joint
distribution is symmetric and has a product-form generating function over all
shapes at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .core import Configuration, GraphShape, SandpileError
from .cylindric import boundary_sets, xpara, ypara
from .rank import _r_entries, rank_parking_sorted
from .series import SeriesRing, TruncatedSeries

ENUMERATION_GUARD = 10**8


@dataclass(frozen=True)
class ParkingFamily:
    """Every parking sorted partial configuration of one shape."""

    shape: GraphShape
    configs: tuple[Configuration, ...]


@dataclass(frozen=True)
class PolyominoWeights:
    """How polyomino cells are weighted in a series: the cell variable takes
    the area, optionally shifted by +-height per row (that realizes the
    substitutions h -> q*h and h -> h/q without negative exponents, since a
    polyomino's area is at least its height)."""

    cell_var: str
    height_offset: int = 0
    width_var: str = "w"
    height_var: str = "h"


# ---------------------------------------------------------------------------
# enumeration and the two tables


def enumerate_parking_sorted(shape: GraphShape) -> ParkingFamily:
    """All parking sorted partial configurations: sorted stable parts with
    first b-value 0, filtered by row gaps <= 1."""
    m, n = shape.m, shape.n
    candidates = math.comb(n - 1 + m - 1, m - 1) * math.comb(m + n - 2, n - 1)
    if candidates > ENUMERATION_GUARD:
        raise SandpileError(
            f"enumerate_parking_sorted: {candidates} candidates exceed the guard"
        )
    configs = []
    for a in combinations_with_replacement(range(n), m - 1):
        for tail in combinations_with_replacement(range(m), n - 1):
            b = (0,) + tail
            if all(r <= 1 for r in _r_entries(a, b, m, n)):
                configs.append(Configuration(shape, a, None, b))
    return ParkingFamily(shape, tuple(configs))


def degree_rank_table(
    shape: GraphShape, degree_window: tuple[int, int]
) -> dict[tuple[int, int], int]:
    """Counts of full parking sorted configurations by (degree, rank), the
    sink running over the given inclusive degree window."""
    lo, hi = degree_window
    counts: dict[tuple[int, int], int] = {}
    for u in enumerate_parking_sorted(shape).configs:
        base = sum(u.a) + sum(u.b)
        for d in range(lo, hi + 1):
            rk = rank_parking_sorted(u.with_sink(d - base))
            key = (d, rk)
            counts[key] = counts.get(key, 0) + 1
    return counts


def xy_table(shape: GraphShape, ring: SeriesRing) -> TruncatedSeries:
    """Generating function of (xpara, ypara) over all full parking sorted
    configurations, truncated to the ring's x/y caps."""
    cap_x = ring.caps[ring._index("x")]
    cap_y = ring.caps[ring._index("y")]
    coeffs: dict[tuple[int, int], int] = {}
    for u in enumerate_parking_sorted(shape).configs:
        for xp, yp in _stat_pairs(u, cap_x, cap_y):
            coeffs[(xp, yp)] = coeffs.get((xp, yp), 0) + 1
    out: dict[tuple[int, ...], int] = {}
    for (xp, yp), c in coeffs.items():
        key = [0] * len(ring.variables)
        key[ring._index("x")] = xp
        key[ring._index("y")] = yp
        out[tuple(key)] = c
    return ring.from_coeffs(out)


def _stat_pairs(u: Configuration, cap_x: int, cap_y: int):
    """(xpara, ypara) for every sink value that can land within the caps.

    The sink window comes from monotonicity: below the last rank -1 sink all
    moves only grow xpara, above the first xpara 0 sink they only grow ypara.
    """
    m, n = u.shape.m, u.shape.n
    guard = m * n + n + 2
    s = -1
    while rank_parking_sorted(u.with_sink(s + 1)) < 0:
        s += 1
        if s > guard:
            raise RuntimeError("no non-negative rank below the guard; cannot happen")
    s_star = s  # largest sink with ypara = 0
    t = s_star
    while xpara(u.with_sink(t)) > 0:
        t += 1
        if t > guard + (m - 1) * (n - 1) + 1:
            raise RuntimeError("xpara never reached 0 below the guard; cannot happen")
    lo = s_star - (cap_x + 1)
    hi = t + cap_y + 1
    if xpara(u.with_sink(lo - 1)) <= cap_x or ypara(u.with_sink(hi + 1)) <= cap_y:
        raise RuntimeError("sink window misses contributions; cannot happen")
    for sv in range(lo, hi + 1):
        v = u.with_sink(sv)
        xp, yp = xpara(v), ypara(v)
        if xp <= cap_x and yp <= cap_y:
            yield xp, yp


# ---------------------------------------------------------------------------
# parallelogram polyominoes: column-transfer dynamic program


def polyomino_counts(
    area_cap: int, width_cap: int, height_cap: int
) -> dict[tuple[int, int, int], int]:
    """Counts by (area, width, height) of parallelogram polyominoes, built
    column by column; a column of height c may be followed by one of height
    c2 raised by anything in [max(0, c2-c), c2-1]."""
    result: dict[tuple[int, int, int], int] = {}
    states: dict[int, dict[tuple[int, int], int]] = {}
    for c in range(1, min(height_cap, area_cap) + 1):
        states[c] = {(c, c): 1}
    for w in range(1, width_cap + 1):
        for table in states.values():
            for (area, height), cnt in table.items():
                key = (area, w, height)
                result[key] = result.get(key, 0) + cnt
        if w == width_cap:
            break
        nxt: dict[int, dict[tuple[int, int], int]] = {}
        for c, table in states.items():
            for c2 in range(1, height_cap + 1):
                target = nxt.setdefault(c2, {})
                for rise in range(max(0, c2 - c), c2):
                    for (area, height), cnt in table.items():
                        area2, height2 = area + c2, height + rise
                        if area2 > area_cap or height2 > height_cap:
                            continue
                        key2 = (area2, height2)
                        target[key2] = target.get(key2, 0) + cnt
        states = {c: t for c, t in nxt.items() if t}
    return result


def polyomino_series(weights: PolyominoWeights, ring: SeriesRing) -> TruncatedSeries:
    """Polyomino generating function under the given weighting."""
    cell_cap = ring.caps[ring._index(weights.cell_var)]
    width_cap = ring.caps[ring._index(weights.width_var)]
    height_cap = ring.caps[ring._index(weights.height_var)]
    area_cap = cell_cap + (height_cap if weights.height_offset < 0 else 0)
    counts = polyomino_counts(area_cap, width_cap, height_cap)
    out: dict[tuple[int, ...], int] = {}
    for (area, width, height), cnt in counts.items():
        cell_exp = area + weights.height_offset * height
        key = [0] * len(ring.variables)
        key[ring._index(weights.cell_var)] = cell_exp
        key[ring._index(weights.width_var)] = width
        key[ring._index(weights.height_var)] = height
        out[tuple(key)] = out.get(tuple(key), 0) + cnt
    return ring.from_coeffs(out)


def l_series(ring: SeriesRing, qv: str = "q", wv: str = "w", hv: str = "h") -> TruncatedSeries:
    """The alternating double series whose quotient reproduces the polyomino
    counts: sum over (j,k) of (-1)^(j+k) w^j h^k q^C(j+k+1,2) / ((q)_k (q)_j)."""
    wcap = ring.caps[ring._index(wv)]
    hcap = ring.caps[ring._index(hv)]
    qcap = ring.caps[ring._index(qv)]
    total = ring.zero()
    for j in range(wcap + 1):
        for k in range(hcap + 1):
            e = (j + k + 1) * (j + k) // 2
            if e > qcap:
                continue
            term = ring.monomial({qv: e, wv: j, hv: k}, (-1) ** (j + k))
            term = term * _pochhammer(ring, k, qv).geom_inverse()
            term = term * _pochhammer(ring, j, qv).geom_inverse()
            total = total + term
    return total


def _pochhammer(ring: SeriesRing, k: int, qv: str) -> TruncatedSeries:
    """(q)_k = prod_{i=1..k} (1 - q^i); the empty product for k = 0."""
    out = ring.one()
    for i in range(1, k + 1):
        out = out * (ring.one() - ring.monomial({qv: i}))
    return out


def polyomino_series_via_l(
    ring: SeriesRing, qv: str = "q", wv: str = "w", hv: str = "h"
) -> TruncatedSeries:
    """q*w*h * L(qw, qh) / L(w, h), the closed-form route to the counts."""
    ell = l_series(ring, qv, wv, hv)
    twisted = ell.absorb_into(qv, (wv, hv))
    return ring.monomial({qv: 1, wv: 1, hv: 1}) * twisted * ell.geom_inverse()


# ---------------------------------------------------------------------------
# boundary configurations: direct enumeration vs closed forms


def boundary_series_direct(
    mmax: int, nmax: int, ring: SeriesRing
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Sum of x^xpara y^ypara w^m h^n over positive (respectively negative)
    boundary configurations, found shape by shape from the boundary sinks."""
    plus: dict[tuple[int, ...], int] = {}
    minus: dict[tuple[int, ...], int] = {}
    ix, iy = ring._index("x"), ring._index("y")
    iw, ih = ring._index("w"), ring._index("h")
    for m in range(1, mmax + 1):
        for n in range(1, nmax + 1):
            for u in enumerate_parking_sorted(GraphShape(m, n)).configs:
                bnd = boundary_sets(u)
                for acc, sinks in ((plus, bnd.s_plus), (minus, bnd.s_minus)):
                    for s in sinks:
                        v = u.with_sink(s)
                        key = [0] * len(ring.variables)
                        key[ix] = xpara(v)
                        key[iy] = ypara(v)
                        key[iw] = m
                        key[ih] = n
                        acc[tuple(key)] = acc.get(tuple(key), 0) + 1
    return ring.from_coeffs(plus), ring.from_coeffs(minus)


def boundary_series_closed(ring: SeriesRing) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The same two series from the polyomino decomposition of boundary
    pairs."""
    one = ring.one()
    w, h = ring.var("w"), ring.var("h")
    hx = ring.monomial({"h": 1, "x": 1})
    hw = ring.monomial({"h": 1, "w": 1})
    xw = ring.monomial({"x": 1, "w": 1})
    px = polyomino_series(PolyominoWeights("x"), ring)
    py = polyomino_series(PolyominoWeights("y"), ring)
    pxt = polyomino_series(PolyominoWeights("x", height_offset=1), ring)
    pyt = polyomino_series(PolyominoWeights("y", height_offset=-1), ring)

    minus_den = (one - w) * (one - h - w - px - py)
    minus = px * py * minus_den.geom_inverse()

    plus_num = (
        (one - hx - w) * hw
        + (w - h) * pxt * pyt
        + (one - hx - w + xw) * h * pyt
        - hw * pxt
    )
    plus_den = (one - w) * (one - w - hx - pyt - pxt)
    plus = plus_num * plus_den.geom_inverse()
    return plus, minus


# ---------------------------------------------------------------------------
# the main generating-function identity


@dataclass(frozen=True)
class GfReport:
    """Outcome of a coefficientwise comparison of two series."""

    ok: bool
    entries_checked: int
    mismatch_exponents: dict[str, int] | None = None
    lhs_value: int | None = None
    rhs_value: int | None = None

    def describe(self) -> str:
        if self.ok:
            return f"PASS ({self.entries_checked} coefficients compared)"
        return (
            f"FAIL at {self.mismatch_exponents}: "
            f"lhs={self.lhs_value} rhs={self.rhs_value}"
        )


def compare_series(lhs: TruncatedSeries, rhs: TruncatedSeries) -> GfReport:
    if lhs.ring != rhs.ring:
        raise SandpileError("compare_series: rings differ")
    keys = sorted(set(lhs.coeffs) | set(rhs.coeffs), key=lambda k: (sum(k), k))
    names = lhs.ring.variables
    for key in keys:
        lv, rv = lhs.coeffs.get(key, 0), rhs.coeffs.get(key, 0)
        if lv != rv:
            return GfReport(False, len(keys), dict(zip(names, key)), lv, rv)
    return GfReport(True, len(keys))


def family_series(mmax: int, nmax: int, ring: SeriesRing) -> TruncatedSeries:
    """Sum over shapes of the xpara/ypara table times w^m h^n (the left-hand
    side of the main identity, exact for all w,h exponents within caps)."""
    total = ring.zero()
    for m in range(1, mmax + 1):
        for n in range(1, nmax + 1):
            table = xy_table(GraphShape(m, n), ring)
            total = total + table * ring.monomial({"w": m, "h": n})
    return total


def gf_closed_form(ring: SeriesRing) -> TruncatedSeries:
    """(1-xy)(hw - P(x)P(y)) / ((1-x)(1-y)(1-h-w-P(x)-P(y)))."""
    one = ring.one()
    x, y, w, h = ring.var("x"), ring.var("y"), ring.var("w"), ring.var("h")
    px = polyomino_series(PolyominoWeights("x"), ring)
    py = polyomino_series(PolyominoWeights("y"), ring)
    numer = (one - x * y) * (h * w - px * py)
    denom = (one - x) * (one - y) * (one - h - w - px - py)
    return numer * denom.geom_inverse()


def verify_gf(mmax: int, nmax: int, cap_x: int, cap_y: int) -> GfReport:
    """Compare the enumerated family series against the closed form on every
    coefficient with w-exponent <= mmax, h-exponent <= nmax and x/y exponents
    within the caps."""
    ring = SeriesRing(("x", "y", "w", "h"), (cap_x, cap_y, mmax, nmax))
    return compare_series(family_series(mmax, nmax, ring), gf_closed_form(ring))


# ---------------------------------------------------------------------------
# CSV dumps in the table layouts used throughout


def degree_rank_csv(table: dict[tuple[int, int], int], degree_window: tuple[int, int]) -> str:
    lo, hi = degree_window
    ranks = sorted({r for _, r in table})
    lines = ["r\\d," + ",".join(str(d) for d in range(lo, hi + 1))]
    for r in ranks:
        row = [str(table.get((d, r), 0)) for d in range(lo, hi + 1)]
        lines.append(f"{r}," + ",".join(row))
    return "\n".join(lines) + "\n"


def xy_csv(series: TruncatedSeries) -> str:
    ring = series.ring
    cap_x = ring.caps[ring._index("x")]
    cap_y = ring.caps[ring._index("y")]
    lines = ["y\\x," + ",".join(str(x) for x in range(cap_x + 1))]
    for yv in range(cap_y + 1):
        row = [str(series.coefficient({"x": xv, "y": yv})) for xv in range(cap_x + 1)]
        lines.append(f"{yv}," + ",".join(row))
    return "\n".join(lines) + "\n"
