"""Exact truncated multivariate power series.

Plain power series over the integers with an independent exponent cap per
variable; every coefficient is an exact Python int.  Monomials beyond a cap
are silently discarded by the arithmetic, so within the caps all operations
agree with the untruncated ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class SeriesError(ValueError):
    """Cap mismatch, bad constant term, or out-of-cap query."""


@dataclass(frozen=True)
class SeriesRing:
    """A fixed variable tuple with per-variable exponent caps."""

    variables: tuple[str, ...]
    caps: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.variables) != len(self.caps):
            raise SeriesError("one cap per variable required")
        if any(c < 0 for c in self.caps):
            raise SeriesError("caps must be non-negative")

    def zero(self) -> "TruncatedSeries":
        return TruncatedSeries(self, {})

    def one(self) -> "TruncatedSeries":
        return self.monomial({})

    def monomial(self, exponents: dict[str, int], coeff: int = 1) -> "TruncatedSeries":
        exps = [0] * len(self.variables)
        for name, e in exponents.items():
            exps[self._index(name)] = e
        key = tuple(exps)
        if any(e < 0 for e in key):
            raise SeriesError(f"negative exponent in {exponents}")
        if coeff == 0 or any(e > c for e, c in zip(key, self.caps)):
            return self.zero()
        return TruncatedSeries(self, {key: coeff})

    def var(self, name: str) -> "TruncatedSeries":
        return self.monomial({name: 1})

    def from_coeffs(self, coeffs: dict[tuple[int, ...], int]) -> "TruncatedSeries":
        kept = {}
        for key, c in coeffs.items():
            if c == 0:
                continue
            if any(e < 0 for e in key):
                raise SeriesError(f"negative exponent tuple {key}")
            if all(e <= cap for e, cap in zip(key, self.caps)):
                kept[key] = c
        return TruncatedSeries(self, kept)

    def _index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise SeriesError(f"unknown variable {name!r}") from None


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Sparse exponent-tuple -> coefficient map under a ring's caps.

    Instances are immutable; arithmetic returns fresh series.  Zero
    coefficients are never stored, which makes equality structural.
    """

    ring: SeriesRing
    coeffs: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, tuple(sorted(self.coeffs.items()))))

    def _same_ring(self, other: "TruncatedSeries") -> None:
        if self.ring != other.ring:
            raise SeriesError("series live in different rings (caps mismatch)")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_ring(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return TruncatedSeries(self.ring, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scaled(self, factor: int) -> "TruncatedSeries":
        if factor == 0:
            return self.ring.zero()
        return TruncatedSeries(self.ring, {k: factor * c for k, c in self.coeffs.items()})

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_ring(other)
        caps = self.ring.caps
        out: dict[tuple[int, ...], int] = {}
        small, large = self.coeffs, other.coeffs
        if len(small) > len(large):
            small, large = large, small
        large_items = list(large.items())
        for k1, c1 in small.items():
            for k2, c2 in large_items:
                key = tuple(map(sum, zip(k1, k2)))
                if any(e > cap for e, cap in zip(key, caps)):
                    continue
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return TruncatedSeries(self.ring, out)

    def geom_inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse within the caps; the constant term must be 1.

        Solved coefficient-by-coefficient in graded order from g*f = 1, which
        costs one convolution rather than a geometric-series iteration.
        """
        zero_key = (0,) * len(self.ring.variables)
        if self.coeffs.get(zero_key, 0) != 1:
            raise SeriesError("geom_inverse requires constant term 1")
        tail = {k: c for k, c in self.coeffs.items() if k != zero_key}
        out = {zero_key: 1}
        for key in _graded_keys(self.ring.caps):
            if key == zero_key:
                continue
            acc = 0
            for tkey, tc in tail.items():
                rest = tuple(e - t for e, t in zip(key, tkey))
                if any(e < 0 for e in rest):
                    continue
                g = out.get(rest, 0)
                if g:
                    acc += tc * g
            if acc:
                out[key] = -acc
        return TruncatedSeries(self.ring, out)

    def coefficient(self, exponents: dict[str, int]) -> int:
        exps = [0] * len(self.ring.variables)
        for name, e in exponents.items():
            exps[self.ring._index(name)] = e
        key = tuple(exps)
        if any(e > cap or e < 0 for e, cap in zip(key, self.ring.caps)):
            raise SeriesError(f"exponents {exponents} outside caps {self.ring.caps}")
        return self.coeffs.get(key, 0)

    def absorb_into(self, target: str, sources: tuple[str, ...]) -> "TruncatedSeries":
        """Substitute v -> target*v for each source variable: every source
        exponent is added onto the target's (used for L(qw, qh))."""
        t = self.ring._index(target)
        src = [self.ring._index(s) for s in sources]
        caps = self.ring.caps
        out: dict[tuple[int, ...], int] = {}
        for key, c in self.coeffs.items():
            lifted = list(key)
            lifted[t] += sum(key[i] for i in src)
            if lifted[t] > caps[t]:
                continue
            out[tuple(lifted)] = out.get(tuple(lifted), 0) + c
        return self.ring.from_coeffs(out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def dump(self) -> str:
        """Deterministic text form: one 'v^e ...: coeff' line per monomial in
        lexicographic exponent order (golden-file friendly)."""
        names = self.ring.variables
        lines = []
        for key in sorted(self.coeffs):
            mono = " ".join(f"{v}^{e}" for v, e in zip(names, key))
            lines.append(f"{mono}: {self.coeffs[key]}")
        return "\n".join(lines)


def _graded_keys(caps: tuple[int, ...]):
    """All exponent tuples within caps, in increasing total degree."""
    keys = [()]
    for cap in caps:
        keys = [k + (e,) for k in keys for e in range(cap + 1)]
    keys.sort(key=sum)
    return keys
