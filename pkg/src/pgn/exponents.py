"""Ratio sets and approximation exponents of n-systems.

The ratio set F of a self-similar system is finite and exact: the points
q^{-1}P(q) over the division numbers q of one fundamental period.  All
exponent families are componentwise extrema of linear maps over that set,
so no limit is ever computed numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import InputError, PgnError, fmt, parse_point, rat
from .nsystem import NSystem, division_data, require_valid, validate_system


@dataclass(frozen=True)
class LinearMap:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.rows) < 1:
            raise InputError("linear map needs at least one row")
        width = len(self.rows[0])
        if width < 2 or any(len(r) != width for r in self.rows):
            raise InputError("linear map rows must share a width of at least 2")

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def apply(self, x) -> tuple[Fraction, ...]:
        if len(x) != self.n:
            raise InputError(f"map on {self.n} variables applied to {len(x)}")
        return tuple(sum(r[j] * x[j] for j in range(self.n)) for r in self.rows)


def linear_map_from_json(obj) -> LinearMap:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise InputError("linear map JSON needs key 'rows'")
    return LinearMap(tuple(tuple(rat(v) for v in row) for row in obj["rows"]))


def linear_map_to_json(t: LinearMap) -> dict:
    return {"rows": [[fmt(v) for v in row] for row in t.rows]}


def phi_preset(n: int) -> LinearMap:
    """The identity map: exponents of the individual sorted components."""
    return LinearMap(tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    ))


def psi_preset(n: int, upto: int | None = None) -> LinearMap:
    """Partial-sum rows T_i(x) = x_1 + ... + x_i for i = 1..upto."""
    m = n if upto is None else upto
    if not 1 <= m <= n:
        raise InputError(f"partial sums up to {m} undefined for n={n}")
    return LinearMap(tuple(
        tuple(Fraction(1 if j <= i else 0) for j in range(n)) for i in range(m)
    ))


@dataclass(frozen=True)
class FSet:
    vertices: tuple[tuple[Fraction, ...], ...]
    exact: bool
    window: tuple[Fraction, Fraction] | None = None


def _dedupe(points):
    seen = set()
    out = []
    for p in points:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return tuple(out)


def f_set(s: NSystem, window=None) -> FSet:
    """Ratios q^{-1}P(q) at division numbers: exact over one period, or windowed."""
    require_valid(s)
    if window is None:
        if not s.selfsimilar:
            raise PgnError("windowed ratios required for a system without a similarity ratio")
        data = [d for d in division_data(s) if d.q >= s.period_start]
        verts = _dedupe(tuple(x / d.q for x in d.value) for d in data)
        return FSet(vertices=verts, exact=True)
    u, v = rat(window[0]), rat(window[1])
    if u > v:
        raise InputError("empty window")
    if u < s.lo or (s.hi is not None and v > s.hi):
        raise PgnError("window leaves the domain")
    ratios = []
    if s.selfsimilar:
        data = division_data(s)
        transient = [d for d in data if d.q < s.period_start]
        period = [d for d in data if d.q >= s.period_start]
        for d in transient:
            if u <= d.q <= v:
                ratios.append(tuple(x / d.q for x in d.value))
        scale = Fraction(1)
        while scale * s.rho * s.period_start <= u:
            scale *= s.rho
        while scale * s.period_start <= v:
            for d in period:
                q = d.q * scale
                if u <= q <= v:
                    ratios.append(tuple(x / d.q for x in d.value))
            scale *= s.rho
    else:
        for d in division_data(s):
            if u <= d.q <= v:
                ratios.append(tuple(x / d.q for x in d.value))
    return FSet(vertices=_dedupe(ratios), exact=False, window=(u, v))


def mu_T(t: LinearMap, f: FSet) -> tuple[Fraction, ...]:
    """Componentwise infimum of T over the ratio set (vertices suffice)."""
    if not f.vertices:
        raise InputError("empty set has no inf")
    images = [t.apply(v) for v in f.vertices]
    return tuple(min(img[i] for img in images) for i in range(t.m))


@dataclass(frozen=True)
class SpectrumPoint6:
    lower: tuple[Fraction, Fraction, Fraction]
    upper: tuple[Fraction, Fraction, Fraction]

    def as_tuple(self) -> tuple[Fraction, ...]:
        return self.lower + self.upper

    def to_json(self) -> dict:
        return {"lower": [fmt(v) for v in self.lower],
                "upper": [fmt(v) for v in self.upper]}


def spectrum_point_from_json(obj) -> SpectrumPoint6:
    if not isinstance(obj, dict) or "lower" not in obj or "upper" not in obj:
        raise InputError("spectrum point JSON needs keys 'lower' and 'upper'")
    lower = parse_point(obj["lower"], 3)
    upper = parse_point(obj["upper"], 3)
    return SpectrumPoint6(lower=lower, upper=upper)


def six_exponents(s: NSystem) -> SpectrumPoint6:
    """The three lower and three upper component exponents of a proper
    self-similar 3-system, exact."""
    if s.n != 3:
        raise InputError(f"six exponents need n=3, got n={s.n}")
    rep = validate_system(s)
    if not rep.ok:
        raise PgnError(f"invalid system: {rep.errors[0]}")
    if not s.selfsimilar:
        raise PgnError("six exponents need a self-similar system")
    if not rep.proper:
        raise PgnError("exponents of non-proper system excluded")
    verts = f_set(s).vertices
    lower = tuple(min(v[i] for v in verts) for i in range(3))
    upper = tuple(max(v[i] for v in verts) for i in range(3))
    return SpectrumPoint6(lower=lower, upper=upper)
