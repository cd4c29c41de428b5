"""Exact rational scalars, simplex points, and planar hull utilities.

Everything in this module is exact: inputs are Fractions (or strings that
parse to Fractions) and outputs are Fractions.  Floats are rejected at the
door so that rounding can never silently corrupt a downstream invariant.
"""

from __future__ import annotations

import decimal
from fractions import Fraction
from typing import Iterable, Sequence

TOOL_VERSION = "0.1.0"


class PgnError(ValueError):
    """Base class for all domain errors raised by this package."""


class InputError(PgnError):
    """Malformed input: bad JSON shape, unparsable rational, wrong dimension."""


def rat(value) -> Fraction:
    """Parse a rational from an int, a Fraction, or a string "p/q" or "p"."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise InputError(f"refusing float {value!r}: exact rational required")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational from {value!r}") from exc
    raise InputError(f"cannot parse rational from {value!r}")


def fmt(x: Fraction) -> str:
    """Format a rational as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def dec12(x) -> str:
    """Decimal rendering with 12 significant digits, for human-facing reports."""
    if isinstance(x, float):
        d = decimal.Decimal(repr(x))
    else:
        f = Fraction(x)
        with decimal.localcontext() as ctx:
            ctx.prec = 12
            d = decimal.Decimal(f.numerator) / decimal.Decimal(f.denominator)
    return str(d)


def parse_point(seq, n: int | None = None) -> tuple[Fraction, ...]:
    if not isinstance(seq, (list, tuple)):
        raise InputError(f"expected a list of rationals, got {seq!r}")
    pt = tuple(rat(v) for v in seq)
    if n is not None and len(pt) != n:
        raise InputError(f"expected {n} coordinates, got {len(pt)}")
    return pt


def fmt_point(p: Sequence[Fraction]) -> list[str]:
    return [fmt(v) for v in p]


def phi_sort(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Sort coordinates in nondecreasing order."""
    return tuple(sorted(p))


def comp_inf_sup(points: Iterable[Sequence[Fraction]]):
    """Componentwise infimum and supremum of a finite nonempty point set."""
    pts = [tuple(p) for p in points]
    if not pts:
        raise InputError("empty set has no inf")
    dim = len(pts[0])
    for p in pts:
        if len(p) != dim:
            raise InputError("points of mixed dimension")
    lo = tuple(min(p[j] for p in pts) for j in range(dim))
    hi = tuple(max(p[j] for p in pts) for j in range(dim))
    return lo, hi


# ---------------------------------------------------------------------------
# Geometry on the plane x1 + x2 + x3 = 1.
#
# The chart (u, v) = (x2 + x3/2, x3) is an affine bijection from that plane
# onto R^2 with positive determinant, so counterclockwise orientation in the
# chart agrees with counterclockwise orientation on the plane as seen from
# the all-positive side.

def chart(p: Sequence[Fraction]) -> tuple[Fraction, Fraction]:
    return (p[1] + Fraction(p[2], 2), p[2])


def unchart(u: Fraction, v: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    x3 = v
    x2 = u - Fraction(v, 2)
    return (1 - x2 - x3, x2, x3)


def _check_on_plane(p) -> tuple[Fraction, ...]:
    pt = tuple(Fraction(v) for v in p)
    if len(pt) != 3:
        raise InputError(f"expected 3 coordinates, got {len(pt)}")
    if sum(pt) != 1:
        raise InputError("point not on the plane x1+x2+x3=1")
    return pt


def cross(o, a, b) -> Fraction:
    """Orientation of the chart triangle (o, a, b): >0 for a left turn."""
    ou, ov = chart(o)
    au, av = chart(a)
    bu, bv = chart(b)
    return (au - ou) * (bv - ov) - (av - ov) * (bu - ou)


def hull2(points: Iterable[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Convex hull of points on the plane x1+x2+x3=1.

    Returns the extreme points in counterclockwise order (collinear interior
    points removed), starting at the point whose chart image is lexicographically
    smallest.  Degenerate inputs return fewer than 3 points.
    """
    pts = [_check_on_plane(p) for p in points]
    if not pts:
        raise InputError("empty set has no hull")
    uniq = sorted(set(pts), key=chart)
    if len(uniq) <= 2:
        return uniq
    lower: list[tuple[Fraction, ...]] = []
    for p in uniq:
        while len(lower) > 1 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[Fraction, ...]] = []
    for p in reversed(uniq):
        while len(upper) > 1 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        # all points collinear: keep the two chart-extreme ones
        return [uniq[0], uniq[-1]]
    return hull


def point_in_hull(x, hull: Sequence[Sequence[Fraction]]) -> bool:
    """Membership in the convex hull (boundary counts as inside).

    ``hull`` must be the output of :func:`hull2`, or any CCW vertex list;
    lists of length 1 and 2 are handled as a point and a segment.
    """
    x = _check_on_plane(x)
    if len(hull) == 1:
        return tuple(hull[0]) == x
    if len(hull) == 2:
        return seg_param(hull[0], hull[1], x) is not None and cross(hull[0], hull[1], x) == 0
    m = len(hull)
    for i in range(m):
        if cross(hull[i], hull[(i + 1) % m], x) < 0:
            return False
    return True


def seg_param(p, q, x):
    """Exact parameter t with x = p + t*(q - p), or None if x is off the line.

    The caller checks the range of t; values outside [0, 1] are returned as is.
    """
    pu, pv = chart(p)
    qu, qv = chart(q)
    xu, xv = chart(x)
    du, dv = qu - pu, qv - pv
    if du == 0 and dv == 0:
        return Fraction(0) if (xu, xv) == (pu, pv) else None
    if du != 0:
        t = Fraction(xu - pu, du)
    else:
        t = Fraction(xv - pv, dv)
    if pu + t * du != xu or pv + t * dv != xv:
        return None
    return t


def on_segment(p, q, x) -> bool:
    t = seg_param(p, q, x)
    return t is not None and 0 <= t <= 1


def line_intersect(p, a, q, b):
    """Intersection of line(p, a) and line(q, b) on the plane, or None if parallel."""
    pu, pv = chart(p)
    au, av = chart(a)
    qu, qv = chart(q)
    bu, bv = chart(b)
    d1u, d1v = au - pu, av - pv
    d2u, d2v = bu - qu, bv - qv
    den = d1u * d2v - d1v * d2u
    if den == 0:
        return None
    t = ((qu - pu) * d2v - (qv - pv) * d2u) / den
    return unchart(pu + t * d1u, pv + t * d1v)


def linf(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise InputError("points of mixed dimension")
    return max(abs(x - y) for x, y in zip(a, b))


def set_dist(E: Iterable[Sequence[Fraction]], F: Iterable[Sequence[Fraction]]) -> Fraction:
    """Two-sided Hausdorff distance for the sup norm, exact over finite sets."""
    Ep = [tuple(p) for p in E]
    Fp = [tuple(p) for p in F]
    if not Ep or not Fp:
        raise InputError("set distance needs two nonempty sets")
    d1 = max(min(linf(e, f) for f in Fp) for e in Ep)
    d2 = max(min(linf(e, f) for e in Ep) for f in Fp)
    return max(d1, d2)
