"""Closed chains and elementary paths in the sorted 3-simplex.

The normalized trajectory q -> P(q)/q of a self-similar non-degenerate
3-system traces a closed polygonal chain inside the triangle with
vertices f1 = (0,1/2,1/2), f2 = (1/3,1/3,1/3), f3 = e3.  Every edge of
such a chain points at one of the unit points e1, e2, e3, and the walk
alternates between the two medians

    L  = {0 < x1 = x2 < x3}   (from f2 to f3) and
    L* = {0 < x1 < x2 = x3}   (from f2 to f1).

This module converts between chains and 3-systems, joins chains, splits
a chain into elementary six-vertex paths, and evaluates the closed-form
componentwise extrema of a path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import canvas as _canvas
from .core import (
    InputError,
    PgnError,
    fmt_point,
    hull2,
    line_intersect,
    on_segment,
    parse_point,
    point_in_hull,
    seg_param,
)
from .nsystem import NSystem, division_data, require_valid

E1 = (Fraction(1), Fraction(0), Fraction(0))
E2 = (Fraction(0), Fraction(1), Fraction(0))
E3 = (Fraction(0), Fraction(0), Fraction(1))
F1 = (Fraction(0), Fraction(1, 2), Fraction(1, 2))
F2 = (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
F3 = E3
_UNITS = (E1, E2, E3)


def classify(p) -> str:
    """One of f2 | on-L | on-L* | interior | outside (sorted triangle only)."""
    x1, x2, x3 = p
    if x1 + x2 + x3 != 1 or not (0 <= x1 <= x2 <= x3):
        return "outside"
    if x1 == x2 == x3:
        return "f2"
    if x1 > 0 and x1 == x2:
        return "on-L"
    if x1 > 0 and x2 == x3:
        return "on-L*"
    if x1 > 0:
        return "interior"
    return "outside"


def pi1(x):
    """Project onto the closed lower median with center e1."""
    s = 1 + x[1] - x[0]
    return (x[1] / s, x[1] / s, x[2] / s)


def pi3(x):
    """Project onto the closed upper median with center e3 (x != e3)."""
    s = 1 - x[2] + x[1]
    if s == 0:
        raise InputError("projection with center e3 undefined at e3")
    return (x[0] / s, x[1] / s, x[1] / s)


@dataclass(frozen=True)
class ClosedChain:
    vertices: tuple[tuple[Fraction, ...], ...]


def chain_from_json(obj) -> ClosedChain:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise InputError("chain JSON needs key 'vertices'")
    return ClosedChain(tuple(parse_point(v, 3) for v in obj["vertices"]))


def chain_to_json(c: ClosedChain) -> dict:
    return {"vertices": [fmt_point(v) for v in c.vertices]}


@dataclass(frozen=True)
class ChainReport:
    ok: bool
    errors: tuple[str, ...]
    classes: tuple[str, ...]

    def to_json(self) -> dict:
        return {"ok": self.ok, "errors": list(self.errors),
                "classes": list(self.classes)}


def _edge_dir(p, q):
    """Index j with q strictly between p and e_j, or None."""
    for j, e in enumerate(_UNITS, start=1):
        t = seg_param(p, e, q)
        if t is not None and 0 < t < 1:
            return j
    return None


def validate_chain(c: ClosedChain) -> ChainReport:
    verts = c.vertices
    if len(verts) < 3:
        raise InputError("a closed chain needs at least three vertices")
    for v in verts:
        if len(v) != 3:
            raise InputError("chain vertices must have three coordinates")
    classes = tuple(classify(v) for v in verts)
    errors = []
    for i, cls in enumerate(classes):
        if cls == "f2":
            errors.append(f"vertex {i}: sits at the center point of the triangle")
        elif cls == "outside":
            errors.append(f"vertex {i}: not on a median or in the open sorted triangle")
    if errors:
        return ChainReport(False, tuple(errors), classes)
    m = len(verts)
    dirs = []
    for i in range(m):
        d = _edge_dir(verts[i], verts[(i + 1) % m])
        if d is None:
            errors.append(f"vertex {(i + 1) % m}: not strictly between vertex {i} "
                          "and a unit point")
        dirs.append(d)
    if errors:
        return ChainReport(False, tuple(errors), classes)
    for i in range(m):
        cls, out = classes[i], dirs[i]
        succ = classes[(i + 1) % m]
        inc = dirs[i - 1]
        if cls == "on-L":
            if out != 2:
                errors.append(f"vertex {i}: a lower-median vertex must move toward e2")
        elif cls == "on-L*":
            if out != 3:
                errors.append(f"vertex {i}: an upper-median vertex must move toward e3")
            elif succ != "interior":
                errors.append(f"vertex {i}: the move toward e3 must land in the interior")
        else:
            if out == 3:
                errors.append(f"vertex {i}: interior vertices never move toward e3")
            elif out == 1 and succ != "on-L":
                errors.append(f"vertex {i}: the move toward e1 must land on the lower median")
            elif inc == 2 and out != 1:
                errors.append(f"vertex {i}: after arriving toward e2 the walk must turn toward e1")
    if not errors:
        if not any(classes[i] == "on-L" for i in range(m)):
            errors.append("the chain never meets the lower median")
        elif not any(classes[i] == "on-L" and classes[(i + 1) % m] == "on-L*"
                     for i in range(m)):
            errors.append("the chain has no direct ascent from the lower to the upper median")
    return ChainReport(not errors, tuple(errors), classes)


def require_valid_chain(c: ClosedChain) -> ChainReport:
    rep = validate_chain(c)
    if not rep.ok:
        raise PgnError(f"invalid chain: {rep.errors[0]}")
    return rep


def canonicalize_chain(c: ClosedChain) -> ClosedChain:
    """Rotate so the lower-median vertex nearest f2 comes first (ties: lex)."""
    verts = c.vertices
    best = None
    for i, v in enumerate(verts):
        if classify(v) == "on-L" and (best is None or v[0] > verts[best][0]):
            best = i
    if best is None:
        raise PgnError("chain has no vertex on the lower median")
    top = verts[best][0]
    rotations = [verts[i:] + verts[:i] for i, v in enumerate(verts)
                 if classify(v) == "on-L" and v[0] == top]
    return ClosedChain(min(rotations))


def chain_from_system(s: NSystem) -> ClosedChain:
    """Ratios at the division numbers of one period, in period order."""
    if s.n != 3:
        raise InputError(f"chains need n=3, got n={s.n}")
    require_valid(s)
    if not s.selfsimilar:
        raise PgnError("chain needs a self-similar system")
    period = [d for d in division_data(s) if d.q >= s.period_start]
    for d in period:
        if d.kind == "switch":
            a, b, x = d.value
            if not (0 < a < b < x):
                raise PgnError("degenerate system: a switch value lacks three "
                               "distinct positive coordinates")
    chain = ClosedChain(tuple(tuple(x / d.q for x in d.value) for d in period))
    require_valid_chain(chain)
    return chain


def system_from_chain(c: ClosedChain) -> NSystem:
    """Periodic canvas whose system traces the chain; integer rows, mesh 1."""
    require_valid_chain(c)
    canon = canonicalize_chain(c).vertices
    m = len(canon)
    start = 0
    while classify(canon[start]) != "interior":
        start += 1
    verts = canon[start:] + canon[:start]
    lams = []
    for i in range(m):
        p, q = verts[i], verts[(i + 1) % m]
        j = _edge_dir(p, q)
        co = 0 if j != 1 else 1
        lam = q[co] / p[co]
        if not 0 < lam < 1:
            raise PgnError("invalid chain: an edge does not shrink toward its unit point")
        lams.append(lam)
    prod = math.prod(lams)
    rho = 1 / prod
    if rho <= 1:
        raise PgnError("similarity ratio of a closed chain must exceed 1")
    acc = Fraction(1)
    rows = [verts[0]]
    for i in range(1, m):
        acc *= lams[i - 1]
        if classify(verts[i]) == "interior":
            rows.append(tuple(x / acc for x in verts[i]))
    witness = tuple(rho * x for x in rows[0])
    denom = math.lcm(*[x.denominator for r in rows + [witness] for x in r])
    pts = tuple(tuple(x * denom for x in r) for r in rows + [witness])
    cv = _canvas.Canvas(n=3, points=pts, mesh=Fraction(1), periodic=(0, rho))
    rep = _canvas.validate(cv)
    if not rep.ok:
        raise PgnError(f"chain does not compile to a canvas: {rep.message}")
    return _canvas.build_system(cv)


def _boundary_anchor(c: ClosedChain) -> ClosedChain:
    """Canonical rotation; its start always ascends directly to the upper median."""
    d = canonicalize_chain(c)
    if classify(d.vertices[1]) != "on-L*":
        raise PgnError("chain anchor does not ascend to the upper median")
    return d


def join_chains(c1: ClosedChain, c2: ClosedChain) -> ClosedChain:
    """Closed chain through all vertices of both, inside their joint hull."""
    require_valid_chain(c1)
    require_valid_chain(c2)
    d1 = _boundary_anchor(c1)
    d2 = _boundary_anchor(c2)
    if d2.vertices[0][0] > d1.vertices[0][0]:
        d1, d2 = d2, d1
    a1, s1 = d1.vertices[0], d1.vertices[1]
    a2, s2 = d2.vertices[0], d2.vertices[1]
    if a1 == a2:
        return ClosedChain(d1.vertices + d2.vertices)
    cc = line_intersect(E1, a1, a2, s2)
    cs = line_intersect(E3, s1, a2, s2)
    if cc is None or not on_segment(a2, s2, cc):
        raise PgnError("joining chains failed: the e1 line misses the second base")
    if cs is None or not on_segment(a2, s2, cs):
        raise PgnError("joining chains failed: the e3 line misses the second base")
    out = d1.vertices + (a1, s1, cs) + d2.vertices[1:] + (a2, cc)
    joined = ClosedChain(out)
    require_valid_chain(joined)
    return joined


@dataclass(frozen=True)
class ElementaryPath:
    A: tuple[Fraction, ...]
    Astar: tuple[Fraction, ...]
    Bstar: tuple[Fraction, ...]
    Cstar: tuple[Fraction, ...]
    C: tuple[Fraction, ...]
    B: tuple[Fraction, ...]

    def points(self):
        return (self.A, self.Astar, self.Bstar, self.Cstar, self.C, self.B)


_PATH_KEYS = ("A", "Astar", "Bstar", "Cstar", "C", "B")


def path_from_json(obj) -> ElementaryPath:
    if not isinstance(obj, dict) or any(k not in obj for k in _PATH_KEYS):
        raise InputError(f"path JSON needs keys {', '.join(_PATH_KEYS)}")
    return ElementaryPath(*(parse_point(obj[k], 3) for k in _PATH_KEYS))


def path_to_json(p: ElementaryPath) -> dict:
    return {k: fmt_point(v) for k, v in zip(_PATH_KEYS, p.points())}


@dataclass(frozen=True)
class PathReport:
    ok: bool
    errors: tuple[str, ...]
    strict: bool

    def to_json(self) -> dict:
        return {"ok": self.ok, "errors": list(self.errors), "strict": self.strict}


def validate_path(p: ElementaryPath) -> PathReport:
    errors = []
    for name, v in zip(_PATH_KEYS, p.points()):
        if len(v) != 3:
            raise InputError("path vertices must have three coordinates")
        x1, x2, x3 = v
        if x1 + x2 + x3 != 1 or not (0 <= x1 <= x2 <= x3):
            errors.append(f"{name}: not in the closed sorted triangle")
    if errors:
        return PathReport(False, tuple(errors), False)
    A, As, Bs, Cs, C, B = p.points()
    if A[0] != A[1]:
        errors.append("A: not on the closed lower median")
    if As[1] != As[2]:
        errors.append("Astar: not on the closed upper median")
    elif not on_segment(A, E2, As):
        errors.append("Astar: not on the segment from A toward e2")
    if Bs[1] != Bs[2]:
        errors.append("Bstar: not on the closed upper median")
    elif not on_segment(As, F1, Bs):
        errors.append("Bstar: not on the segment from Astar to f1")
    if not on_segment(Bs, E3, Cs):
        errors.append("Cstar: not on the segment from Bstar toward e3")
    if not on_segment(Cs, E2, C):
        errors.append("C: not on the segment from Cstar toward e2")
    if not on_segment(A, E3, B):
        errors.append("B: not on the segment from A toward e3")
    elif not on_segment(C, E1, B):
        errors.append("B: not on the segment from C toward e1")
    strict = (classify(A) == "on-L" and classify(B) == "on-L"
              and classify(As) == "on-L*" and classify(Bs) == "on-L*"
              and classify(Cs) == "interior" and classify(C) == "interior")
    return PathReport(not errors, tuple(errors), strict and not errors)


def require_valid_path(p: ElementaryPath) -> PathReport:
    rep = validate_path(p)
    if not rep.ok:
        raise PgnError(f"invalid path: {rep.errors[0]}")
    return rep


def path_inf_sup(p: ElementaryPath):
    """Closed-form componentwise extrema over the whole path."""
    require_valid_path(p)
    lo = (p.C[0], min(p.Cstar[1], p.B[1]), p.Astar[2])
    hi = (p.A[0], max(p.Bstar[1], p.C[1]), p.Cstar[2])
    return lo, hi


def _between(a, b, t: Fraction):
    return tuple(x + t * (y - x) for x, y in zip(a, b))


def _ladder(start, stop, steps: int, unit_line, unit_step):
    """Zigzag from start to stop along a median: interior rung, median rail.

    Rails are evenly spaced on [start, stop]; the rung before rail i sits on
    the line from unit_line through rail i, leaving rail i-1 toward unit_step.
    """
    out = []
    rails = [_between(start, stop, Fraction(i, steps)) for i in range(steps + 1)]
    for i in range(1, steps + 1):
        rung = line_intersect(unit_line, rails[i], rails[i - 1], unit_step)
        if rung is None or not on_segment(rails[i - 1], unit_step, rung):
            raise PgnError("densify rung fell outside its segment")
        out.append(rung)
        if i < steps:
            out.append(rails[i])
    return out


def _chain_from_path(p: ElementaryPath, m: int, h: int) -> ClosedChain:
    """Close a path into a chain, zigzagging along each median where needed."""
    verts = [p.A, p.Astar]
    if p.Bstar != p.Astar:
        verts.extend(_ladder(p.Astar, p.Bstar, m, E2, E3))
        verts.append(p.Bstar)
    if p.Cstar != verts[-1]:
        verts.append(p.Cstar)
    if p.C != p.Cstar:
        verts.append(p.C)
    if p.B != p.A:
        verts.append(p.B)
        verts.extend(_ladder(p.B, p.A, h, E1, E2))
    chain = ClosedChain(tuple(verts))
    require_valid_chain(chain)
    return chain


def densify_path(p: ElementaryPath, m: int = 1, h: int = 1, gap=None) -> ClosedChain:
    """Valid closed chain through the six path vertices with unchanged hull."""
    rep = validate_path(p)
    if not rep.ok or not rep.strict:
        raise PgnError("densify needs a strict elementary path")
    if p.B == p.A or p.Bstar == p.Astar:
        raise PgnError("densify needs a strict elementary path with B != A and B* != A*")
    if m < 1 or h < 1:
        raise InputError("insertion counts must be at least 1")
    target = hull2(p.points())
    span_star = p.Bstar[1] - p.Astar[1]
    span_low = p.A[0] - p.B[0]
    if gap is not None:
        g = Fraction(gap)
        if g <= 0:
            raise InputError("gap must be positive")
        me = max(m, math.ceil(span_star / g))
        he = max(h, math.ceil(span_low / g))
        chain = _chain_from_path(p, me, he)
        if hull2(chain.vertices) != target:
            raise PgnError(f"gap too large: the hull grew; retry with gap {g / 2}")
        return chain
    diffs = [abs(u[i] - v[i]) for u in p.points() for v in p.points()
             for i in range(3) if u[i] != v[i]]
    g = min(diffs) / 64
    for _ in range(24):
        me = max(m, math.ceil(span_star / g))
        he = max(h, math.ceil(span_low / g))
        chain = _chain_from_path(p, me, he)
        if hull2(chain.vertices) == target:
            return chain
        g /= 2
    raise PgnError("densify failed to keep the hull fixed at any tested gap")


def _parse_simple_chain(seg, classes):
    """Split one simple chain into its ascending and descending data."""
    astars, cstars = [], []
    j = 1
    while j + 1 < len(seg) and classes[j] == "on-L*":
        astars.append(seg[j])
        cstars.append(seg[j + 1])
        j += 2
    if not astars:
        raise PgnError("simple chain lacks an upper-median leg")
    if classes[j] == "interior":
        c_h = seg[j]
        j += 1
    else:
        c_h = cstars[-1]
    lows, cdesc = [], []
    while j < len(seg):
        if classes[j] != "on-L":
            raise PgnError("simple chain has a malformed descending leg")
        lows.append(seg[j])
        j += 1
        if j < len(seg):
            if classes[j] != "interior":
                raise PgnError("simple chain has a malformed descending leg")
            cdesc.append(seg[j])
            j += 1
    return astars, cstars, c_h, lows, cdesc


def extract_paths(c: ClosedChain) -> list[ElementaryPath]:
    """Strict elementary paths whose union spans the hull of the chain."""
    require_valid_chain(c)
    d = _boundary_anchor(c)
    verts = d.vertices
    classes = [classify(v) for v in verts]
    m = len(verts)
    a0, s0 = verts[0], verts[1]
    bounds = [i for i in range(m)
              if classes[i] == "on-L" and classes[(i + 1) % m] == "on-L*"]
    paths: list[ElementaryPath] = []
    for bi, start in enumerate(bounds):
        stop = bounds[(bi + 1) % len(bounds)]
        if stop <= start:
            stop += m
        seg = [verts[i % m] for i in range(start, stop + 1)]
        seg_classes = [classes[i % m] for i in range(start, stop + 1)]
        astars, cstars, c_h, lows, cdesc = _parse_simple_chain(seg, seg_classes)
        base = ElementaryPath(A=a0, Astar=s0, Bstar=astars[-1], Cstar=cstars[-1],
                              C=c_h, B=lows[0])
        hull0 = hull2(base.points())
        paths.append(base)
        for i in range(len(cstars) - 1):
            if point_in_hull(cstars[i], hull0):
                continue
            tip = line_intersect(E1, a0, cstars[i], astars[i + 1])
            if tip is None or not on_segment(cstars[i], astars[i + 1], tip):
                raise PgnError("path extraction lost an upper-leg vertex")
            paths.append(ElementaryPath(A=a0, Astar=s0, Bstar=astars[i],
                                        Cstar=cstars[i], C=tip, B=a0))
        for i, mid in enumerate(cdesc):
            if point_in_hull(mid, hull0):
                continue
            tip = line_intersect(E3, s0, lows[i], mid)
            if tip is None or not on_segment(lows[i], mid, tip):
                raise PgnError("path extraction lost a lower-leg vertex")
            paths.append(ElementaryPath(A=a0, Astar=s0, Bstar=s0, Cstar=tip,
                                        C=mid, B=lows[i + 1]))
    seen = set()
    unique = []
    for q in paths:
        if q.points() not in seen:
            seen.add(q.points())
            unique.append(q)
    return unique


def _xy(p, size: float, pad: float):
    px = float(p[1]) + 0.5 * float(p[2])
    py = math.sqrt(3) / 2 * float(p[2])
    return pad + px * size, pad + (math.sqrt(3) / 2) * size - py * size


def plot_chain(c: ClosedChain) -> str:
    """Deterministic SVG of the sorted triangle, its medians, and the chain."""
    size, pad = 720.0, 40.0
    width = size + 2 * pad
    height = math.sqrt(3) / 2 * size + 2 * pad
    mid12 = (Fraction(1, 2), Fraction(1, 2), Fraction(0))
    mid13 = (Fraction(1, 2), Fraction(0), Fraction(1, 2))

    def fxy(p):
        x, y = _xy(p, size, pad)
        return f"{x:.2f},{y:.2f}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>',
        f'<polygon points="{fxy(E1)} {fxy(E2)} {fxy(E3)}" fill="none" '
        'stroke="#999999" stroke-width="1"/>',
    ]
    for a, b in ((E1, F1), (E2, mid13), (E3, mid12)):
        xa, ya = _xy(a, size, pad)
        xb, yb = _xy(b, size, pad)
        lines.append(f'<line x1="{xa:.2f}" y1="{ya:.2f}" x2="{xb:.2f}" y2="{yb:.2f}" '
                     'stroke="#bbbbbb" stroke-width="1" stroke-dasharray="4 3"/>')
    for label, pt, dx, dy in (("f1", F1, 8, 4), ("f2", F2, 8, 16), ("f3", F3, 0, -8)):
        x, y = _xy(pt, size, pad)
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="#333333"/>')
        lines.append(f'<text x="{x + dx:.2f}" y="{y + dy:.2f}" font-size="16" '
                     f'font-family="sans-serif" fill="#333333">{label}</text>')
    loop = list(c.vertices) + [c.vertices[0]]
    pts = " ".join(fxy(v) for v in loop)
    lines.append(f'<polyline points="{pts}" fill="none" stroke="#1f77b4" '
                 'stroke-width="3" stroke-linejoin="round"/>')
    for v in c.vertices:
        x, y = _xy(v, size, pad)
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="#1f77b4"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
