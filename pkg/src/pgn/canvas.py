"""Canvases: finite or eventually-periodic switch-point data for n-systems.

A canvas is an ordered list of rows, each a strictly increasing tuple of
positive rationals.  Consecutive rows share all but one coordinate: one
coordinate (at position k in the old row) is removed and a strictly larger
one (at position l in the new row) is inserted.  A periodic canvas appends
one witness row equal to rho times the first period row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import InputError, PgnError, fmt, parse_point, rat
from . import nsystem


@dataclass(frozen=True)
class Canvas:
    n: int
    points: tuple[tuple[Fraction, ...], ...]
    mesh: Fraction | None = None
    # (prefix_len, rho) when the tail of `points` is one period plus a witness row
    periodic: tuple[int, Fraction] | None = None


@dataclass
class CanvasReport:
    ok: bool
    condition: str | None = None
    index: int | None = None
    message: str | None = None
    transitions: list[tuple[int, int]] | None = None

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok}
        if not self.ok:
            out["condition"] = self.condition
            out["index"] = self.index
            out["message"] = self.message
        if self.transitions is not None:
            out["transitions"] = [list(t) for t in self.transitions]
        return out


def canvas_from_json(obj) -> Canvas:
    if not isinstance(obj, dict) or "points" not in obj or "n" not in obj:
        raise InputError("canvas JSON needs keys 'n' and 'points'")
    n = obj["n"]
    if not isinstance(n, int) or n < 2:
        raise InputError(f"bad dimension n={n!r}")
    points = tuple(parse_point(row, n) for row in obj["points"])
    mesh = rat(obj["mesh"]) if obj.get("mesh") is not None else None
    periodic = None
    if obj.get("periodic") is not None:
        per = obj["periodic"]
        if not isinstance(per, dict) or "rho" not in per:
            raise InputError("periodic block needs key 'rho'")
        prefix_len = per.get("prefix_len", 0)
        if not isinstance(prefix_len, int) or prefix_len < 0:
            raise InputError(f"bad prefix_len {prefix_len!r}")
        periodic = (prefix_len, rat(per["rho"]))
    return Canvas(n=n, points=points, mesh=mesh, periodic=periodic)


def canvas_to_json(c: Canvas) -> dict:
    out: dict = {"n": c.n, "points": [[fmt(v) for v in row] for row in c.points]}
    if c.mesh is not None:
        out["mesh"] = fmt(c.mesh)
    if c.periodic is not None:
        out["periodic"] = {"prefix_len": c.periodic[0], "rho": fmt(c.periodic[1])}
    return out


def _row_transition(prev, nxt):
    """The unique (k, l): coordinate k of prev is replaced by coordinate l of nxt.

    Returns None when the rows do not differ in exactly one coordinate or the
    replacement is not strictly larger.
    """
    removed = set(prev) - set(nxt)
    inserted = set(nxt) - set(prev)
    if len(removed) != 1 or len(inserted) != 1:
        return None
    (rem,) = removed
    (ins,) = inserted
    if rem >= ins:
        return None
    return (prev.index(rem) + 1, nxt.index(ins) + 1)


def validate(c: Canvas, strict: bool = True) -> CanvasReport:
    """Check conditions (C1)-(C3), mesh alignment, and periodic closure.

    strict=True demands k_i < l_i at interior rows (canvas); strict=False
    allows k_i = l_i (pre-canvas).  The report carries the first violated
    condition and the row index (0-based), plus the transitions when defined.
    """
    pts = c.points
    if len(pts) < 2:
        raise InputError("canvas needs at least 2 rows")
    for row in pts:
        if len(row) != c.n:
            raise InputError(f"row of length {len(row)} in a {c.n}-canvas")

    def fail(cond, i, msg):
        return CanvasReport(ok=False, condition=cond, index=i, message=msg)

    for i, row in enumerate(pts):
        if row[0] <= 0:
            return fail("C1", i, f"row {i} has a nonpositive coordinate")
        if any(row[j] >= row[j + 1] for j in range(c.n - 1)):
            return fail("C1", i, f"row {i} is not strictly increasing")
        if c.mesh is not None and any(v % c.mesh != 0 for v in row):
            return fail("mesh", i, f"row {i} not aligned to mesh {fmt(c.mesh)}")

    transitions: list[tuple[int, int]] = []
    for i in range(len(pts) - 1):
        tr = _row_transition(pts[i], pts[i + 1])
        if tr is None:
            return fail("C2", i, f"rows {i},{i + 1} do not differ by one raised coordinate")
        transitions.append(tr)

    # (C3) at interior row i: coordinate l arrives (from transition i-1) and
    # coordinate k leaves (transition i); a canvas needs k < l, a pre-canvas k <= l.
    for i in range(1, len(pts) - 1):
        k = transitions[i][0]
        l = transitions[i - 1][1]
        if k > l or (strict and k == l):
            return fail("C3", i, f"row {i} has k={k}, l={l}")

    if c.periodic is not None:
        p, rho = c.periodic
        if rho <= 1:
            return fail("periodic", None, f"ratio rho={fmt(rho)} must exceed 1")
        if p > len(pts) - 2:
            return fail("periodic", p, "empty period")
        witness = pts[-1]
        start = pts[p]
        if witness != tuple(rho * v for v in start):
            return fail("periodic", len(pts) - 1, "witness row is not rho times the period start")
        # slope condition at the seam: the period start repeats scaled, so its
        # outgoing k must not exceed the l that the wrap transition arrives on
        k_seam = transitions[p][0]
        l_seam = transitions[-1][1]
        if k_seam > l_seam or (strict and k_seam == l_seam):
            return fail("periodic", len(pts) - 1, f"seam has k={k_seam}, l={l_seam}")

    return CanvasReport(ok=True, transitions=transitions)


def _require_precanvas(c: Canvas) -> list[tuple[int, int]]:
    rep = validate(c, strict=False)
    if not rep.ok:
        raise PgnError(f"invalid pre-canvas: {rep.message}")
    return rep.transitions


def switch_numbers(c: Canvas) -> list[Fraction]:
    _require_precanvas(c)
    return [sum(row) for row in c.points]


def reduce(c: Canvas) -> Canvas:
    """Delete interior rows where the rising coordinate just passes through.

    A row with k_i = l_i adds no division point; removing all such rows leaves
    a strict canvas compiling to the same system.  The period start of a
    periodic canvas is kept as an anchor even when its seam is smooth.
    """
    transitions = _require_precanvas(c)
    pts = list(c.points)
    keep = [True] * len(pts)
    protected = {0, len(pts) - 1}
    if c.periodic is not None:
        protected.add(c.periodic[0])
    for i in range(1, len(pts) - 1):
        if i in protected:
            continue
        if transitions[i][0] == transitions[i - 1][1]:
            keep[i] = False
    if all(keep):
        return c
    new_pts = tuple(p for p, k in zip(pts, keep) if k)
    periodic = c.periodic
    if periodic is not None:
        # prefix rows can only disappear before the (protected) period start
        dropped_before = sum(1 for i in range(periodic[0]) if not keep[i])
        periodic = (periodic[0] - dropped_before, periodic[1])
    return Canvas(n=c.n, points=new_pts, mesh=c.mesh, periodic=periodic)


def _segment_events(row, k, l):
    """Division events on [q_i, q_{i+1}): the switch at q_i plus the crossings."""
    q = sum(row)
    events = [nsystem.Event(q, tuple(row), k)]
    base = list(row)
    riser = base.pop(k - 1)
    for j in range(k + 1, l + 1):
        hit = row[j - 1]
        vals = sorted(base + [hit])
        events.append(nsystem.Event(q + hit - riser, tuple(vals), j))
    return events


def build_system(c: Canvas) -> nsystem.NSystem:
    """Compile a pre-canvas into the n-system it describes.

    Finite canvases give a system on [q_1, q_s]; periodic ones give a
    self-similar system on [q_1, oo) storing one fundamental period.
    """
    c = reduce(c)
    transitions = _require_precanvas(c)
    pts = c.points
    events: list[nsystem.Event] = []
    for i in range(len(pts) - 1):
        k_i, l_next = transitions[i]
        events.extend(_segment_events(pts[i], k_i, l_next))

    if c.periodic is None:
        last_q = sum(pts[-1])
        events.append(nsystem.Event(last_q, tuple(pts[-1]), None))
        return nsystem.NSystem(
            n=c.n, lo=events[0].q, hi=last_q, events=tuple(events),
            rho=None, period_start=None, mesh=c.mesh)

    p, rho = c.periodic
    witness = pts[-1]
    start = pts[p]
    if witness != tuple(rho * v for v in start):
        raise PgnError("not self-similarly closable")
    k_seam = transitions[p][0]
    l_seam = transitions[-1][1]
    if k_seam > l_seam:
        raise PgnError("not self-similarly closable")
    mesh = c.mesh if (c.mesh is not None and rho.denominator == 1) else None
    return nsystem.NSystem(
        n=c.n, lo=events[0].q, hi=None, events=tuple(events),
        rho=rho, period_start=sum(start), mesh=mesh)


def from_system(s: nsystem.NSystem) -> Canvas:
    """Recover the canvas of a finite system: its boundary and switch rows."""
    if s.hi is None:
        raise PgnError("canvas recovery needs a bounded domain")
    rows = [d.value for d in nsystem.division_data(s) if d.kind in ("boundary", "switch")]
    return Canvas(n=s.n, points=tuple(rows), mesh=s.mesh, periodic=None)
