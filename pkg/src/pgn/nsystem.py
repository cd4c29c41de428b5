"""n-systems: piecewise-linear maps P = (P_1,...,P_n) with sorted components.

An n-system on [u, v] satisfies, at every q:
  (S1) 0 <= P_1(q) <= ... <= P_n(q) and sum P_j(q) = q,
  (S2) between consecutive division numbers exactly one sorted component
       rises with slope 1, the others stay constant,
  (S3) if the rising component index jumps up from l to k > l at an interior
       division number then P_l(q) = ... = P_k(q) there.

The stored representation keeps every division event (switches and crossings)
so evaluation is segment-local.  A self-similar system stores one fundamental
period [u, rho*u) plus the ratio; an eventually self-similar one additionally
keeps its transient events before period_start.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import InputError, PgnError, fmt, fmt_point, parse_point, rat


@dataclass(frozen=True)
class Event:
    q: Fraction
    value: tuple[Fraction, ...]
    right_rise: int | None


@dataclass(frozen=True)
class NSystem:
    n: int
    lo: Fraction
    hi: Fraction | None
    events: tuple[Event, ...]
    rho: Fraction | None = None
    period_start: Fraction | None = None
    mesh: Fraction | None = None

    def __post_init__(self):
        if self.rho is not None and self.period_start is None:
            object.__setattr__(self, "period_start", self.lo)

    @property
    def selfsimilar(self) -> bool:
        return self.rho is not None

    def left_rise(self, i: int) -> int | None:
        """Index of the sorted component rising into event i, if any."""
        if i > 0:
            return self.events[i - 1].right_rise
        if self.selfsimilar and self.period_start == self.lo:
            return self.events[-1].right_rise
        return None

    def _reduce(self, q: Fraction) -> tuple[Fraction, Fraction]:
        """Map q into the stored window, returning (reduced q, scale)."""
        scale = Fraction(1)
        if self.selfsimilar:
            top = self.rho * self.period_start
            while q >= top:
                q /= self.rho
                scale *= self.rho
        return q, scale

    def eval(self, q) -> tuple[Fraction, ...]:
        q = rat(q)
        if q < self.lo:
            raise PgnError(f"q={fmt(q)} below the domain start {fmt(self.lo)}")
        if self.hi is not None and q > self.hi:
            raise PgnError(f"q={fmt(q)} above the domain end {fmt(self.hi)}")
        q, scale = self._reduce(q)
        qs = [e.q for e in self.events]
        i = bisect.bisect_right(qs, q) - 1
        ev = self.events[i]
        if ev.right_rise is None or q == ev.q:
            vals = ev.value
        else:
            v = list(ev.value)
            v[ev.right_rise - 1] += q - ev.q
            vals = tuple(v)
        if scale == 1:
            return tuple(vals)
        return tuple(scale * x for x in vals)


@dataclass
class SystemReport:
    ok: bool
    errors: list[str]
    proper: bool | None = None

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok, "errors": list(self.errors)}
        if self.proper is not None:
            out["proper"] = self.proper
        return out


def _advance(value: Sequence[Fraction], rise: int, dq: Fraction) -> list[Fraction]:
    v = list(value)
    v[rise - 1] += dq
    return v


def validate_system(s: NSystem) -> SystemReport:
    errors: list[str] = []

    def fail(msg):
        errors.append(msg)
        return SystemReport(ok=False, errors=errors)

    if s.n < 2:
        return fail(f"dimension {s.n} too small")
    if not s.events:
        return fail("no events")
    for i, ev in enumerate(s.events):
        if len(ev.value) != s.n:
            return fail(f"event {i} has {len(ev.value)} coordinates")
        if ev.right_rise is not None and not (1 <= ev.right_rise <= s.n):
            return fail(f"event {i} has rise index {ev.right_rise}")
    qs = [e.q for e in s.events]
    if any(qs[i] >= qs[i + 1] for i in range(len(qs) - 1)):
        return fail("event abscissas not strictly increasing")
    if qs[0] != s.lo:
        return fail("first event not at the domain start")

    if s.hi is not None:
        if s.selfsimilar:
            return fail("bounded domain with a similarity ratio")
        if qs[-1] != s.hi:
            return fail("last event not at the domain end")
        if s.events[-1].right_rise is not None:
            return fail("domain end must have no right rise")
        if any(e.right_rise is None for e in s.events[:-1]):
            return fail("interior event without a rise index")
    else:
        if not s.selfsimilar:
            return fail("unbounded domain without a similarity ratio")
        if s.rho <= 1:
            return fail(f"ratio {fmt(s.rho)} must exceed 1")
        if any(e.right_rise is None for e in s.events):
            return fail("self-similar events must all carry a rise index")
        if s.period_start < s.lo or s.period_start not in qs:
            return fail("period start is not an event")
        if qs[-1] >= s.rho * s.period_start:
            return fail("events spill past one fundamental period")

    for i, ev in enumerate(s.events):
        if ev.value[0] < 0:
            return fail(f"(S1) negative coordinate at event {i}")
        if any(ev.value[j] > ev.value[j + 1] for j in range(s.n - 1)):
            return fail(f"(S1) unsorted value at event {i}")
        if sum(ev.value) != ev.q:
            return fail(f"(S1) coordinates at event {i} do not sum to q")
        if s.mesh is not None and any(x % s.mesh != 0 for x in ev.value):
            return fail(f"value at event {i} not aligned to mesh {fmt(s.mesh)}")

    for i in range(len(s.events) - 1):
        a, b = s.events[i], s.events[i + 1]
        arr = _advance(a.value, a.right_rise, b.q - a.q)
        if any(arr[j] > arr[j + 1] for j in range(s.n - 1)):
            return fail(f"(S2) missed crossing between events {i} and {i + 1}")
        if tuple(arr) != b.value:
            return fail(f"(S2) events {i} and {i + 1} are not joined by a unit rise")

    if s.selfsimilar:
        last = s.events[-1]
        top = s.rho * s.period_start
        arr = _advance(last.value, last.right_rise, top - last.q)
        if any(arr[j] > arr[j + 1] for j in range(s.n - 1)):
            return fail("(S2) missed crossing before the period end")
        start_value = s.events[qs.index(s.period_start)].value
        if tuple(arr) != tuple(s.rho * x for x in start_value):
            return fail("period end does not rescale to the period start")

    for i, ev in enumerate(s.events):
        k = ev.right_rise
        l = s.left_rise(i)
        if k is None or l is None or k <= l:
            continue
        vals = ev.value
        if any(vals[j] != vals[j + 1] for j in range(l - 1, k - 1)):
            return fail(f"(S3) rise jumps {l}->{k} at event {i} without coincidence")

    proper = None
    if s.selfsimilar:
        start_value = s.events[qs.index(s.period_start)].value
        proper = start_value[0] > 0
    return SystemReport(ok=True, errors=[], proper=proper)


def require_valid(s: NSystem) -> SystemReport:
    rep = validate_system(s)
    if not rep.ok:
        raise PgnError(f"invalid system: {rep.errors[0]}")
    return rep


@dataclass(frozen=True)
class DivisionDatum:
    q: Fraction
    value: tuple[Fraction, ...]
    kind: str  # switch | division | boundary


def division_data(s: NSystem) -> list[DivisionDatum]:
    """Classified division events; one fundamental period for self-similar systems."""
    require_valid(s)
    out: list[DivisionDatum] = []
    m = len(s.events)
    for i, ev in enumerate(s.events):
        if s.hi is not None and (i == 0 or i == m - 1):
            out.append(DivisionDatum(ev.q, ev.value, "boundary"))
            continue
        if s.hi is None and i == 0 and s.period_start > s.lo:
            out.append(DivisionDatum(ev.q, ev.value, "boundary"))
            continue
        k = ev.right_rise
        l = s.left_rise(i)
        if k == l:
            continue  # smooth anchor, not a division number
        out.append(DivisionDatum(ev.q, ev.value, "switch" if k < l else "division"))
    return out


def switch_numbers(s: NSystem) -> list[Fraction]:
    return [d.q for d in division_data(s) if d.kind in ("boundary", "switch")]


def restrict(s: NSystem, a, b) -> NSystem:
    """The same map on the subinterval [a, b] as a bounded system."""
    a, b = rat(a), rat(b)
    if a >= b:
        raise InputError("empty restriction window")
    if a < s.lo or (s.hi is not None and b > s.hi):
        raise PgnError("window leaves the domain")
    pts: list[Event] = []
    if s.selfsimilar:
        u = s.period_start
        for ev in s.events:
            if ev.q < u and a <= ev.q < b:
                pts.append(ev)
        period = [e for e in s.events if e.q >= u]
        scale = Fraction(1)
        while scale * s.rho * u <= a:
            scale *= s.rho
        while scale * u < b:
            for ev in period:
                q = ev.q * scale
                if a <= q < b:
                    pts.append(Event(q, tuple(scale * x for x in ev.value), ev.right_rise))
            scale *= s.rho
    else:
        pts = [ev for ev in s.events if a <= ev.q < b]
    if not pts or pts[0].q != a:
        first = Event(a, s.eval(a), _rise_at(s, a))
        pts.insert(0, first)
    pts.append(Event(b, s.eval(b), None))
    return NSystem(n=s.n, lo=a, hi=b, events=tuple(pts), mesh=s.mesh)


def _rise_at(s: NSystem, q: Fraction) -> int:
    """Rise index of the segment covering q (to the right of q)."""
    q, _ = s._reduce(rat(q))
    qs = [e.q for e in s.events]
    i = bisect.bisect_right(qs, q) - 1
    r = s.events[i].right_rise
    if r is None:
        raise PgnError("no rise at the domain end")
    return r


def rescale(s: NSystem, rho) -> NSystem:
    rho = rat(rho)
    if rho <= 0:
        raise PgnError("scale factor must be positive")
    events = tuple(
        Event(e.q * rho, tuple(rho * x for x in e.value), e.right_rise) for e in s.events
    )
    return NSystem(
        n=s.n,
        lo=s.lo * rho,
        hi=None if s.hi is None else s.hi * rho,
        events=events,
        rho=s.rho,
        period_start=None if s.period_start is None else s.period_start * rho,
        mesh=None if s.mesh is None else s.mesh * rho,
    )


def glue(p: NSystem, r: NSystem) -> NSystem:
    """Concatenate p on [u,v] with r on [v,w] into one system on [u,w]."""
    if p.hi is None or r.hi is None:
        raise InputError("glue needs bounded systems")
    if p.n != r.n:
        raise InputError("dimension mismatch")
    require_valid(p)
    require_valid(r)
    if p.hi != r.lo:
        raise PgnError("domains do not meet")
    if p.events[-1].value != r.events[0].value:
        raise PgnError("values disagree at the gluing point")
    l = p.events[-2].right_rise
    k = r.events[0].right_rise
    if k > l:
        raise PgnError("slope condition fails at the gluing point")
    if k == l:
        events = p.events[:-1] + r.events[1:]
    else:
        events = p.events[:-1] + r.events
    mesh = p.mesh if p.mesh == r.mesh else None
    return NSystem(n=p.n, lo=p.lo, hi=r.hi, events=events, mesh=mesh)


def selfsim_extend(p: NSystem, rho=None) -> NSystem:
    """Extend a bounded system with P(v) = (v/u) P(u) to a self-similar one."""
    if p.hi is None:
        raise InputError("already unbounded")
    require_valid(p)
    u, v = p.lo, p.hi
    if u <= 0:
        raise PgnError("period must start at a positive q")
    ratio = v / u
    if rho is not None and rat(rho) != ratio:
        raise PgnError(f"claimed ratio {fmt(rat(rho))} contradicts v/u = {fmt(ratio)}")
    first, last = p.events[0], p.events[-1]
    if last.value != tuple(ratio * x for x in first.value):
        raise PgnError("period endpoints are not proportional")
    k = first.right_rise
    l = p.events[-2].right_rise
    if k > l:
        raise PgnError("slope condition fails at the seam")
    mesh = p.mesh if (p.mesh is not None and ratio.denominator == 1) else None
    return NSystem(n=p.n, lo=u, hi=None, events=p.events[:-1], rho=ratio,
                   period_start=u, mesh=mesh)


# ---------------------------------------------------------------------------
# Power transform: the single floating-point corner of the package.

@dataclass(frozen=True)
class FloatEvent:
    sigma: float
    value: tuple[float, ...]
    right_rise: int | None


@dataclass(frozen=True)
class FloatNSystem:
    n: int
    lo: float
    hi: float | None
    events: tuple[FloatEvent, ...]
    rho: float | None
    period_start: float | None
    lam: float

    def ratios(self) -> list[tuple[float, ...]]:
        return [tuple(x / e.sigma for x in e.value) for e in self.events]


def power_transform(s: NSystem, lam: float) -> FloatNSystem:
    """The n-system with division points a^lam, reparametrized accordingly.

    Raising each coordinate to a power lam in (0,1] keeps sorted order, and
    the new abscissa sigma(q) = sum_j P_j(q)^lam makes the rising component
    rise with slope 1 again, so the rise indices carry over unchanged.
    """
    if not isinstance(lam, (int, float)) or not 0 < lam <= 1:
        raise PgnError("exponent must lie in (0,1]")
    require_valid(s)
    for i, ev in enumerate(s.events):
        if ev.value[0] == 0 and i > 0:
            raise PgnError("zero coordinate away from the domain start")
    fevents = []
    for ev in s.events:
        vals = tuple(float(x) ** lam for x in ev.value)
        fevents.append(FloatEvent(sum(vals), vals, ev.right_rise))
    hi = fevents[-1].sigma if s.hi is not None else None
    rho = float(s.rho) ** lam if s.rho is not None else None
    period_start = None
    if s.selfsimilar:
        idx = [e.q for e in s.events].index(s.period_start)
        period_start = fevents[idx].sigma
    return FloatNSystem(n=s.n, lo=fevents[0].sigma, hi=hi, events=tuple(fevents),
                        rho=rho, period_start=period_start, lam=lam)


def validate_float_system(fs: FloatNSystem, tol: float = 1e-9) -> SystemReport:
    errors: list[str] = []
    evs = fs.events
    for i, ev in enumerate(evs):
        if any(ev.value[j] > ev.value[j + 1] + tol for j in range(fs.n - 1)):
            errors.append(f"(S1) unsorted value at event {i}")
        if abs(sum(ev.value) - ev.sigma) > tol * max(1.0, abs(ev.sigma)):
            errors.append(f"(S1) sum mismatch at event {i}")
    for i in range(len(evs) - 1):
        a, b = evs[i], evs[i + 1]
        arr = list(a.value)
        arr[a.right_rise - 1] += b.sigma - a.sigma
        if any(abs(arr[j] - b.value[j]) > tol * max(1.0, abs(b.value[j])) for j in range(fs.n)):
            errors.append(f"(S2) rise mismatch between events {i} and {i + 1}")
    if fs.rho is not None and evs:
        last = evs[-1]
        top = fs.rho * fs.period_start
        arr = list(last.value)
        arr[last.right_rise - 1] += top - last.sigma
        start = next(
            (e for e in evs if abs(e.sigma - fs.period_start) <= tol * max(1.0, fs.period_start)),
            None,
        )
        if start is None:
            errors.append("period start is not an event")
        else:
            tgt = [fs.rho * x for x in start.value]
            if any(abs(a - t) > tol * max(1.0, abs(t)) for a, t in zip(arr, tgt)):
                errors.append("(S2) period end does not rescale to the period start")
    return SystemReport(ok=not errors, errors=errors)


# ---------------------------------------------------------------------------
# JSON round trip.

def system_to_json(s: NSystem) -> dict:
    out: dict = {
        "n": s.n,
        "domain": [fmt(s.lo), None if s.hi is None else fmt(s.hi)],
        "events": [
            {"q": fmt(e.q), "value": fmt_point(e.value), "right_rise": e.right_rise}
            for e in s.events
        ],
    }
    if s.mesh is not None:
        out["mesh"] = fmt(s.mesh)
    if s.rho is not None:
        ss = {"rho": fmt(s.rho)}
        if s.period_start != s.lo:
            ss["period_start"] = fmt(s.period_start)
        out["selfsimilar"] = ss
    return out


def system_from_json(obj) -> NSystem:
    if not isinstance(obj, dict) or "events" not in obj or "n" not in obj:
        raise InputError("system JSON needs keys 'n' and 'events'")
    n = obj["n"]
    if not isinstance(n, int) or n < 2:
        raise InputError(f"bad dimension n={n!r}")
    dom = obj.get("domain")
    if not isinstance(dom, list) or len(dom) != 2:
        raise InputError("domain must be a [lo, hi] pair")
    lo = rat(dom[0])
    hi = None if dom[1] is None else rat(dom[1])
    events = []
    for i, e in enumerate(obj["events"]):
        if not isinstance(e, dict) or "q" not in e or "value" not in e:
            raise InputError(f"event {i} needs keys 'q' and 'value'")
        rr = e.get("right_rise")
        if rr is not None and not isinstance(rr, int):
            raise InputError(f"event {i} has a non-integer rise index")
        events.append(Event(rat(e["q"]), parse_point(e["value"], n), rr))
    if not events:
        raise InputError("system JSON needs at least one event")
    mesh = rat(obj["mesh"]) if obj.get("mesh") is not None else None
    rho = None
    period_start = None
    if obj.get("selfsimilar") is not None:
        ss = obj["selfsimilar"]
        if not isinstance(ss, dict) or "rho" not in ss:
            raise InputError("selfsimilar block needs key 'rho'")
        rho = rat(ss["rho"])
        if ss.get("period_start") is not None:
            period_start = rat(ss["period_start"])
    return NSystem(n=n, lo=lo, hi=hi, events=tuple(events), rho=rho,
                   period_start=period_start, mesh=mesh)


# ---------------------------------------------------------------------------
# Graph export.

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"]


def _graph_rows(s: NSystem, qmax: Fraction):
    """(q, value, kind) at all division numbers up to qmax, plus the end row."""
    rows = []
    if s.hi is not None:
        for d in division_data(s):
            if d.q <= qmax:
                rows.append((d.q, d.value, d.kind))
    else:
        data = division_data(s)
        transient = [d for d in data if d.q < s.period_start]
        period = [d for d in data if d.q >= s.period_start]
        for d in transient:
            if d.q < qmax:
                rows.append((d.q, d.value, d.kind))
        scale = Fraction(1)
        while scale * s.period_start < qmax:
            for d in period:
                q = d.q * scale
                if q < qmax:
                    rows.append((q, tuple(scale * x for x in d.value), d.kind))
            scale *= s.rho
    if not rows or rows[-1][0] != qmax:
        rows.append((qmax, s.eval(qmax), "boundary"))
    return rows


def _nice_step(span: float) -> int:
    """Smallest step of the form {1,2,5}*10^k giving at most 10 ticks."""
    base = 1
    while True:
        for mult in (1, 2, 5):
            step = base * mult
            if span / step <= 10:
                return step
        base *= 10


def export_graph(s: NSystem, qmax, format: str = "svg") -> str:
    qmax = rat(qmax)
    if qmax < s.lo or (s.hi is not None and qmax > s.hi):
        raise PgnError("qmax outside the domain")
    rows = _graph_rows(s, qmax)
    if format == "csv":
        header = "q," + ",".join(f"P{j + 1}" for j in range(s.n))
        lines = [header]
        for q, value, _ in rows:
            lines.append(",".join([fmt(q)] + [fmt(x) for x in value]))
        return "\n".join(lines) + "\n"
    if format != "svg":
        raise InputError(f"unknown format {format!r}")

    width, height, margin = 800, 500, 10
    span_q = qmax - s.lo
    if span_q == 0:
        span_q = Fraction(1)
    ymax = max(max(v) for _, v, _ in rows)
    if ymax == 0:
        ymax = Fraction(1)

    def xm(q):
        return margin + float((q - s.lo) / span_q) * (width - 2 * margin)

    def ym(v):
        return height - margin - float(v / ymax) * (height - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    # dashed verticals at switch numbers
    for q, _, kind in rows:
        if kind in ("boundary", "switch"):
            x = xm(q)
            parts.append(
                f'<line x1="{x:.2f}" y1="{margin}" x2="{x:.2f}" y2="{height - margin}" '
                f'stroke="#999999" stroke-width="1" stroke-dasharray="4 3"/>'
            )
    # axes
    parts.append(
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" '
        f'stroke="black" stroke-width="1"/>'
    )
    # integer tick labels
    xstep = _nice_step(float(span_q))
    q0 = int(s.lo) + (0 if Fraction(int(s.lo)) == s.lo else 1)
    q0 += (-q0) % xstep
    qt = q0
    while Fraction(qt) <= qmax:
        x = xm(Fraction(qt))
        parts.append(
            f'<line x1="{x:.2f}" y1="{height - margin}" x2="{x:.2f}" '
            f'y2="{height - margin - 4}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{height - margin - 6}" font-size="10" '
            f'text-anchor="middle">{qt}</text>'
        )
        qt += xstep
    ystep = _nice_step(float(ymax))
    yt = 0
    while Fraction(yt) <= ymax:
        y = ym(Fraction(yt))
        parts.append(
            f'<line x1="{margin}" y1="{y:.2f}" x2="{margin + 4}" y2="{y:.2f}" '
            f'stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{margin + 6}" y="{y + 3:.2f}" font-size="10">{yt}</text>'
        )
        yt += ystep
    # one polyline per sorted component
    for j in range(s.n):
        pts = " ".join(f"{xm(q):.2f},{ym(v[j]):.2f}" for q, v, _ in rows)
        color = _PALETTE[j % len(_PALETTE)]
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
