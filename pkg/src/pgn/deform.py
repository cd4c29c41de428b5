"""Deformations of rigid systems: extension to a target endpoint value,
translation, window adjustment, and self-similarization.

The extension raises one coordinate per pass, m = n down to 1, splicing a
plateau into the parameter axis; the returned ReparamMap A sends each new
abscissa back to the old one so that P_new(q) and P_old(A(q)) can be
compared coordinate by coordinate.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction

from .core import InputError, PgnError, fmt, parse_point, rat, set_dist
from .nsystem import Event, NSystem, division_data, require_valid, restrict, selfsim_extend


@dataclass(frozen=True)
class ReparamMap:
    """Piecewise-linear nondecreasing map given by interpolation breakpoints."""

    breakpoints: tuple[tuple[Fraction, Fraction], ...]

    def __call__(self, q) -> Fraction:
        q = rat(q)
        bp = self.breakpoints
        if q < bp[0][0] or q > bp[-1][0]:
            raise PgnError(f"q={fmt(q)} outside [{fmt(bp[0][0])}, {fmt(bp[-1][0])}]")
        qs = [p[0] for p in bp]
        i = bisect.bisect_right(qs, q) - 1
        if i == len(bp) - 1:
            return bp[-1][1]
        (q0, y0), (q1, y1) = bp[i], bp[i + 1]
        return y0 + (q - q0) * (y1 - y0) / (q1 - q0)

    @property
    def lo(self) -> Fraction:
        return self.breakpoints[0][0]

    @property
    def hi(self) -> Fraction:
        return self.breakpoints[-1][0]


def _prune(points: list[tuple[Fraction, Fraction]]) -> tuple[tuple[Fraction, Fraction], ...]:
    out = [points[0]]
    for p in points[1:]:
        if p[0] == out[-1][0]:
            continue
        out.append(p)
    # drop interior points that lie on the segment through their neighbors
    i = 1
    while i < len(out) - 1:
        (a, fa), (b, fb), (c, fc) = out[i - 1], out[i], out[i + 1]
        if (fb - fa) * (c - a) == (fc - fa) * (b - a):
            out.pop(i)
        else:
            i += 1
    return tuple(out)


def _preimage_span(f: ReparamMap, y: Fraction) -> list[Fraction]:
    """Endpoints of {q : f(q) = y} (empty when y is outside the range)."""
    bp = f.breakpoints
    if y < bp[0][1] or y > bp[-1][1]:
        return []
    hits: list[Fraction] = []
    for (q0, y0), (q1, y1) in zip(bp, bp[1:]):
        if y0 == y1:
            if y == y0:
                hits.extend((q0, q1))
        elif y0 <= y <= y1:
            hits.append(q0 + (y - y0) * (q1 - q0) / (y1 - y0))
    return [min(hits), max(hits)] if hits else []


def _compose(maps: list[ReparamMap], lo: Fraction, hi: Fraction) -> ReparamMap:
    """Composite maps[0] o maps[1] o ... o maps[-1] on [lo, hi]."""
    if not maps:
        return ReparamMap(((lo, lo), (hi, hi)))
    cands = {lo, hi}
    for j, f in enumerate(maps):
        spots = {q for q, _ in f.breakpoints}
        # pull the breakpoints of stage j back through the later-applied stages
        for g in maps[j + 1:]:
            pulled: set[Fraction] = set()
            for y in spots:
                pulled.update(_preimage_span(g, y))
            spots = pulled
        cands.update(spots)

    def value(q: Fraction) -> Fraction:
        for f in reversed(maps):
            q = f(q)
        return q

    pts = [(q, value(q)) for q in sorted(c for c in cands if lo <= c <= hi)]
    return ReparamMap(_prune(pts))


def _raise_pass(s: NSystem, m: int, delta: Fraction, cm: Fraction):
    """Raise the coordinate at sorted position m by delta at the domain end."""
    events = list(s.events)
    tail = events[-1].value[m - 1:]
    r = len(events) - 1
    while r > 0 and events[r - 1].value[m - 1:] == tail:
        r -= 1
    qr = events[r].q
    left = events[r - 1].right_rise if r > 0 else None
    shifted = []
    for ev in events[r:]:
        v = list(ev.value)
        v[m - 1] = cm
        shifted.append(Event(ev.q + delta, tuple(v), ev.right_rise))
    new_events = events[:r]
    if r == 0 or left != m:
        new_events.append(Event(qr, events[r].value, m))
    new_events.extend(shifted)
    amap = ReparamMap(_prune([
        (s.lo, s.lo), (qr, qr), (qr + delta, qr), (s.hi + delta, s.hi),
    ]))
    out = NSystem(n=s.n, lo=s.lo, hi=s.hi + delta, events=tuple(new_events), mesh=s.mesh)
    return out, amap


def extend_stages(p: NSystem, c) -> list[tuple[int, NSystem, ReparamMap]]:
    """One (m, system, map) triple per raising pass, m = n down to 1.

    A pass with nothing to raise keeps the previous system and an identity map.
    """
    if p.hi is None:
        raise InputError("bounded system required")
    if p.mesh is None:
        raise InputError("rigid system required")
    require_valid(p)
    c = parse_point(c, p.n)
    if c[0] <= 0 or any(c[j] >= c[j + 1] for j in range(p.n - 1)):
        raise PgnError("target vector is not strictly increasing and positive")
    if any(x % p.mesh != 0 for x in c):
        raise PgnError(f"target vector not aligned to mesh {fmt(p.mesh)}")
    end = p.events[-1].value
    for j in range(p.n):
        if c[j] < end[j]:
            raise PgnError(f"target coordinate {j + 1} below the endpoint value")

    cur = p
    stages: list[tuple[int, NSystem, ReparamMap]] = []
    for m in range(p.n, 0, -1):
        delta = c[m - 1] - cur.events[-1].value[m - 1]
        if delta == 0:
            amap = ReparamMap(((cur.lo, cur.lo), (cur.hi, cur.hi)))
        else:
            cur, amap = _raise_pass(cur, m, delta, c[m - 1])
        stages.append((m, cur, amap))
    return stages


def extend_to(p: NSystem, c) -> tuple[NSystem, ReparamMap]:
    """Extend a rigid bounded system so that its final value becomes c.

    The new domain end is w = sum(c); the map A of the second return value
    satisfies P_new(q) >= P_old(A(q)) coordinatewise, with excess at most
    c - P_old(end), at every division number of the output.
    """
    stages = extend_stages(p, c)
    cur = stages[-1][1]
    maps = [amap for _, _, amap in stages]
    return cur, _compose(maps, cur.lo, cur.hi)


def extension_bounds(p: NSystem, ext: NSystem, amap: ReparamMap, c=None) -> dict:
    """Check the extension guarantees at every division number of ext.

    Verified clauses: the two systems agree (and A(q) = q) while the top
    coordinate stays below its old endpoint value; the new endpoint value is
    exactly c; and the excess P_ext(q) - P_old(A(q)) sits in [0, c - P_old(v)]
    coordinatewise.  Returns the observed extrema together with the verdict.
    """
    end = p.events[-1].value
    if c is None:
        c = ext.events[-1].value
    else:
        c = parse_point(c, p.n)
    bound = tuple(ci - ei for ci, ei in zip(c, end))
    worst = [Fraction(0)] * p.n
    agree_failures = 0
    excess_ok = True
    qs = [d.q for d in division_data(ext)]
    if ext.hi is not None and ext.hi not in qs:
        qs.append(ext.hi)
    for q in qs:
        aq = amap(q)
        old = p.eval(aq)
        new = ext.eval(q)
        for j in range(p.n):
            exc = new[j] - old[j]
            if exc < 0 or exc > bound[j]:
                excess_ok = False
            if exc > worst[j]:
                worst[j] = exc
        if q <= p.hi and p.eval(q)[p.n - 1] < end[p.n - 1]:
            if aq != q or new != p.eval(q):
                agree_failures += 1
    end_exact = ext.eval(ext.hi) == c
    return {
        "target": c,
        "old_domain": (p.lo, p.hi),
        "new_domain": (ext.lo, ext.hi),
        "agree_ok": agree_failures == 0,
        "end_exact": end_exact,
        "excess_ok": excess_ok,
        "excess_max": tuple(worst),
        "excess_bound": bound,
        "ok": agree_failures == 0 and end_exact and excess_ok,
    }


def translate_by(r: NSystem, b) -> NSystem:
    """The system q -> b*e + R(q - n*b) on [u + n*b, v + n*b]."""
    if r.hi is None:
        raise InputError("bounded system required")
    if r.mesh is None:
        raise InputError("rigid system required")
    b = rat(b)
    if b < 0:
        raise PgnError("translation must be nonnegative")
    if b % r.mesh != 0:
        raise PgnError(f"translation not aligned to mesh {fmt(r.mesh)}")
    require_valid(r)
    if b == 0:
        return r
    nb = r.n * b
    events = tuple(
        Event(e.q + nb, tuple(x + b for x in e.value), e.right_rise) for e in r.events
    )
    return NSystem(n=r.n, lo=r.lo + nb, hi=r.hi + nb, events=events, mesh=r.mesh)


def _ratio(q: Fraction, value) -> tuple[Fraction, ...]:
    return tuple(x / q for x in value)


def _slope1_points(r: NSystem, limit: int):
    """Division numbers with right slope e_1, as (q, ratio), in increasing q.

    Self-similar systems yield an unbounded stream (each period scaled by rho);
    bounded ones stop at the domain end, which is included without a slope
    requirement so that it can serve as a window endpoint.
    """
    count = 0
    if r.hi is not None:
        for d in division_data(r):
            ev_rise = next(e.right_rise for e in r.events if e.q == d.q)
            if ev_rise == 1 or d.q == r.hi:
                yield d.q, _ratio(d.q, d.value)
                count += 1
                if count >= limit:
                    return
    else:
        data = [d for d in division_data(r) if d.q >= r.period_start]
        picks = []
        for d in data:
            ev_rise = next(e.right_rise for e in r.events if e.q == d.q)
            if ev_rise == 1:
                picks.append((d.q, _ratio(d.q, d.value)))
        if not picks:
            return
        scale = Fraction(1)
        while count < limit:
            for q, ratio in picks:
                yield q * scale, ratio
                count += 1
                if count >= limit:
                    return
            scale *= r.rho


SCAN_LIMIT = 10 ** 4


def adjust_segment(r: NSystem, x, eps1, eps2, u_hint=None, v_hint=None):
    """Cut a window where the ratio q^{-1}P(q) starts at x, translated so the
    start ratio moves strictly inside the simplex.

    Returns (system on [u,v], report).  The report carries the verified
    postconditions: right slope e_1 at u, the two-sided bound on u^{-1}P(u),
    the 2*eps2 bound on v^{-1}P(v), and the ratio-set drift bound.
    """
    from .exponents import f_set

    if r.mesh is None:
        raise InputError("rigid system required")
    rep = require_valid(r)
    if r.selfsimilar and rep.proper is False:
        raise PgnError("proper system required")
    x = parse_point(x, r.n)
    eps1, eps2 = rat(eps1), rat(eps2)
    if eps1 <= 0 or eps2 <= 0:
        raise PgnError("tolerances must be positive")
    u_hint = rat(u_hint) if u_hint is not None else None
    v_hint = rat(v_hint) if v_hint is not None else None

    candidates = list(_slope1_points(r, SCAN_LIMIT))
    if not any(ratio == x for _, ratio in candidates):
        raise PgnError("x is not a slope-e1 ratio of the system")

    n = r.n
    delta = r.mesh
    scanned = 0
    for ui, (u0, ru) in enumerate(candidates):
        if ru != x or (u_hint is not None and u0 < u_hint):
            continue
        b = -(-2 * eps1 * u0 // delta) * delta
        if b > 3 * eps1 * u0:
            continue  # u0 too small for the mesh to fit between 2 and 3 eps1 u0
        # the start ratio bound depends on u0 and b only
        u = u0 + n * b
        pu = tuple((y + b) / u for y in r.eval(u0))
        cond_ii = all(
            x[j] + eps1 <= (1 + 3 * n * eps1) * pu[j] and pu[j] <= x[j] + 4 * eps1
            for j in range(n)
        )
        if not cond_ii:
            continue
        for v0, rv in candidates[ui + 1:]:
            scanned += 1
            if scanned > SCAN_LIMIT:
                raise PgnError("horizon exhausted")
            if v_hint is not None and v0 < v_hint:
                continue
            if any(abs(rv[j] - x[j]) > eps2 for j in range(n)):
                continue
            v = v0 + n * b
            pv = tuple((y + b) / v for y in r.eval(v0))
            if any(abs(pv[j] - x[j]) > 2 * eps2 for j in range(n)):
                continue  # window end still feels the translation; push v0 out
            out = translate_by(restrict(r, u0, v0), b)
            cond_i = out.events[0].right_rise == 1
            src = f_set(r, window=(u0, v0)).vertices
            dst = f_set(out, window=(u, v)).vertices
            drift = set_dist(src, dst)
            cond_iv = drift <= 4 * (n + 1) * eps1
            if cond_i and cond_iv:
                report = {
                    "x": x, "u0": u0, "v0": v0, "b": b, "u": u, "v": v,
                    "eps1": eps1, "eps2": eps2,
                    "start_ratio": pu, "end_ratio": pv,
                    "start_slope_e1": cond_i,
                    "start_ratio_bound_ok": cond_ii,
                    "end_ratio_bound_ok": True,
                    "drift": drift,
                    "drift_bound": 4 * (n + 1) * eps1,
                    "drift_bound_ok": cond_iv,
                }
                return out, report
    raise PgnError("horizon exhausted")


def selfsimilarize(r: NSystem, eps):
    """Produce a self-similar rigid system whose ratio set tracks r's within eps.

    Follows the window-adjust / extend / wrap pipeline; the output ratio is
    an integer m >= 2 and the achieved set distance is verified exactly and
    reported.
    """
    from .exponents import f_set

    eps = rat(eps)
    if eps <= 0:
        raise PgnError("eps must be positive")
    if r.mesh is None:
        raise InputError("rigid system required")
    rep = require_valid(r)
    n = r.n
    if r.selfsimilar:
        if rep.proper is False:
            raise PgnError("proper system required")
        if r.rho.denominator == 1 and r.rho >= 2:
            report = {"m": r.rho, "dist": Fraction(0), "eps": eps, "short_circuit": True}
            return r, report

    eps1 = min(Fraction(1), eps) / (16 * n * n * (n + 1))
    eps2 = eps1 / 2

    first = next(_slope1_points(r, 1), None)
    if first is None:
        raise PgnError("no division number with right slope e1")
    x = first[1]

    u_hint = None
    v_hint = None
    last_err = None
    for attempt in range(64):
        seg, seg_report = adjust_segment(r, x, eps1, eps2, u_hint=u_hint, v_hint=v_hint)
        u, v = seg.lo, seg.hi
        u_hint, v_hint = seg_report["u0"], seg_report["v0"]
        if v <= n * u:
            v_hint = v_hint * 2
            last_err = "window ratio v/u too small"
            continue
        m = -((-(1 + 3 * n * eps1) * v) // u)  # ceil((1+3n eps1) v/u)
        if m > (1 + 4 * n * eps1) * v / u:
            v_hint = v_hint * 2
            last_err = "ceiling overshoots the m bound"
            continue
        pu = seg.events[0].value
        pv = seg.events[-1].value
        c = tuple(m * y for y in pu)
        if any(c[j] < pv[j] for j in range(n)) or any(c[j] > pv[j] + 8 * n * eps1 * v for j in range(n)):
            v_hint = v_hint * 2
            last_err = "target c falls outside the admissible band"
            continue
        ext, _ = extend_to(seg, c)
        out = selfsim_extend(ext)
        if r.selfsimilar:
            src = f_set(r).vertices
        else:
            src = f_set(r, window=(seg_report["u0"], seg_report["v0"])).vertices
        dist = set_dist(src, f_set(out).vertices)
        if dist > eps:
            v_hint = v_hint * 2
            last_err = f"achieved distance {fmt(dist)} exceeds eps"
            continue
        report = dict(seg_report)
        report.update({
            "m": Fraction(m), "w": out.rho * out.lo, "dist": dist, "eps": eps,
            "short_circuit": False,
        })
        return out, report
    raise PgnError(f"selfsimilarize failed to stabilize: {last_err}")
