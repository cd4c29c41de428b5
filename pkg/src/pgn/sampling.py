"""Seeded random generators: periodic 3-canvases, finite rigid systems,
admissible extension targets, and interior spectrum members.

Everything takes an explicit random.Random so callers control determinism.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import spectrum6
from .canvas import Canvas, build_system, validate
from .core import PgnError
from .exponents import SpectrumPoint6
from .nsystem import NSystem


def random_periodic_canvas3(rng: random.Random) -> Canvas:
    """A random strict periodic 3-canvas, valid by construction.

    Three families, each closing at ratio 2: a three-row staircase built from
    x < y < z < 2x, the two-row pattern (a, 2a, c) with 2a < c < 4a, and the
    one-row pattern (x, 2x, 4x).
    """
    kind = rng.choice(("stair", "stair", "template", "template", "double"))
    scale = rng.choice((1, 1, 1, 2, 3, 5))
    if kind == "stair":
        x = rng.randrange(3, 60)
        y, z = sorted(rng.sample(range(x + 1, 2 * x), 2))
        rows = [(x, y, z), (y, z, 2 * x), (z, 2 * x, 2 * y), (2 * x, 2 * y, 2 * z)]
    elif kind == "template":
        a = rng.randrange(1, 50)
        c = rng.randrange(2 * a + 1, 4 * a) if a > 1 else 3
        rows = [(a, 2 * a, c), (2 * a, c, 4 * a), (2 * a, 4 * a, 2 * c)]
    else:
        x = rng.randrange(1, 40)
        rows = [(x, 2 * x, 4 * x), (2 * x, 4 * x, 8 * x)]
    pts = tuple(tuple(Fraction(v * scale) for v in row) for row in rows)
    cv = Canvas(n=3, points=pts, mesh=Fraction(scale), periodic=(0, Fraction(2)))
    rep = validate(cv)
    if not rep.ok:
        raise PgnError(f"sampler produced an invalid canvas: {rep.message}")
    return cv


def random_selfsimilar3(rng: random.Random) -> NSystem:
    return build_system(random_periodic_canvas3(rng))


def _walk_step(rng: random.Random, row: tuple, max_k: int):
    """One strict transition from row: remove position k < max_k, insert a
    larger value at position l; returns (new_row, k, l) or None."""
    n = len(row)
    for _ in range(12):
        k = rng.randrange(1, min(max_k, n) + 1)
        removed = row[k - 1]
        rest = list(row)
        del rest[k - 1]
        l = rng.randrange(2, n + 1)  # keep l >= 2 so the walk never dead-ends
        lo = rest[l - 2] if l >= 2 else 0
        lo = max(lo, removed)
        hi = rest[l - 1] if l - 1 < len(rest) else None
        if hi is None:
            w = lo + rng.randrange(1, 8)
        elif hi - lo >= 2:
            w = rng.randrange(lo + 1, hi)
        else:
            continue
        new_row = tuple(sorted(rest + [w]))
        if new_row.index(w) + 1 != l:
            continue
        return new_row, k, l
    # always-legal fallback: drop the smallest, append past the end
    if max_k >= 1:
        removed = row[0]
        rest = list(row[1:])
        w = rest[-1] + rng.randrange(1, 8)
        return tuple(rest + [w]), 1, n
    return None


def random_finite_canvas(rng: random.Random, n: int, steps: int | None = None) -> Canvas:
    """A random finite strict n-canvas with integer rows (mesh 1)."""
    if steps is None:
        steps = rng.randrange(3, 8)
    vals = sorted(rng.sample(range(1, 12 * n), n))
    row = tuple(vals)
    rows = [row]
    max_k = n  # first removal position is unconstrained
    for _ in range(steps):
        step = _walk_step(rng, row, max_k)
        if step is None:
            break
        row, _, l = step
        rows.append(row)
        max_k = l - 1  # strict canvas: next k must be below the incoming l
    pts = tuple(tuple(Fraction(v) for v in r) for r in rows)
    cv = Canvas(n=n, points=pts, mesh=Fraction(1), periodic=None)
    rep = validate(cv)
    if not rep.ok:
        raise PgnError(f"sampler produced an invalid canvas: {rep.message}")
    return cv


def random_rigid_system(rng: random.Random, n: int, steps: int | None = None) -> NSystem:
    return build_system(random_finite_canvas(rng, n, steps))


def random_target_for(s: NSystem, rng: random.Random) -> tuple[Fraction, ...]:
    """An admissible extension target: componentwise >= the final value,
    strictly increasing, on the mesh."""
    end = s.events[-1].value
    bumps = sorted(rng.randrange(0, 6) for _ in range(s.n))
    return tuple(v + Fraction(b) for v, b in zip(end, bumps))


def _open_frac(rng: random.Random, lo, hi, grid: int = 48) -> Fraction:
    return lo + Fraction(rng.randrange(1, grid), grid) * (hi - lo)


def random_member_interior(rng: random.Random, tries: int = 5000) -> SpectrumPoint6:
    """A spectrum member whose two constructed paths are both strict."""
    for _ in range(tries):
        u1 = _open_frac(rng, Fraction(0), Fraction(1, 3))
        l3 = spectrum6.jarnik_solve(u1)
        l1 = _open_frac(rng, Fraction(0), min(u1, 1 - 2 * l3))
        u2 = _open_frac(rng, l3, (1 - l1) / 2)
        u3 = _open_frac(rng, l3, Fraction(1))
        lo2 = max(Fraction(0), (1 - u3) / 2)
        hi2 = min(u1, 1 - u3)
        if lo2 >= hi2:
            continue
        t = (l1, _open_frac(rng, lo2, hi2), l3, u1, u2, u3)
        if not spectrum6.membership(t)[0]:
            continue
        try:
            lo_p = spectrum6.construct_path_lower(t)
            up_p = spectrum6.construct_path_upper(t)
        except PgnError:
            continue
        if lo_p.ok and up_p.ok and lo_p.strict and up_p.strict:
            return SpectrumPoint6(lower=t[:3], upper=t[3:])
    raise PgnError("no interior member found in the sampling budget")
