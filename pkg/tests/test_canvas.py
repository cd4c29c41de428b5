import random
from fractions import Fraction

import pytest

from pgn.canvas import (
    Canvas, build_system, canvas_from_json, canvas_to_json, from_system,
    reduce, switch_numbers, validate,
)
from pgn.core import InputError, PgnError
from pgn.sampling import random_finite_canvas, random_periodic_canvas3

from conftest import FIG1_SWITCH_NUMBERS, FIG1_TRANSITIONS, rows
from oracle_values import FIG_DIVISION_EVENTS

F = Fraction


def test_fig1_validates_with_expected_transitions(fig1_canvas):
    rep = validate(fig1_canvas)
    assert rep.ok
    assert rep.transitions == FIG1_TRANSITIONS
    assert rep.to_json() == {"ok": True, "transitions": [list(t) for t in FIG1_TRANSITIONS]}


def test_fig1_switch_numbers(fig1_canvas):
    assert switch_numbers(fig1_canvas) == FIG1_SWITCH_NUMBERS


def test_validate_c1_failures():
    bad = Canvas(n=3, points=rows([(0, 1, 2), (1, 2, 3)]))
    rep = validate(bad)
    assert not rep.ok and rep.condition == "C1" and rep.index == 0
    assert "nonpositive" in rep.message

    bad = Canvas(n=3, points=rows([(1, 2, 2), (2, 2, 3)]))
    rep = validate(bad)
    assert not rep.ok and rep.condition == "C1" and rep.index == 0
    assert "strictly increasing" in rep.message

    rep = validate(Canvas(n=3, points=rows([(1, 2, 4), (2, 4, 8)]), mesh=F(2)))
    assert not rep.ok and rep.condition == "mesh" and rep.index == 0


def test_validate_c2_failures():
    # two coordinates change at once
    rep = validate(Canvas(n=3, points=rows([(1, 2, 4), (1, 3, 5)])))
    assert not rep.ok and rep.condition == "C2" and rep.index == 0
    # replacement not strictly larger
    rep = validate(Canvas(n=3, points=rows([(2, 3, 4), (1, 3, 4)])))
    assert not rep.ok and rep.condition == "C2" and rep.index == 0


def test_validate_c3_strict_vs_pre():
    # middle row is a pure pass-through: k == l there
    c = Canvas(n=3, points=rows([(1, 2, 4), (2, 3, 4), (2, 4, 5)]))
    rep = validate(c)
    assert not rep.ok and rep.condition == "C3" and rep.index == 1
    pre = validate(c, strict=False)
    assert pre.ok and pre.transitions == [(1, 2), (2, 3)]

    # k > l is rejected even as a pre-canvas
    c = Canvas(n=3, points=rows([(1, 2, 4), (1, 3, 4), (1, 3, 6)]))
    for strict in (True, False):
        rep = validate(c, strict=strict)
        assert not rep.ok and rep.condition == "C3" and rep.index == 1


def test_validate_periodic_failures():
    pts = rows([(1, 2, 4), (2, 4, 8)])
    rep = validate(Canvas(n=3, points=pts, periodic=(0, F(1))))
    assert not rep.ok and rep.condition == "periodic" and "rho" in rep.message

    rep = validate(Canvas(n=3, points=pts, periodic=(1, F(2))))
    assert not rep.ok and rep.condition == "periodic" and rep.message == "empty period"

    rep = validate(Canvas(n=3, points=rows([(1, 2, 4), (2, 4, 9)]), periodic=(0, F(2))))
    assert not rep.ok and rep.condition == "periodic" and rep.index == 1
    assert "witness" in rep.message


def test_validate_periodic_seam():
    # smooth seam: the wrap transition inserts exactly where the period start rises
    pts = rows([(3, 4, 5), (4, 5, 8), (5, 8, 10), (6, 8, 10)])
    c = Canvas(n=3, points=pts, periodic=(0, F(2)))
    rep = validate(c)
    assert not rep.ok and rep.condition == "periodic" and "seam" in rep.message
    assert validate(c, strict=False).ok

    # seam with k > l is broken outright
    pts = rows([(3, 4, 5), (3, 5, 8), (5, 8, 10), (6, 8, 10)])
    c = Canvas(n=3, points=pts, periodic=(0, F(2)))
    for strict in (True, False):
        assert not validate(c, strict=strict).ok
    with pytest.raises(PgnError, match="seam"):
        build_system(c)


def test_validate_input_errors():
    with pytest.raises(InputError):
        validate(Canvas(n=3, points=rows([(1, 2, 4)])))
    with pytest.raises(InputError):
        validate(Canvas(n=3, points=rows([(1, 2), (1, 3)])))


def test_reduce_drops_passthrough_rows():
    c = Canvas(n=3, points=rows([(1, 2, 4), (2, 3, 4), (2, 4, 5)]), mesh=F(1))
    r = reduce(c)
    assert r.points == rows([(1, 2, 4), (2, 4, 5)])
    assert r.mesh == F(1)
    assert validate(r).ok
    assert build_system(c) == build_system(r)
    # already-strict canvases come back unchanged
    assert reduce(r) is r


def test_reduce_periodic_prefix_adjustment():
    pts = tuple(tuple(F(x) for x in row) for row in
                [(1, F(5, 4), 4), (1, F(3, 2), 4), (1, 2, 4), (2, 4, 8)])
    c = Canvas(n=3, points=pts, periodic=(2, F(2)))
    r = reduce(c)
    assert r.points == (pts[0], pts[2], pts[3])
    assert r.periodic == (1, F(2))
    s = build_system(c)
    assert s.selfsimilar and s.rho == 2 and s.period_start == 7
    assert s.lo == F(25, 4)
    assert s.eval(7) == pts[2]
    assert s.eval(14) == pts[3]


def test_build_fig1_division_events(fig1_canvas):
    s = build_system(fig1_canvas)
    assert s.n == 3 and s.lo == 7 and s.hi == 49
    assert not s.selfsimilar and s.mesh == F(1)
    got = [(e.q, e.value, e.right_rise) for e in s.events]
    want = [(F(q), rows([val])[0], rise) for q, val, rise in FIG_DIVISION_EVENTS]
    assert got == want


def test_build_golden_period(golden_canvas):
    s = build_system(golden_canvas)
    assert s.selfsimilar and s.rho == 2 and s.period_start == 7
    assert s.lo == 7 and s.hi is None and s.mesh == F(1)
    got = [(e.q, e.value, e.right_rise) for e in s.events]
    assert got == [
        (F(7), rows([(1, 2, 4)])[0], 1),
        (F(8), rows([(2, 2, 4)])[0], 2),
        (F(10), rows([(2, 4, 4)])[0], 3),
    ]


def test_build_fractional_rho_drops_mesh():
    # closing ratio 3/2 is not an integer, so no grid survives scaling
    pts = ((F(4), F(6), F(9)), (F(6), F(9), F(27, 2)))
    c = Canvas(n=3, points=pts, mesh=F(1, 2), periodic=(0, F(3, 2)))
    rep = validate(c)
    assert rep.ok, rep.message
    s = build_system(c)
    assert s.rho == F(3, 2) and s.mesh is None
    assert s.period_start == 19
    assert s.eval(F(57, 2)) == (F(6), F(9), F(27, 2))


def test_canvas_json_round_trip(fig1_canvas, golden_canvas):
    for c in (fig1_canvas, golden_canvas):
        assert canvas_from_json(canvas_to_json(c)) == c
    j = canvas_to_json(golden_canvas)
    assert j["periodic"] == {"prefix_len": 0, "rho": "2"}
    assert j["points"][0] == ["1", "2", "4"]


def test_canvas_json_errors():
    with pytest.raises(InputError):
        canvas_from_json({"points": [[1, 2, 3]]})
    with pytest.raises(InputError):
        canvas_from_json({"n": 1, "points": [[1]]})
    with pytest.raises(InputError):
        canvas_from_json({"n": 3, "points": [[1, 2, 4]], "periodic": {}})
    with pytest.raises(InputError):
        canvas_from_json({"n": 3, "points": [[1, 2, 4]], "periodic": {"rho": 2, "prefix_len": -1}})


def test_from_system_round_trip(fig1_canvas):
    s = build_system(fig1_canvas)
    back = from_system(s)
    assert back.points == fig1_canvas.points
    assert back.mesh == fig1_canvas.mesh
    assert build_system(back) == s


def test_from_system_rejects_unbounded(golden_system):
    with pytest.raises(PgnError, match="bounded"):
        from_system(golden_system)


def test_random_canvases_compile_and_round_trip():
    rng = random.Random(20240817)
    for _ in range(40):
        c = random_periodic_canvas3(rng)
        assert validate(c).ok
        s = build_system(c)
        assert s.selfsimilar and s.rho == 2
    for _ in range(40):
        n = rng.choice((2, 3, 4))
        c = random_finite_canvas(rng, n)
        rep = validate(c)
        assert rep.ok, rep.message
        s = build_system(c)
        assert s.hi is not None
        assert from_system(s).points == c.points
