import random
from fractions import Fraction

import pytest

from pgn.canvas import Canvas, build_system
from pgn.chains3 import (
    ClosedChain, ElementaryPath, canonicalize_chain, chain_from_json,
    chain_from_system, chain_to_json, classify, densify_path, extract_paths,
    join_chains, path_from_json, path_inf_sup, path_to_json, pi1, pi3,
    plot_chain, system_from_chain, validate_chain, validate_path,
)
from pgn.core import InputError, PgnError, comp_inf_sup, hull2
from pgn.exponents import six_exponents
from pgn.nsystem import Event, NSystem
from pgn.sampling import random_member_interior, random_periodic_canvas3
from pgn.spectrum6 import construct_path_lower

from conftest import GOLDEN_SIX, rows

F = Fraction

A_G = (F(1, 4), F(1, 4), F(1, 2))
AS_G = (F(1, 5), F(2, 5), F(2, 5))
C_G = (F(1, 7), F(2, 7), F(4, 7))

GOLDEN_CHAIN = ClosedChain((C_G, A_G, AS_G))

GOLDEN_PATH = ElementaryPath(A=A_G, Astar=AS_G, Bstar=AS_G, Cstar=C_G, C=C_G, B=A_G)

# strict path with room everywhere: B != A and B* != A*
WIDE_PATH = ElementaryPath(
    A=A_G, Astar=AS_G,
    Bstar=(F(1, 6), F(5, 12), F(5, 12)),
    Cstar=(F(1, 12), F(5, 24), F(17, 24)),
    C=(F(7, 96), F(59, 192), F(119, 192)),
    B=(F(59, 237), F(59, 237), F(119, 237)),
)

# same shape pushed toward e3: the one-rung ladder pokes out of the hull
THIN_PATH = ElementaryPath(
    A=A_G, Astar=AS_G,
    Bstar=(F(1, 6), F(5, 12), F(5, 12)),
    Cstar=(F(1, 30), F(1, 12), F(53, 60)),
    C=(F(1, 30), F(1, 12), F(53, 60)),
    B=(F(5, 63), F(5, 63), F(53, 63)),
)


def test_classify():
    assert classify((F(1, 3), F(1, 3), F(1, 3))) == "f2"
    assert classify(A_G) == "on-L"
    assert classify(AS_G) == "on-L*"
    assert classify(C_G) == "interior"
    assert classify((F(0), F(1, 2), F(1, 2))) == "outside"
    assert classify((F(1, 2), F(1, 4), F(1, 4))) == "outside"
    assert classify((F(1, 4), F(1, 4), F(1, 4))) == "outside"


def test_projections():
    assert pi1(C_G) == A_G
    assert pi3(C_G) == AS_G
    # median points are fixed
    assert pi1(A_G) == A_G
    assert pi3(AS_G) == AS_G
    with pytest.raises(InputError):
        pi3((F(0), F(0), F(1)))


def test_chain_from_system_golden(golden_system):
    assert chain_from_system(golden_system) == GOLDEN_CHAIN


def test_chain_from_system_rejections(ext4_system, fig1_system):
    with pytest.raises(InputError, match="n=3"):
        chain_from_system(ext4_system)
    with pytest.raises(PgnError, match="self-similar"):
        chain_from_system(fig1_system)
    improper = NSystem(n=3, lo=F(2), hi=None, events=(
        Event(F(2), (F(0), F(1), F(1)), 3),
        Event(F(3), (F(0), F(1), F(2)), 2),
    ), rho=F(2))
    with pytest.raises(PgnError, match="degenerate"):
        chain_from_system(improper)


def test_validate_chain_golden():
    rep = validate_chain(GOLDEN_CHAIN)
    assert rep.ok and not rep.errors
    assert rep.classes == ("interior", "on-L", "on-L*")
    assert rep.to_json()["ok"] is True


def test_validate_chain_vertex_errors():
    with pytest.raises(InputError):
        validate_chain(ClosedChain((A_G, AS_G)))
    with pytest.raises(InputError):
        validate_chain(ClosedChain((A_G[:2], AS_G, C_G)))

    f2 = (F(1, 3), F(1, 3), F(1, 3))
    rep = validate_chain(ClosedChain((f2, A_G, AS_G)))
    assert not rep.ok and "center point" in rep.errors[0]

    out = (F(0), F(1, 2), F(1, 2))
    rep = validate_chain(ClosedChain((out, A_G, AS_G)))
    assert not rep.ok and "not on a median or in the open" in rep.errors[0]

    # consecutive vertices not joined by a move toward a unit point
    stray = (F(1, 6), F(1, 3), F(1, 2))
    rep = validate_chain(ClosedChain((A_G, stray, AS_G)))
    assert not rep.ok and any("not strictly between" in e for e in rep.errors)


def test_validate_chain_direction_rules():
    # each chain below keeps every edge directed so exactly one rule trips

    # lower-median vertex moving toward e3 instead of e2
    chain = ClosedChain((A_G, (F(9, 40), F(9, 40), F(11, 20)),
                         (F(9, 53), F(22, 53), F(22, 53)),
                         (F(3, 25), F(22, 75), F(44, 75))))
    rep = validate_chain(chain)
    assert rep.errors == ("vertex 0: a lower-median vertex must move toward e2",)

    # upper-median vertex sliding along the median toward e1
    chain = ClosedChain((AS_G, (F(1, 4), F(3, 8), F(3, 8)),
                         (F(2, 11), F(3, 11), F(6, 11)), A_G))
    rep = validate_chain(chain)
    assert rep.errors == ("vertex 0: an upper-median vertex must move toward e3",)

    # interior vertex moving toward e3
    chain = ClosedChain((A_G, AS_G, (F(6, 35), F(12, 35), F(17, 35)), C_G))
    rep = validate_chain(chain)
    assert rep.errors == ("vertex 2: interior vertices never move toward e3",)

    # interior vertex moving toward e1 but stopping short of the median
    chain = ClosedChain((A_G, AS_G, C_G, (F(11, 56), F(15, 56), F(30, 56))))
    rep = validate_chain(chain)
    assert rep.errors == ("vertex 2: the move toward e1 must land on the lower median",)

    # after arriving toward e2 the walk must turn toward e1
    chain = ClosedChain((A_G, (F(9, 40), F(13, 40), F(18, 40)), AS_G, C_G))
    rep = validate_chain(chain)
    assert rep.errors == ("vertex 1: after arriving toward e2 the walk must turn toward e1",)


def test_canonicalize_chain():
    want = ClosedChain((A_G, AS_G, C_G))
    for k in range(3):
        rotated = ClosedChain(GOLDEN_CHAIN.vertices[k:] + GOLDEN_CHAIN.vertices[:k])
        assert canonicalize_chain(rotated) == want
    with pytest.raises(PgnError, match="lower median"):
        canonicalize_chain(ClosedChain((AS_G, C_G, (F(1, 6), F(1, 3), F(1, 2)))))


def test_system_from_chain_golden(golden_system):
    s = system_from_chain(GOLDEN_CHAIN)
    assert s == golden_system
    assert chain_from_system(s) == GOLDEN_CHAIN
    assert six_exponents(s).as_tuple() == GOLDEN_SIX


def test_chain_round_trip_random():
    rng = random.Random(424242)
    for _ in range(25):
        s = build_system(random_periodic_canvas3(rng))
        ch = chain_from_system(s)
        assert validate_chain(ch).ok
        s2 = system_from_chain(ch)
        assert six_exponents(s2) == six_exponents(s)
        lo, hi = comp_inf_sup(ch.vertices)
        pt = six_exponents(s)
        assert (lo, hi) == (pt.lower, pt.upper)


def test_join_chains(golden_system):
    other = build_system(Canvas(n=3, points=rows([(1, 2, 3), (2, 3, 4), (2, 4, 6)]),
                                mesh=F(1), periodic=(0, F(2))))
    c1 = chain_from_system(golden_system)
    c2 = chain_from_system(other)
    joined = join_chains(c1, c2)
    assert validate_chain(joined).ok
    assert hull2(joined.vertices) == hull2(c1.vertices + c2.vertices)
    p1, p2 = six_exponents(golden_system), six_exponents(other)
    pj = six_exponents(system_from_chain(joined))
    assert pj.lower == tuple(min(a, b) for a, b in zip(p1.lower, p2.lower))
    assert pj.upper == tuple(max(a, b) for a, b in zip(p1.upper, p2.upper))


def test_join_chain_with_itself_shares_anchor(golden_system):
    c1 = chain_from_system(golden_system)
    joined = join_chains(c1, c1)
    assert validate_chain(joined).ok
    assert six_exponents(system_from_chain(joined)).as_tuple() == GOLDEN_SIX


def test_chain_json_round_trip():
    j = chain_to_json(GOLDEN_CHAIN)
    assert j["vertices"][0] == ["1/7", "2/7", "4/7"]
    assert chain_from_json(j) == GOLDEN_CHAIN
    with pytest.raises(InputError):
        chain_from_json({"points": []})


def test_validate_path_golden():
    rep = validate_path(GOLDEN_PATH)
    assert rep.ok and rep.strict and not rep.errors
    assert path_inf_sup(GOLDEN_PATH) == (GOLDEN_SIX[:3], GOLDEN_SIX[3:])


def test_validate_path_wide():
    rep = validate_path(WIDE_PATH)
    assert rep.ok and rep.strict
    lo, hi = path_inf_sup(WIDE_PATH)
    assert lo == (WIDE_PATH.C[0], min(WIDE_PATH.Cstar[1], WIDE_PATH.B[1]),
                  WIDE_PATH.Astar[2])
    assert hi == (WIDE_PATH.A[0], max(WIDE_PATH.Bstar[1], WIDE_PATH.C[1]),
                  WIDE_PATH.Cstar[2])


def test_validate_path_errors():
    def swap(**kw):
        fields = {k: getattr(GOLDEN_PATH, k) for k in ("A", "Astar", "Bstar", "Cstar", "C", "B")}
        fields.update(kw)
        return ElementaryPath(**fields)

    rep = validate_path(swap(A=(F(1, 2), F(1, 4), F(1, 4))))
    assert "A: not in the closed sorted triangle" in rep.errors

    rep = validate_path(swap(A=C_G, B=C_G))
    assert "A: not on the closed lower median" in rep.errors

    rep = validate_path(swap(Astar=C_G, Bstar=C_G))
    assert "Astar: not on the closed upper median" in rep.errors

    rep = validate_path(swap(Astar=(F(1, 10), F(9, 20), F(9, 20)), Bstar=(F(1, 10), F(9, 20), F(9, 20))))
    assert "Astar: not on the segment from A toward e2" in rep.errors

    rep = validate_path(swap(Bstar=(F(1, 4), F(3, 8), F(3, 8))))
    assert "Bstar: not on the segment from Astar to f1" in rep.errors

    rep = validate_path(swap(Cstar=A_G, C=A_G, B=A_G))
    assert "Cstar: not on the segment from Bstar toward e3" in rep.errors

    rep = validate_path(swap(C=(F(1, 8), F(2, 8), F(5, 8))))
    assert "C: not on the segment from Cstar toward e2" in rep.errors

    rep = validate_path(swap(B=AS_G))
    assert "B: not on the segment from A toward e3" in rep.errors

    rep = validate_path(swap(B=(F(9, 40), F(9, 40), F(11, 20))))
    assert "B: not on the segment from C toward e1" in rep.errors

    with pytest.raises(InputError):
        validate_path(swap(A=(F(1, 4), F(3, 4))))


def test_path_json_round_trip():
    j = path_to_json(WIDE_PATH)
    assert set(j) == {"A", "Astar", "Bstar", "Cstar", "C", "B"}
    assert path_from_json(j) == WIDE_PATH
    with pytest.raises(InputError):
        path_from_json({"A": ["1/4", "1/4", "1/2"]})


def test_densify_preconditions():
    with pytest.raises(PgnError, match="B != A"):
        densify_path(GOLDEN_PATH)
    with pytest.raises(PgnError, match="strict"):
        densify_path(ElementaryPath(A=A_G, Astar=AS_G, Bstar=AS_G, Cstar=AS_G,
                                    C=AS_G, B=A_G))
    with pytest.raises(InputError, match="at least 1"):
        densify_path(WIDE_PATH, m=0)
    with pytest.raises(InputError, match="positive"):
        densify_path(WIDE_PATH, gap=0)


def test_densify_wide_path():
    ch = densify_path(WIDE_PATH, gap=F(1, 64))
    assert validate_chain(ch).ok
    assert hull2(ch.vertices) == hull2(WIDE_PATH.points())
    assert comp_inf_sup(ch.vertices) == path_inf_sup(WIDE_PATH)
    # all six path vertices survive as chain vertices
    for v in WIDE_PATH.points():
        assert v in ch.vertices
    # a finer gap inserts more rungs
    finer = densify_path(WIDE_PATH, gap=F(1, 512))
    assert len(finer.vertices) > len(ch.vertices)
    assert comp_inf_sup(finer.vertices) == path_inf_sup(WIDE_PATH)


def test_densify_gap_too_large():
    assert validate_path(THIN_PATH).strict
    with pytest.raises(PgnError, match="gap too large"):
        densify_path(THIN_PATH, gap=F(1, 4))
    ch = densify_path(THIN_PATH, gap=F(1, 16))
    assert hull2(ch.vertices) == hull2(THIN_PATH.points())
    # automatic escalation lands on a safe gap by itself
    auto = densify_path(THIN_PATH)
    assert hull2(auto.vertices) == hull2(THIN_PATH.points())
    assert comp_inf_sup(auto.vertices) == path_inf_sup(THIN_PATH)


def test_densify_sampled_member_path():
    rng = random.Random("probe/19")
    t = random_member_interior(rng)
    p = construct_path_lower(t.as_tuple()).path
    rep = validate_path(p)
    assert rep.ok and rep.strict and p.B != p.A and p.Bstar != p.Astar
    ch = densify_path(p)
    assert validate_chain(ch).ok
    assert comp_inf_sup(ch.vertices) == path_inf_sup(p)


def test_extract_paths_golden():
    paths = extract_paths(GOLDEN_CHAIN)
    assert paths == [GOLDEN_PATH]


def test_extract_paths_spans_hull():
    for path, gap in ((WIDE_PATH, F(1, 64)), (THIN_PATH, F(1, 16))):
        ch = densify_path(path, gap=gap)
        extracted = extract_paths(ch)
        assert extracted, "no paths extracted"
        for q in extracted:
            rep = validate_path(q)
            assert rep.ok and rep.strict
        union = [v for q in extracted for v in q.points()]
        assert hull2(union) == hull2(ch.vertices)


def test_plot_chain():
    svg = plot_chain(GOLDEN_CHAIN)
    assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg" width="800"')
    for label in ("f1", "f2", "f3"):
        assert f">{label}</text>" in svg
    assert svg == plot_chain(GOLDEN_CHAIN)
