"""The six-exponent spectrum of proper self-similar 3-systems.

A spectrum point collects the componentwise liminf and limsup of the ratio
set of a system.  Membership in the attainable set is a conjunction of 31
scalar constraints in exact arithmetic: fifteen primal atoms, their fifteen
duals under the symbol swap, and one extra sum bound.  The two path builders
produce the witnessing six-vertex paths behind the sufficiency direction,
and realize() compiles them into an actual system with the requested
exponents.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .canvas import Canvas, build_system
from .chains3 import (
    E1,
    E2,
    E3,
    ClosedChain,
    ElementaryPath,
    _chain_from_path,
    canonicalize_chain,
    join_chains,
    pi1,
    pi3,
    system_from_chain,
    validate_path,
)
from .core import InputError, PgnError, dec12, fmt, hull2, line_intersect, rat
from .exponents import SpectrumPoint6, six_exponents
from .nsystem import NSystem

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)

_FLIP = {"<=": ">=", ">=": "<=", "==": "=="}


def _sixtuple(a) -> tuple[Fraction, ...]:
    """(l1, l2, l3, u1, u2, u3) from a SpectrumPoint6 or a six-sequence."""
    if isinstance(a, SpectrumPoint6):
        return a.as_tuple()
    if isinstance(a, (list, tuple)) and len(a) == 6:
        return tuple(rat(v) for v in a)
    raise InputError("expected a spectrum point or six rationals")


def _as_point(t) -> SpectrumPoint6:
    return SpectrumPoint6(lower=tuple(t[:3]), upper=tuple(t[3:]))


@dataclass(frozen=True)
class ConstraintAtom:
    name: str
    rel: str  # "<=", ">=" or "=="
    lhs: Fraction
    rhs: Fraction

    @property
    def satisfied(self) -> bool:
        if self.rel == "<=":
            return self.lhs <= self.rhs
        if self.rel == ">=":
            return self.lhs >= self.rhs
        return self.lhs == self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "relation": self.rel,
            "lhs": fmt(self.lhs),
            "rhs": fmt(self.rhs),
            "satisfied": self.satisfied,
        }


@dataclass(frozen=True)
class ConstraintReport:
    atoms: tuple[ConstraintAtom, ...]

    @property
    def ok(self) -> bool:
        return all(a.satisfied for a in self.atoms)

    def atom(self, name: str) -> ConstraintAtom:
        for a in self.atoms:
            if a.name == name:
                return a
        raise InputError(f"no constraint named {name!r}")

    def failing(self) -> list[str]:
        return [a.name for a in self.atoms if not a.satisfied]

    def to_json(self) -> dict:
        return {"ok": self.ok, "atoms": [a.to_json() for a in self.atoms]}


def _primal_atoms(t, f1_const=HALF) -> list[ConstraintAtom]:
    l1, l2, l3, u1, u2, u3 = t
    beta = l1 * u2 + (1 - 2 * u2) * (1 - u2)
    gamma = l1 * (1 - u1) * (1 - u2) + (1 - l1) * (1 - 2 * u1) * (1 - 2 * u2)
    mk = ConstraintAtom
    return [
        mk("eq1a", "<=", l1, u1),
        mk("eq1b", "<=", u1, THIRD),
        mk("eq1c", "<=", THIRD, l3),
        mk("eq1d", "<=", l3, u2),
        mk("eq1e", "<=", u2, (1 - l1) / 2),
        mk("eq1f", "<=", (1 - l1) / 2, f1_const),
        mk("eq2", "==", (1 - 2 * u1) * (1 - 2 * l3), u1 * l3),
        mk("eq3", "<=", (l1 + 2 * u1 - 3 * l1 * u1) * u2, (1 - l1) * u1),
        mk("eq4a", "<=", l2, u1),
        mk("eq4b", "<=", (1 - l1 + u2) * l2, u2),
        mk("eq5a", "<=", beta * l2, l1 * u2),
        mk("eq5b", "<=", gamma * l2, (1 - u1) * l1 * u2),
        mk("eq6a", ">=", beta * u3, (1 - 2 * u2) * (1 - l1 - u2)),
        mk("eq6b", ">=", gamma * u3, (1 - l1) * (1 - 2 * u1) * (1 - 2 * u2)),
        mk("eq7", ">=", (1 - u1) * u3, (1 - l1) * (1 - 2 * u1)),
    ]


def _swap(t):
    l1, l2, l3, u1, u2, u3 = t
    return (u3, u2, u1, l3, l2, l1)


def _dual_atoms(t) -> list[ConstraintAtom]:
    # same formulas at the swapped point with flipped relations; the constant
    # in the last chain link drops from 1/2 to 0
    out = []
    for a in _primal_atoms(_swap(t), f1_const=Fraction(0)):
        out.append(ConstraintAtom("dual-" + a.name, _FLIP[a.rel], a.lhs, a.rhs))
    return out


def check_primal(a) -> ConstraintReport:
    return ConstraintReport(atoms=tuple(_primal_atoms(_sixtuple(a))))


def check_dual(a) -> ConstraintReport:
    return ConstraintReport(atoms=tuple(_dual_atoms(_sixtuple(a))))


def dualize(a) -> SpectrumPoint6:
    """Symbol-swapped point: (l1,l2,l3,u1,u2,u3) -> (u3,u2,u1,l3,l2,l1)."""
    return _as_point(_swap(_sixtuple(a)))


def membership(a) -> tuple[bool, ConstraintReport]:
    t = _sixtuple(a)
    atoms = _primal_atoms(t) + _dual_atoms(t)
    atoms.append(ConstraintAtom("sum-bound", "<=", t[1] + t[5], Fraction(1)))
    rep = ConstraintReport(atoms=tuple(atoms))
    return rep.ok, rep


def jarnik_solve(ubar1) -> Fraction:
    """The matching third lower exponent on the curve (1-2x)(1-2y) = xy."""
    x = rat(ubar1)
    if not 0 <= x <= THIRD:
        raise InputError(f"jarnik_solve needs 0 <= x <= 1/3, got {fmt(x)}")
    return (1 - 2 * x) / (2 - 3 * x)


@dataclass(frozen=True)
class PathConstruction:
    path: ElementaryPath
    sides: ConstraintReport
    valid: bool
    strict: bool
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.valid and self.sides.ok

    def to_json(self) -> dict:
        from .chains3 import path_to_json

        return {
            "path": path_to_json(self.path),
            "sides": self.sides.to_json(),
            "valid": self.valid,
            "strict": self.strict,
            "ok": self.ok,
            "notes": list(self.notes),
        }


def _lower_F(l1, u1):
    # the point with x1 = l1 whose projection from e1 onto the lower median is A
    s = (1 - l1) / (1 - u1)
    return (l1, u1 * s, (1 - 2 * u1) * s)


def construct_path_lower(a) -> PathConstruction:
    """Candidate path pinning x1(A)=u1, x3(A*)=l3, x2(B*)=u2, x1(C)=l1.

    Needs the chain constraints on (l1, u1, l3, u2) and the curve relation;
    the four remaining exponent bounds are evaluated and reported as side
    conditions, not enforced.
    """
    t = _sixtuple(a)
    l1, l2, l3, u1, u2, u3 = t
    pre = _primal_atoms(t)[:7]  # the chained inequalities and the curve
    for at in pre:
        if not at.satisfied:
            raise PgnError(f"no lower path: constraint {at.name} fails")
    A = (u1, u1, 1 - 2 * u1)
    Astar = (1 - 2 * l3, l3, l3)
    Bstar = (1 - 2 * u2, u2, u2)
    if u2 == HALF:
        # B* sits at the top corner, where the e3-line through B* and the
        # e2-line through F coincide; the path degenerates to C* = C
        C = _lower_F(l1, u1)
        Cstar = C
        B = A
    else:
        E = (l1, u2, 1 - l1 - u2)
        G = pi1(E)
        if G[0] < A[0]:
            B, C = G, E
        else:
            B, C = A, _lower_F(l1, u1)
        Cstar = line_intersect(Bstar, E3, C, E2)
        if Cstar is None:
            raise PgnError("no lower path: the defining lines are parallel")
    path = ElementaryPath(A=A, Astar=Astar, Bstar=Bstar, Cstar=Cstar, C=C, B=B)
    rep = validate_path(path)
    sides = ConstraintReport(atoms=(
        ConstraintAtom("side-x2C", "<=", C[1], u2),
        ConstraintAtom("side-x2B", ">=", B[1], l2),
        ConstraintAtom("side-x2Cstar", ">=", Cstar[1], l2),
        ConstraintAtom("side-x3Cstar", "<=", Cstar[2], u3),
    ))
    return PathConstruction(path=path, sides=sides, valid=rep.ok, strict=rep.strict)


def _upper_Fstar(l3, u3):
    # the point with x3 = u3 whose projection from e3 onto the upper median is A*
    r = (1 - u3) / (1 - l3)
    return ((1 - 2 * l3) * r, l3 * r, u3)


def construct_path_upper(a) -> PathConstruction:
    """Candidate path pinning x1(A)=u1, x3(A*)=l3, x2(B)=l2, x3(C*)=u3.

    Needs the dual chain constraints, the curve relation, and l2 + u3 <= 1;
    the remaining exponent bounds are reported as side conditions.
    """
    t = _sixtuple(a)
    l1, l2, l3, u1, u2, u3 = t
    pre = _dual_atoms(t)[:7]
    for at in pre:
        if not at.satisfied:
            raise PgnError(f"no upper path: constraint {at.name} fails")
    if l2 + u3 > 1:
        raise PgnError("no upper path: constraint sum-bound fails")
    notes = []
    if u3 > HALF:
        notes.append("x3 plane exits through the x1=0 edge beyond f1")
    A = (u1, u1, 1 - 2 * u1)
    Astar = (1 - 2 * l3, l3, l3)
    B = (l2, l2, 1 - 2 * l2)
    if l2 == 0:
        # B at e3; the dual chain then forces u3 = 1, collapsing the far leg
        Bstar = Astar
        Cstar = _upper_Fstar(l3, u3)
        C = Cstar
    else:
        Estar = (1 - l2 - u3, l2, u3)
        Gstar = pi3(Estar)
        if Gstar[2] > Astar[2]:
            Bstar, Cstar = Gstar, Estar
        else:
            Bstar, Cstar = Astar, _upper_Fstar(l3, u3)
        C = line_intersect(B, E1, Cstar, E2)
        if C is None:
            raise PgnError("no upper path: the defining lines are parallel")
    path = ElementaryPath(A=A, Astar=Astar, Bstar=Bstar, Cstar=Cstar, C=C, B=B)
    rep = validate_path(path)
    sides = ConstraintReport(atoms=(
        ConstraintAtom("side-x2Cstar", ">=", Cstar[1], l2),
        ConstraintAtom("side-x2Bstar", "<=", Bstar[1], u2),
        ConstraintAtom("side-x2C", "<=", C[1], u2),
        ConstraintAtom("side-x1C", ">=", C[0], l1),
    ))
    return PathConstruction(path=path, sides=sides, valid=rep.ok,
                            strict=rep.strict, notes=tuple(notes))


@dataclass(frozen=True)
class RealizeResult:
    system: NSystem
    target: SpectrumPoint6
    achieved: SpectrumPoint6
    exact: bool
    deviation: Fraction
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        from .nsystem import system_to_json

        return {
            "system": system_to_json(self.system),
            "target": self.target.to_json(),
            "achieved": self.achieved.to_json(),
            "exact": self.exact,
            "deviation": fmt(self.deviation),
            "notes": list(self.notes),
        }


def _chain_for_path(p: ElementaryPath) -> ClosedChain:
    """Close the path into a chain without growing its hull.

    Coarse ladders can push a rung outside the hull; doubling the rung count
    shrinks the overshoot, so escalate until the hull is reproduced exactly.
    """
    target = hull2(p.points())
    m = 1
    for _ in range(8):
        try:
            chain = _chain_from_path(p, m, m)
        except PgnError:
            chain = None
        if chain is not None and hull2(chain.vertices) == target:
            return chain
        m *= 2
    raise PgnError("path densification failed to stabilize the hull")


def _system_from_paths(p1: ElementaryPath, p2: ElementaryPath) -> NSystem:
    c1 = _chain_for_path(p1)
    c2 = _chain_for_path(p2)
    if canonicalize_chain(c1).vertices == canonicalize_chain(c2).vertices:
        return system_from_chain(c1)
    return system_from_chain(join_chains(c1, c2))


def _ladder_system(eps: Fraction) -> NSystem:
    # integer staircase hugging the center point: rows (N+i, N+i+1, N+i+2),
    # doubling after N+1 steps; ratio deviation from 1/3 peaks at 1/(3N+3)
    n_steps = max(1, math.ceil(Fraction(1, 3) / eps))
    rows = [(Fraction(n_steps + i), Fraction(n_steps + i + 1), Fraction(n_steps + i + 2))
            for i in range(n_steps + 1)]
    rows.append(tuple(2 * x for x in rows[0]))
    cv = Canvas(n=3, points=tuple(rows), mesh=Fraction(1), periodic=(0, Fraction(2)))
    return build_system(cv)


def realize(a, eps=Fraction(1, 1000)) -> RealizeResult:
    """A self-similar 3-system whose six exponents equal a (or approach it).

    Strictly witnessable points are realized exactly by compiling and joining
    the two constructed paths.  Boundary points are shrunk toward the center
    point, re-snapped onto the curve, and realized exactly at the shifted
    target, which stays within eps of the requested one.
    """
    t = _sixtuple(a)
    eps = rat(eps)
    if eps <= 0:
        raise InputError("eps must be positive")
    ok, rep = membership(t)
    if not ok:
        raise PgnError(f"not in the spectrum: constraint {rep.failing()[0]} fails")
    target = _as_point(t)
    lo = construct_path_lower(t)
    up = construct_path_upper(t)
    if lo.ok and up.ok and lo.strict and up.strict:
        sys_ = _system_from_paths(lo.path, up.path)
        achieved = six_exponents(sys_)
        if achieved.as_tuple() != t:
            raise PgnError("realization drifted off the target")
        return RealizeResult(system=sys_, target=target, achieved=achieved,
                             exact=True, deviation=Fraction(0))
    if all(x == THIRD for x in t):
        sys_ = _ladder_system(eps)
        achieved = six_exponents(sys_)
        dev = max(abs(x - THIRD) for x in achieved.as_tuple())
        return RealizeResult(system=sys_, target=target, achieved=achieved,
                             exact=False, deviation=dev,
                             notes=("approximate: degenerate target, staircase family used",))
    w = eps / 2
    for _ in range(64):
        b = [(1 - w) * x + w * THIRD for x in t]
        b[2] = jarnik_solve(b[3])
        b = tuple(b)
        if membership(b)[0]:
            try:
                lo2 = construct_path_lower(b)
                up2 = construct_path_upper(b)
            except PgnError:
                lo2 = up2 = None
            if (lo2 is not None and up2 is not None
                    and lo2.ok and up2.ok and lo2.strict and up2.strict):
                sys_ = _system_from_paths(lo2.path, up2.path)
                achieved = six_exponents(sys_)
                if achieved.as_tuple() != b:
                    raise PgnError("realization drifted off the shifted target")
                dev = max(abs(p - q) for p, q in zip(b, t))
                return RealizeResult(system=sys_, target=target, achieved=achieved,
                                     exact=False, deviation=dev,
                                     notes=("approximate: boundary point shrunk toward the center",))
        w /= 2
    raise PgnError("no strict interior approximation found near this boundary point")


@dataclass(frozen=True)
class SampleRecord:
    point: SpectrumPoint6
    member: bool
    witness: str  # "box" or "canvas"

    def to_json(self) -> dict:
        return {"point": self.point.to_json(), "member": self.member,
                "witness": self.witness}


CSV_HEADER = ("l1,l2,l3,u1,u2,u3,"
              "l1_exact,l2_exact,l3_exact,u1_exact,u2_exact,u3_exact,"
              "member,witness")


def sample_csv_row(rec: SampleRecord) -> str:
    t = rec.point.as_tuple()
    cells = [dec12(x) for x in t] + [fmt(x) for x in t]
    cells.append("1" if rec.member else "0")
    cells.append(rec.witness)
    return ",".join(cells)


def _rand_frac(rng: random.Random, lo, hi, grid: int = 60) -> Fraction:
    return lo + Fraction(rng.randrange(grid + 1), grid) * (hi - lo)


def _sample_box(rng: random.Random) -> tuple[Fraction, ...]:
    # sample inside the chained-inequality box so the interesting constraints
    # (eq3..eq7 and their duals) decide membership
    u1 = _rand_frac(rng, Fraction(0), THIRD)
    l3 = jarnik_solve(u1)
    l1 = _rand_frac(rng, Fraction(0), u1)
    u2 = _rand_frac(rng, l3, (1 - l1) / 2)
    u3 = _rand_frac(rng, l3, Fraction(1))
    lo2 = max(Fraction(0), (1 - u3) / 2)
    hi2 = min(u1, 1 - u3)
    l2 = _rand_frac(rng, lo2, hi2) if lo2 <= hi2 else lo2
    return (l1, l2, l3, u1, u2, u3)


def _sample_one(seed, i: int) -> SampleRecord:
    rng = random.Random(f"{seed}/{i}")
    if i % 4 == 3:
        from . import sampling

        cv = sampling.random_periodic_canvas3(rng)
        pt = six_exponents(build_system(cv))
        return SampleRecord(point=pt, member=membership(pt)[0], witness="canvas")
    t = _sample_box(rng)
    return SampleRecord(point=_as_point(t), member=membership(t)[0], witness="box")


def sample_spectrum(count: int, seed, workers: int = 1) -> list[SampleRecord]:
    """Seed-deterministic spectrum samples; the same seed gives the same list
    no matter how many workers split the work."""
    if count < 1:
        raise InputError("count must be at least 1")
    if workers < 1:
        raise InputError("workers must be at least 1")
    if workers == 1:
        return [_sample_one(seed, i) for i in range(count)]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda i: _sample_one(seed, i), range(count)))
