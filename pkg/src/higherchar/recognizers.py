"""Budgeted recursive recognizers for contractibility, spheres, balls and
manifolds.

The definitions are mutually recursive in the dimension: the void complex is
the (-1)-sphere and the one-point complex is the smallest contractible
complex.  A complex is contractible when some vertex has both its unit
sphere and the complement of its star contractible; a d-manifold has every
unit sphere a (d-1)-sphere; a d-sphere is a d-manifold that some puncture
makes contractible; a d-ball is recognized as a contractible d-manifold with
boundary whose boundary is a (d-1)-sphere.

These are semi-decision procedures: YES and NO are sound, and UNKNOWN is
returned only when the call budget runs out before the search is exhausted.
Results are memoized on the exact labeled complex (no isomorphism
canonicalization), so repeated sub-complexes are checked once per query.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from enum import Enum

from .complexes import Complex, Simplex, closure
from .errors import DomainError, InputError

__all__ = [
    "DEFAULT_BUDGET",
    "Status",
    "Verdict",
    "is_contractible",
    "is_sphere",
    "is_ball",
    "is_manifold",
    "is_manifold_with_boundary",
    "manifold_boundary",
    "is_dehn_sommerville",
]

DEFAULT_BUDGET = 100_000


class Status(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


YES, NO, UNKNOWN = Status.YES, Status.NO, Status.UNKNOWN


@dataclass(frozen=True)
class Verdict:
    status: Status
    certificate: tuple = ()
    calls_used: int = 0

    @property
    def is_yes(self) -> bool:
        return self.status is YES

    @property
    def is_no(self) -> bool:
        return self.status is NO

    @property
    def is_unknown(self) -> bool:
        return self.status is UNKNOWN


class _Ctx:
    __slots__ = ("budget", "used", "memo")

    def __init__(self, budget: int):
        if budget < 1:
            raise InputError("recognizer budget must be positive")
        self.budget = budget
        self.used = 0
        self.memo: dict = {}

    def charge(self) -> bool:
        self.used += 1
        return self.used <= self.budget


def _key(g: Complex):
    return g.member_bits


def _vertex_sphere_and_rest(g: Complex, vbit: int) -> tuple[Complex, Complex]:
    """(S(v), G minus U(v)) for a vertex given by its bit."""
    cof = [s for s in g.simplices if s.bits & vbit]
    rest = Complex((s for s in g.simplices if not s.bits & vbit), _validated=True)
    b = closure(cof)
    sph = Complex((s for s in b.simplices if not s.bits & vbit), _validated=True)
    return sph, rest


def _unit_sphere(g: Complex, x: Simplex) -> Complex:
    xb = x.bits
    cof = [s for s in g.simplices if s.bits & xb == xb]
    b = closure(cof)
    return Complex((s for s in b.simplices if s.bits & xb != xb), _validated=True)


def _minus_star(g: Complex, x: Simplex) -> Complex:
    xb = x.bits
    return Complex((s for s in g.simplices if s.bits & xb != xb), _validated=True)


def _vertices_by_star_size(g: Complex) -> list[int]:
    count: dict[int, int] = {}
    for s in g.simplices:
        b = s.bits
        while b:
            low = b & -b
            count[low] = count.get(low, 0) + 1
            b ^= low
    return sorted(count, key=lambda vb: (count[vb], vb))


def _contractible(g: Complex, ctx: _Ctx) -> tuple[Status, tuple]:
    n = len(g)
    if n == 0:
        return NO, ()
    if n == 1:
        return YES, ()
    key = ("contractible", _key(g))
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    if not ctx.charge():
        return UNKNOWN, ()
    saw_unknown = False
    for vbit in _vertices_by_star_size(g):
        sph, rest = _vertex_sphere_and_rest(g, vbit)
        s1, _ = _contractible(sph, ctx)
        if s1 is UNKNOWN:
            saw_unknown = True
            continue
        if s1 is NO:
            continue
        s2, cert2 = _contractible(rest, ctx)
        if s2 is UNKNOWN:
            saw_unknown = True
            continue
        if s2 is YES:
            res = (YES, (vbit.bit_length() - 1,) + cert2)
            ctx.memo[key] = res
            return res
    if saw_unknown:
        return UNKNOWN, ()
    ctx.memo[key] = (NO, ())
    return NO, ()


def _sphere(g: Complex, d: int, ctx: _Ctx) -> tuple[Status, tuple]:
    if d == -1:
        return (YES if len(g) == 0 else NO), ()
    if len(g) == 0:
        return NO, ()
    key = ("sphere", _key(g), d)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    if not ctx.charge():
        return UNKNOWN, ()
    man, _ = _manifold(g, d, ctx)
    if man is not YES:
        if man is NO:
            ctx.memo[key] = (NO, ())
        return man, ()
    saw_unknown = False
    # puncture candidates: vertices with small stars first, then everything else
    candidates = [Simplex.from_bits(vb) for vb in _vertices_by_star_size(g)]
    seen = {c.bits for c in candidates}
    candidates.extend(s for s in g.simplices if s.bits not in seen)
    for x in candidates:
        st, cert = _contractible(_minus_star(g, x), ctx)
        if st is YES:
            res = (YES, x.vertices + cert)
            ctx.memo[key] = res
            return res
        if st is UNKNOWN:
            saw_unknown = True
    if saw_unknown:
        return UNKNOWN, ()
    ctx.memo[key] = (NO, ())
    return NO, ()


def _manifold(g: Complex, d: int, ctx: _Ctx) -> tuple[Status, tuple]:
    if d < 0:
        raise InputError("manifold dimension must be non-negative")
    key = ("manifold", _key(g), d)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    if not ctx.charge():
        return UNKNOWN, ()
    saw_unknown = False
    for x in g.simplices:
        st, _ = _sphere(_unit_sphere(g, x), d - 1, ctx)
        if st is NO:
            ctx.memo[key] = (NO, ())
            return NO, ()
        if st is UNKNOWN:
            saw_unknown = True
    if saw_unknown:
        return UNKNOWN, ()
    ctx.memo[key] = (YES, ())
    return YES, ()


def _ball(g: Complex, d: int, ctx: _Ctx) -> tuple[Status, tuple]:
    if d < 0:
        return NO, ()
    key = ("ball", _key(g), d)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    if not ctx.charge():
        return UNKNOWN, ()
    mwb, _ = _manifold_with_boundary(g, d, ctx)
    if mwb is not YES:
        if mwb is NO:
            ctx.memo[key] = (NO, ())
        return mwb, ()
    ct, cert = _contractible(g, ctx)
    if ct is not YES:
        if ct is NO:
            ctx.memo[key] = (NO, ())
        return ct, ()
    bd, st = _boundary_members(g, d, ctx)
    if st is not YES:
        return st, ()
    sb, _ = _sphere(Complex(bd, _validated=True), d - 1, ctx)
    if sb is YES:
        res = (YES, cert)
        ctx.memo[key] = res
        return res
    if sb is NO:
        ctx.memo[key] = (NO, ())
    return sb, ()


def _manifold_with_boundary(g: Complex, d: int, ctx: _Ctx) -> tuple[Status, tuple]:
    if d < 0:
        raise InputError("manifold dimension must be non-negative")
    key = ("mwb", _key(g), d)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    if not ctx.charge():
        return UNKNOWN, ()
    saw_unknown = False
    for x in g.simplices:
        sph = _unit_sphere(g, x)
        st, _ = _sphere(sph, d - 1, ctx)
        if st is YES:
            continue
        bt, _ = _ball(sph, d - 1, ctx)
        if bt is YES:
            continue
        if st is UNKNOWN or bt is UNKNOWN:
            saw_unknown = True
            continue
        ctx.memo[key] = (NO, ())
        return NO, ()
    if saw_unknown:
        return UNKNOWN, ()
    ctx.memo[key] = (YES, ())
    return YES, ()


def _boundary_members(g: Complex, d: int, ctx: _Ctx) -> tuple[list[Simplex], Status]:
    """Simplices whose unit sphere is a (d-1)-ball; valid once g is a
    certified manifold with boundary."""
    out = []
    for x in g.simplices:
        sph = _unit_sphere(g, x)
        st, _ = _sphere(sph, d - 1, ctx)
        if st is YES:
            continue
        bt, _ = _ball(sph, d - 1, ctx)
        if bt is YES:
            out.append(x)
            continue
        return [], (UNKNOWN if UNKNOWN in (st, bt) else NO)
    return out, YES


def _dehn_sommerville(g: Complex, d: int, ctx: _Ctx) -> tuple[Status, tuple]:
    if d == -1:
        return (YES if len(g) == 0 else NO), ()
    if len(g) == 0:
        return NO, ()
    key = ("ds", _key(g), d)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    if not ctx.charge():
        return UNKNOWN, ()
    chi = sum(s.weight for s in g.simplices)
    if chi != 1 + (-1) ** d:
        ctx.memo[key] = (NO, ())
        return NO, ()
    saw_unknown = False
    for x in g.simplices:
        st, _ = _dehn_sommerville(_unit_sphere(g, x), d - 1, ctx)
        if st is NO:
            ctx.memo[key] = (NO, ())
            return NO, ()
        if st is UNKNOWN:
            saw_unknown = True
    if saw_unknown:
        return UNKNOWN, ()
    ctx.memo[key] = (YES, ())
    return YES, ()


def _run(fn, *args, budget: int) -> Verdict:
    ctx = _Ctx(budget)
    if sys.getrecursionlimit() < 20000:
        sys.setrecursionlimit(20000)
    status, cert = fn(*args, ctx)
    return Verdict(status, cert, ctx.used)


def is_contractible(g: Complex, budget: int = DEFAULT_BUDGET) -> Verdict:
    """YES when a chain of vertex reductions collapses g to a point."""
    return _run(_contractible, g, budget=budget)


def is_sphere(g: Complex, d: int, budget: int = DEFAULT_BUDGET) -> Verdict:
    """YES when g is a d-manifold some puncture of which is contractible.

    The empty complex is the (-1)-sphere.
    """
    if d < -1:
        raise InputError("sphere dimension must be at least -1")
    return _run(_sphere, g, d, budget=budget)


def is_ball(g: Complex, d: int, budget: int = DEFAULT_BUDGET) -> Verdict:
    """YES when g is a contractible d-manifold with boundary a (d-1)-sphere."""
    return _run(_ball, g, d, budget=budget)


def is_manifold(g: Complex, d: int, budget: int = DEFAULT_BUDGET) -> Verdict:
    """YES when every unit sphere of g is a (d-1)-sphere (no boundary allowed)."""
    return _run(_manifold, g, d, budget=budget)


def is_manifold_with_boundary(g: Complex, d: int, budget: int = DEFAULT_BUDGET) -> Verdict:
    """YES when every unit sphere is a (d-1)-sphere or a (d-1)-ball."""
    return _run(_manifold_with_boundary, g, d, budget=budget)


def manifold_boundary(g: Complex, d: int, budget: int = DEFAULT_BUDGET) -> Complex:
    """The closed subcomplex of simplices whose unit sphere is a ball.

    Requires g to be certified as a d-manifold with boundary first; the
    result is itself a (d-1)-manifold without boundary (possibly empty).
    """
    ctx = _Ctx(budget)
    if sys.getrecursionlimit() < 20000:
        sys.setrecursionlimit(20000)
    mwb, _ = _manifold_with_boundary(g, d, ctx)
    if mwb is not YES:
        raise DomainError(
            f"boundary extraction needs a manifold-with-boundary verdict of yes, got {mwb.value}"
        )
    members, st = _boundary_members(g, d, ctx)
    if st is not YES:
        raise DomainError("boundary classification ran out of budget")
    return Complex(members)


def is_dehn_sommerville(g: Complex, d: int, budget: int = DEFAULT_BUDGET) -> Verdict:
    """YES when chi(g) = 1 + (-1)^d and every unit sphere is recursively so.

    The recursion is anchored at the void complex for d = -1.
    """
    if d < -1:
        raise InputError("dimension must be at least -1")
    return _run(_dehn_sommerville, g, d, budget=budget)
