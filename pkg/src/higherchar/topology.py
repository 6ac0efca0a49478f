"""The finite star topology of a complex.

The stars U(x) = {y : x is a face of y} form the base of a non-Hausdorff
topology on the set of simplices.  Closed sets are exactly the subcomplexes;
an arbitrary union of stars is open.  Balls, spheres, dual spheres, topology
generation and the refinement of complexes and open sets live here.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .complexes import Complex, Simplex, SimplexSubset, _coerce_simplex, closure, whitney
from .errors import DomainError, InputError, ResourceBudgetError

__all__ = [
    "OpenSet",
    "configuration",
    "config_weight",
    "star",
    "core",
    "star_intersection",
    "star_intersection_by_scan",
    "ball",
    "sphere",
    "dual_sphere",
    "is_open",
    "generate_topology",
    "barycentric",
    "open_refinement",
]

DEFAULT_TOPOLOGY_BUDGET = 10**6


class OpenSet(SimplexSubset):
    """A SimplexSubset that is upward closed in its ambient complex."""

    def __init__(self, ambient: Complex, members: Iterable, *, _trusted: bool = False):
        super().__init__(ambient, members, _trusted=_trusted)
        if not _trusted and not self.is_open_set():
            raise DomainError("the given simplices do not form an open set")


def configuration(g: Complex, xs) -> tuple[Simplex, ...]:
    """Validate a k-point configuration: a nonempty tuple of simplices of g."""
    if isinstance(xs, Simplex):
        xs = (xs,)
    X = tuple(_coerce_simplex(x) for x in xs)
    if not X:
        raise InputError("a configuration needs at least one point (k >= 1)")
    for x in X:
        if x.bits not in g.member_bits:
            raise DomainError(f"{x!r} is not a simplex of the complex")
    return X


def config_weight(xs: Sequence[Simplex]) -> int:
    """Product of the simplex weights of a configuration, in {+1, -1}."""
    w = 1
    for x in xs:
        w *= x.weight
    return w


def _require_member(g: Complex, x) -> Simplex:
    x = _coerce_simplex(x)
    if x.bits not in g.member_bits:
        raise DomainError(f"{x!r} is not a simplex of the complex")
    return x


def star(g: Complex, x) -> OpenSet:
    """U(x): all simplices having x as a face; the smallest open set containing x."""
    x = _require_member(g, x)
    xb = x.bits
    return OpenSet(g, (y for y in g.simplices if xb & y.bits == xb), _trusted=True)


def core(g: Complex, x) -> Complex:
    """K(x): the closure of {x}, i.e. all nonempty subsets of x."""
    x = _require_member(g, x)
    return closure((x,))


def star_intersection(g: Complex, xs) -> OpenSet:
    """U(X), the intersection of the stars of the points of a configuration.

    Fast path: U(X) equals the star of the union of the points whenever that
    union is itself a simplex of g, and is empty otherwise (a superset of a
    non-member cannot be a member of a closed family).
    """
    X = configuration(g, xs)
    u = 0
    for x in X:
        u |= x.bits
    if u not in g.member_bits:
        return OpenSet(g, (), _trusted=True)
    return OpenSet(g, (y for y in g.simplices if u & y.bits == u), _trusted=True)


def star_intersection_by_scan(g: Complex, xs) -> OpenSet:
    """Reference path for U(X): literally intersect the member sets of the stars."""
    X = configuration(g, xs)
    members = None
    for x in X:
        s = frozenset(star(g, x).members)
        members = s if members is None else members & s
    return OpenSet(g, members, _trusted=True)


def ball(g: Complex, xs) -> Complex:
    """B(X): the closure of the star intersection U(X); a complex."""
    u = star_intersection(g, xs)
    return closure(u.members)


def sphere(g: Complex, xs) -> Complex:
    """S(X) = B(X) minus U(X): the boundary of the star intersection; a complex."""
    u = star_intersection(g, xs)
    b = ball(g, xs)
    ub = u.member_bits
    return Complex((s for s in b.simplices if s.bits not in ub), _validated=True)


def dual_sphere(g: Complex, xs) -> Complex:
    """Intersection of the unit spheres S(x_j) of the points of a configuration."""
    X = configuration(g, xs)
    members = None
    for x in X:
        s = frozenset(sphere(g, (x,)).simplices)
        members = s if members is None else members & s
    return Complex(members, _validated=True)


def is_open(g: Complex, a) -> bool:
    """True iff the sub-collection is upward closed in g."""
    if isinstance(a, SimplexSubset):
        if a.ambient == g:
            return a.is_open_set()
        a = a.members
    return SimplexSubset(g, a).is_open_set()


def generate_topology(g: Complex, budget: int = DEFAULT_TOPOLOGY_BUDGET) -> tuple[OpenSet, ...]:
    """Every open set of g: all unions of base stars, plus the empty set.

    The lattice of open sets can grow exponentially; when more than ``budget``
    sets have been found the enumeration aborts with a resource error that
    carries the partial count.
    """
    by_bits = {s.bits: s for s in g.simplices}
    base: list[frozenset[int]] = []
    seen_base: set[frozenset[int]] = set()
    for s in g.simplices:
        sb = s.bits
        st = frozenset(y.bits for y in g.simplices if sb & y.bits == sb)
        if st not in seen_base:
            seen_base.add(st)
            base.append(st)
    found: set[frozenset[int]] = {frozenset()}
    queue: deque[frozenset[int]] = deque([frozenset()])
    for st in base:
        if st not in found:
            found.add(st)
            queue.append(st)
    while queue:
        cur = queue.popleft()
        for st in base:
            u = cur | st
            if u not in found:
                found.add(u)
                if len(found) > budget:
                    raise ResourceBudgetError(
                        f"topology enumeration exceeded {budget} open sets",
                        partial=len(found),
                    )
                queue.append(u)
    ordered = sorted(found, key=lambda fs: (len(fs), sorted(fs)))
    return tuple(
        OpenSet(g, (by_bits[b] for b in fs), _trusted=True) for fs in ordered
    )


def barycentric(g: Complex, *, simplex_budget: int | None = None) -> Complex:
    """The refinement of g: the clique complex of its face-incidence graph.

    Vertex i of the refinement is the i-th simplex of g in canonical order;
    two vertices are joined when one simplex is a face of the other, so the
    simplices of the refinement are the chains of the face poset.
    """
    ss = g.simplices
    n = len(ss)
    edges = []
    for i in range(n):
        bi = ss[i].bits
        for j in range(i + 1, n):
            bj = ss[j].bits
            b = bi & bj
            if b == bi or b == bj:
                edges.append((i, j))
    return whitney(range(n), edges, simplex_budget=simplex_budget)


def open_refinement(g: Complex, u: SimplexSubset) -> OpenSet:
    """Refine an open set: complement of the refined closed complement.

    The closed complement refines to the full subcomplex of the refinement
    induced on its simplices; the refined open set is everything else, i.e.
    the chains that touch at least one member of u.
    """
    if not isinstance(u, SimplexSubset) or u.ambient != g:
        u = SimplexSubset(g, u)
    if not u.is_open_set():
        raise DomainError("open_refinement requires an open set")
    g1 = barycentric(g)
    closed_mask = 0
    ub = u.member_bits
    for i, s in enumerate(g.simplices):
        if s.bits not in ub:
            closed_mask |= 1 << i
    return OpenSet(
        g1, (s for s in g1.simplices if s.bits & ~closed_mask), _trusted=True
    )
