"""Finite abstract simplicial complexes over integer vertex ids.

Every vertex set is mirrored as an integer bit mask (bit ``v`` set iff vertex
``v`` is present), so subset and intersection tests are single integer
operations even when a complex has a few hundred vertices.  Simplices are
nonempty; the empty complex is allowed and plays the role of the
(-1)-dimensional sphere.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DomainError, InputError, ResourceBudgetError

__all__ = [
    "Simplex",
    "Complex",
    "SimplexSubset",
    "bits_of",
    "vertices_of",
    "closure",
    "boundary_set",
    "whitney",
    "f_vector",
    "join",
    "is_complex",
]


def bits_of(vertices: Iterable[int]) -> int:
    b = 0
    for v in vertices:
        b |= 1 << v
    return b


def vertices_of(bits: int) -> tuple[int, ...]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


class Simplex:
    """A nonempty, duplicate-free set of non-negative vertex ids, kept ascending."""

    __slots__ = ("vertices", "bits")

    def __init__(self, vertices: Iterable[int]):
        vs = tuple(sorted(set(vertices)))
        if not vs:
            raise InputError("a simplex must have at least one vertex")
        if vs[0] < 0:
            raise InputError(f"vertex ids must be non-negative, got {vs[0]}")
        self.vertices = vs
        self.bits = bits_of(vs)

    @classmethod
    def from_bits(cls, bits: int) -> "Simplex":
        if bits <= 0:
            raise InputError("a simplex must have at least one vertex")
        s = object.__new__(cls)
        s.vertices = vertices_of(bits)
        s.bits = bits
        return s

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def weight(self) -> int:
        """(-1) ** dim, the alternating sign the simplex carries in all sums."""
        return 1 if len(self.vertices) & 1 else -1

    def is_face_of(self, other: "Simplex") -> bool:
        return self.bits & other.bits == self.bits

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and v >= 0 and (self.bits >> v) & 1 == 1

    def __eq__(self, other):
        if isinstance(other, Simplex):
            return self.bits == other.bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.bits)

    def __lt__(self, other):
        if not isinstance(other, Simplex):
            return NotImplemented
        return (len(self.vertices), self.vertices) < (len(other.vertices), other.vertices)

    def __le__(self, other):
        if not isinstance(other, Simplex):
            return NotImplemented
        return self == other or self < other

    def __repr__(self) -> str:
        return "Simplex(%s)" % ",".join(map(str, self.vertices))


def _coerce_simplex(s) -> Simplex:
    return s if isinstance(s, Simplex) else Simplex(s)


class Complex:
    """An immutable simplicial complex.

    Simplices are stored in canonical order (by dimension, then
    lexicographically on vertex lists), which fixes matrix indexing and makes
    every derived output reproducible.  Construction verifies closure under
    taking nonempty subsets unless the caller guarantees it.
    """

    __slots__ = ("simplices", "_bits_set", "_index", "_hash")

    def __init__(self, simplices: Iterable = (), *, _validated: bool = False):
        ss = sorted(_coerce_simplex(s) for s in simplices)
        out: list[Simplex] = []
        for s in ss:
            if not out or s.bits != out[-1].bits:
                out.append(s)
        self.simplices: tuple[Simplex, ...] = tuple(out)
        self._bits_set = frozenset(s.bits for s in out)
        self._index = {s.bits: i for i, s in enumerate(out)}
        self._hash = hash(tuple(s.bits for s in out))
        if not _validated:
            self._check_closed()

    def _check_closed(self) -> None:
        bs = self._bits_set
        for s in self.simplices:
            if len(s.vertices) == 1:
                continue
            for v in s.vertices:
                if s.bits ^ (1 << v) not in bs:
                    raise InputError(
                        f"not closed under subsets: {s!r} present but its face "
                        f"without vertex {v} is missing"
                    )

    @staticmethod
    def empty() -> "Complex":
        return Complex((), _validated=True)

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices)

    def __contains__(self, s) -> bool:
        if isinstance(s, Simplex):
            return s.bits in self._bits_set
        try:
            return bits_of(s) in self._bits_set
        except TypeError:
            return False

    def contains_bits(self, bits: int) -> bool:
        return bits in self._bits_set

    def __eq__(self, other):
        if isinstance(other, Complex):
            return self._bits_set == other._bits_set
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Complex({len(self.simplices)} simplices, dim {self.dim})"

    @property
    def dim(self) -> int:
        return self.simplices[-1].dim if self.simplices else -1

    @property
    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for s in self.simplices:
            counts[s.dim] += 1
        return tuple(counts)

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        b = 0
        for s in self.simplices:
            b |= s.bits
        return vertices_of(b)

    @property
    def member_bits(self) -> frozenset[int]:
        return self._bits_set

    def index_of(self, s: Simplex) -> int:
        try:
            return self._index[s.bits]
        except KeyError:
            raise DomainError(f"{s!r} is not a simplex of this complex") from None

    def simplex_for_bits(self, bits: int) -> Simplex:
        try:
            return self.simplices[self._index[bits]]
        except KeyError:
            raise DomainError(f"no simplex with vertex set {vertices_of(bits)}") from None

    def facets(self) -> tuple[Simplex, ...]:
        """Locally maximal simplices: members contained in no strictly larger one."""
        non_max = set()
        for s in self.simplices:
            sub = (s.bits - 1) & s.bits
            while sub:
                non_max.add(sub)
                sub = (sub - 1) & s.bits
        return tuple(s for s in self.simplices if s.bits not in non_max)


def closure(simplices: Iterable, *, simplex_budget: int | None = None) -> Complex:
    """Smallest complex containing every given simplex; idempotent."""
    found: dict[int, Simplex] = {}
    for s in simplices:
        s = _coerce_simplex(s)
        sub = s.bits
        while sub:
            if sub not in found:
                found[sub] = Simplex.from_bits(sub)
                if simplex_budget is not None and len(found) > simplex_budget:
                    raise ResourceBudgetError(
                        f"closure exceeded the budget of {simplex_budget} simplices",
                        partial=len(found),
                    )
            sub = (sub - 1) & s.bits
    return Complex(found.values(), _validated=True)


def is_complex(simplices: Iterable) -> bool:
    """True iff the collection is closed under taking nonempty subsets."""
    items = [_coerce_simplex(s) for s in simplices]
    bs = {s.bits for s in items}
    for s in items:
        if len(s.vertices) == 1:
            continue
        for v in s.vertices:
            if s.bits ^ (1 << v) not in bs:
                return False
    return True


def f_vector(g: Complex) -> tuple[int, ...]:
    """Simplex counts per dimension; empty for the empty complex."""
    return g.f_vector


class SimplexSubset:
    """An arbitrary sub-collection of an ambient complex's simplices.

    Carries no closure requirement: it may be open, closed, or neither in the
    star topology of the ambient complex.
    """

    __slots__ = ("ambient", "members", "_member_bits", "_hash")

    def __init__(self, ambient: Complex, members: Iterable, *, _trusted: bool = False):
        ms = frozenset(_coerce_simplex(s) for s in members)
        if not _trusted:
            for s in ms:
                if s.bits not in ambient._bits_set:
                    raise DomainError(f"{s!r} is not a simplex of the ambient complex")
        self.ambient = ambient
        self.members = ms
        self._member_bits = frozenset(s.bits for s in ms)
        self._hash = hash((ambient._hash, self._member_bits))

    @property
    def member_bits(self) -> frozenset[int]:
        return self._member_bits

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(sorted(self.members))

    def __contains__(self, s) -> bool:
        if isinstance(s, Simplex):
            return s in self.members
        try:
            return bits_of(s) in self._member_bits
        except TypeError:
            return False

    def __eq__(self, other):
        if isinstance(other, SimplexSubset):
            return self.ambient == other.ambient and self._member_bits == other._member_bits
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self.members)} of {len(self.ambient)} simplices)"

    def is_closed_set(self) -> bool:
        return is_complex(self.members)

    def is_open_set(self) -> bool:
        """True iff upward closed: every member's coface is again a member."""
        mb = self._member_bits
        for y in self.ambient.simplices:
            if y.bits in mb:
                continue
            yb = y.bits
            for b in mb:
                if b & yb == b:
                    return False
        return True

    def complement(self) -> "SimplexSubset":
        mb = self._member_bits
        return SimplexSubset(
            self.ambient,
            (s for s in self.ambient.simplices if s.bits not in mb),
            _trusted=True,
        )

    def union(self, other: "SimplexSubset") -> "SimplexSubset":
        self._require_same_ambient(other)
        return SimplexSubset(self.ambient, self.members | other.members, _trusted=True)

    def intersection(self, other: "SimplexSubset") -> "SimplexSubset":
        self._require_same_ambient(other)
        return SimplexSubset(self.ambient, self.members & other.members, _trusted=True)

    def _require_same_ambient(self, other: "SimplexSubset") -> None:
        if self.ambient != other.ambient:
            raise DomainError("subsets live in different ambient complexes")


def _subset_parts(a) -> tuple[Complex | None, tuple[Simplex, ...]]:
    if isinstance(a, Complex):
        return a, a.simplices
    if isinstance(a, SimplexSubset):
        return a.ambient, tuple(sorted(a.members))
    return None, tuple(sorted(_coerce_simplex(s) for s in a))


def boundary_set(a) -> SimplexSubset:
    """closure(A) minus A, the topological boundary of an arbitrary collection."""
    ambient, members = _subset_parts(a)
    cl = closure(members)
    member_bits = {s.bits for s in members}
    delta = [s for s in cl.simplices if s.bits not in member_bits]
    if ambient is None:
        ambient = cl
    return SimplexSubset(ambient, delta)


def _maximal_cliques(adj: dict[int, int], verts: list[int]) -> list[int]:
    """Maximal cliques as vertex bit masks (Bron-Kerbosch, pivot on largest neighbourhood)."""
    out: list[int] = []
    if not verts:
        return out
    full = bits_of(verts)

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        px = p | x
        pivot, best = -1, -1
        m = px
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            cnt = (p & adj[v]).bit_count()
            if cnt > best:
                pivot, best = v, cnt
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(r | low, p & adj[v], x & adj[v])
            p &= ~low
            x |= low

    expand(0, full, 0)
    return out


def whitney(vertices: Iterable[int], edges: Iterable, *, simplex_budget: int | None = None) -> Complex:
    """The clique complex of a graph: all vertex sets of complete subgraphs."""
    verts = sorted(set(int(v) for v in vertices))
    if verts and verts[0] < 0:
        raise InputError(f"vertex ids must be non-negative, got {verts[0]}")
    vset = set(verts)
    adj = {v: 0 for v in verts}
    for e in edges:
        u, v = tuple(e)
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        if u not in vset or v not in vset:
            raise InputError(f"edge ({u},{v}) references an unknown vertex")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    cliques = _maximal_cliques(adj, verts)
    return closure(
        (Simplex.from_bits(c) for c in cliques), simplex_budget=simplex_budget
    )


def join(g: Complex, h: Complex, *, relabel: bool = False) -> Complex:
    """G + H: both complexes plus every union of one simplex from each.

    Vertex id sets must be disjoint; with ``relabel=True`` the second
    complex's ids are offset past the first one's maximum on collision.
    The join of a p-sphere and a q-sphere is a (p+q+1)-sphere.
    """
    gv = bits_of(g.vertex_ids)
    hv = bits_of(h.vertex_ids)
    shift = 0
    if gv & hv:
        if not relabel:
            raise InputError(
                "vertex ids of the two complexes overlap; pass relabel=True to offset"
            )
        shift = max(g.vertex_ids) + 1
    h_bits = [s.bits << shift for s in h.simplices]
    members: dict[int, Simplex] = {s.bits: s for s in g.simplices}
    for b in h_bits:
        members.setdefault(b, Simplex.from_bits(b))
    for sg in g.simplices:
        gb = sg.bits
        for b in h_bits:
            u = gb | b
            if u not in members:
                members[u] = Simplex.from_bits(u)
    return Complex(members.values(), _validated=True)
