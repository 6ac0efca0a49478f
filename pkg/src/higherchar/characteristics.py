"""Higher characteristics and the identity checkers built from them.

The m'th characteristic of a collection A of simplices is

    w_m(A) = sum over X in A^m with nonempty intersection(X) in A
             of  prod_j weight(x_j),

with weight(x) = (-1)^dim(x).  m=1 is the Euler characteristic, m=2 the Wu
characteristic.  The production evaluator regroups the tuple sum over the
poset of faces: with N(p) = sum of weights of members containing p, the sum
of weights over tuples whose intersection contains p is N(p)^m, and an
inclusion-exclusion down the face poset isolates the tuples whose
intersection is exactly p.  That turns the |A|^m enumeration into a few
passes linear in the number of faces.  ``w_m_naive`` keeps the literal
definition; it is the oracle in tests and the global path of the benchmark.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .complexes import Complex, Simplex, SimplexSubset, _coerce_simplex
from .errors import DomainError, InputError, ResourceBudgetError
from .topology import configuration, config_weight

__all__ = [
    "DEFAULT_OP_BUDGET",
    "InteractionFunction",
    "EnergyReport",
    "w_m",
    "w_m_naive",
    "w_m_energized",
    "w_m_multi",
    "fermi",
    "green",
    "curvature_profile",
    "energy_sum",
    "sphere_sum",
    "dual_sphere_sum",
    "valuation_check",
    "valuation_values",
    "local_valuation_check",
]

DEFAULT_OP_BUDGET = 10**9


def _weight_of_bits(b: int) -> int:
    return 1 if b.bit_count() & 1 else -1


def _members_of(a) -> tuple[Simplex, ...]:
    if isinstance(a, Complex):
        return a.simplices
    if isinstance(a, SimplexSubset):
        return tuple(sorted(a.members))
    return tuple(sorted(_coerce_simplex(s) for s in a))


def _wm_bits(member_bits: Iterable[int], member_set: frozenset[int], m: int) -> int:
    """Face-poset evaluation of w_m over a collection given by bit masks."""
    if m < 1:
        raise InputError("the arity m must be at least 1")
    counts: dict[int, int] = {}
    for b in member_bits:
        w = _weight_of_bits(b)
        sub = b
        while sub:
            counts[sub] = counts.get(sub, 0) + w
            sub = (sub - 1) & b
    if not counts:
        return 0
    faces = sorted(counts, key=int.bit_count, reverse=True)
    excess: dict[int, int] = {}
    total = 0
    for p in faces:
        e = counts[p] ** m - excess.get(p, 0)
        if e:
            if p in member_set:
                total += e
            sub = (p - 1) & p
            while sub:
                excess[sub] = excess.get(sub, 0) + e
                sub = (sub - 1) & p
    return total


def w_m(a, m: int) -> int:
    """Exact m'th characteristic of a complex or an arbitrary simplex subset."""
    members = _members_of(a)
    bits = [s.bits for s in members]
    return _wm_bits(bits, frozenset(bits), m)


@lru_cache(maxsize=65536)
def _wm_of_bitset(member_set: frozenset[int], m: int) -> int:
    return _wm_bits(member_set, member_set, m)


def _wm_naive_bits(
    bits: list[int],
    m: int,
    *,
    assume_closed: bool = False,
    op_counter: dict | None = None,
) -> int:
    ws = [_weight_of_bits(b) for b in bits]
    mset = frozenset(bits)
    n = len(bits)
    total = 0
    ops = 0
    if m == 1:
        ops = n
        total = sum(ws)
    elif m == 2:
        for i in range(n):
            bi = bits[i]
            wi = ws[i]
            for j in range(n):
                p = bi & bits[j]
                if p and (assume_closed or p in mset):
                    total += wi * ws[j]
        ops = n * n
    elif m == 3:
        for i in range(n):
            bi = bits[i]
            wi = ws[i]
            for j in range(n):
                bij = bi & bits[j]
                wij = wi * ws[j]
                if bij:
                    for l in range(n):
                        p = bij & bits[l]
                        if p and (assume_closed or p in mset):
                            total += wij * ws[l]
        ops = n * n * n
    else:
        for idx in itertools.product(range(n), repeat=m):
            p = bits[idx[0]]
            w = ws[idx[0]]
            for i in idx[1:]:
                p &= bits[i]
                w *= ws[i]
            ops += 1
            if p and (assume_closed or p in mset):
                total += w
    if op_counter is not None:
        op_counter["tuples"] = op_counter.get("tuples", 0) + ops
    return total


def w_m_naive(
    a,
    m: int,
    *,
    assume_closed: bool = False,
    op_counter: dict | None = None,
    op_budget: int | None = DEFAULT_OP_BUDGET,
) -> int:
    """Literal tuple enumeration of w_m; the reference for every faster path.

    With ``assume_closed`` the membership test of the intersection reduces to
    nonemptiness, which is equivalent for closed families.
    """
    if m < 1:
        raise InputError("the arity m must be at least 1")
    members = _members_of(a)
    n = len(members)
    if op_budget is not None and n > 1 and n**m > op_budget:
        raise ResourceBudgetError(
            f"naive w_{m} would enumerate {n}^{m} tuples, over the budget {op_budget}"
        )
    return _wm_naive_bits(
        [s.bits for s in members], m,
        assume_closed=assume_closed, op_counter=op_counter,
    )


@dataclass(frozen=True)
class InteractionFunction:
    """An integer-valued interaction on m-tuples of simplices.

    The default rule, the product of the simplex weights, is the one choice
    invariant under refinement; any other integer rule still satisfies the
    energy identity but loses topological meaning.
    """

    arity: int
    rule: Callable[[tuple[Simplex, ...]], int]

    def __post_init__(self):
        if self.arity < 1:
            raise InputError("interaction arity must be at least 1")

    def __call__(self, xs: tuple[Simplex, ...]) -> int:
        return self.rule(xs)

    @staticmethod
    def default(arity: int) -> "InteractionFunction":
        return InteractionFunction(arity, config_weight)

    @staticmethod
    def delta(target: Sequence[Simplex], value: int = 1) -> "InteractionFunction":
        """1 (or ``value``) on one fixed tuple, 0 everywhere else."""
        key = tuple(_coerce_simplex(s).bits for s in target)
        if not key:
            raise InputError("delta interaction needs a nonempty target tuple")

        def rule(xs: tuple[Simplex, ...]) -> int:
            return value if tuple(x.bits for x in xs) == key else 0

        return InteractionFunction(len(key), rule)

    @staticmethod
    def from_table(
        arity: int,
        table: Mapping[tuple[tuple[int, ...], ...], int],
        default: int = 0,
    ) -> "InteractionFunction":
        """Look the value up by the tuple of vertex tuples."""

        def rule(xs: tuple[Simplex, ...]) -> int:
            return table.get(tuple(x.vertices for x in xs), default)

        return InteractionFunction(arity, rule)


def w_m_energized(a, h: InteractionFunction, *, op_budget: int | None = DEFAULT_OP_BUDGET) -> int:
    """w_m with the default weight product replaced by an arbitrary interaction."""
    members = _members_of(a)
    n = len(members)
    m = h.arity
    if op_budget is not None and n > 1 and n**m > op_budget:
        raise ResourceBudgetError(
            f"energized w_{m} would enumerate {n}^{m} tuples, over the budget {op_budget}"
        )
    mset = frozenset(s.bits for s in members)
    total = 0
    for X in itertools.product(members, repeat=m):
        p = X[0].bits
        for x in X[1:]:
            p &= x.bits
        if p and p in mset:
            total += h.rule(X)
    return total


def w_m_multi(slots: Sequence[SimplexSubset]) -> int:
    """Multi-linear extension: pick x_j from slot j, survival tested in the ambient.

    Linear in every slot under union/intersection because the survival
    condition does not depend on the slot contents.
    """
    if not slots:
        raise InputError("need at least one slot")
    ambient = slots[0].ambient
    for s in slots[1:]:
        if s.ambient != ambient:
            raise DomainError("all slots must share one ambient complex")
    pairs0 = [(s.bits, s.weight) for s in slots[0].members]
    cur: dict[int, int] = {}
    for b, w in pairs0:
        cur[b] = cur.get(b, 0) + w
    for slot in slots[1:]:
        pairs = [(s.bits, s.weight) for s in slot.members]
        nxt: dict[int, int] = {}
        for p, acc in cur.items():
            for b, w in pairs:
                q = p & b
                if q:
                    nxt[q] = nxt.get(q, 0) + acc * w
        cur = nxt
    amb = ambient.member_bits
    return sum(v for q, v in cur.items() if q in amb)


def fermi(a) -> int:
    """Product of the weights over all members; +1 or -1 (empty product is 1)."""
    t = 1
    for s in _members_of(a):
        t *= s.weight
    return t


# ---------------------------------------------------------------------------
# per-complex tables, cached on the (immutable, hashable) complex


@lru_cache(maxsize=512)
def _stars_of(g: Complex) -> dict[int, tuple[int, ...]]:
    """Member bits of U(z) for every simplex z of g, keyed by z's bits."""
    out: dict[int, list[int]] = {s.bits: [] for s in g.simplices}
    for y in g.simplices:
        yb = y.bits
        sub = yb
        while sub:
            lst = out.get(sub)
            if lst is not None:
                lst.append(yb)
            sub = (sub - 1) & yb
    return {b: tuple(v) for b, v in out.items()}


@lru_cache(maxsize=512)
def _ball_members_of(g: Complex) -> dict[int, frozenset[int]]:
    """Member bits of B(z) = closure(U(z)) for every z of g."""
    stars = _stars_of(g)
    out = {}
    for z, members in stars.items():
        faces: set[int] = set()
        for b in members:
            sub = b
            while sub:
                if sub not in faces:
                    faces.add(sub)
                sub = (sub - 1) & b
        out[z] = frozenset(faces)
    return out


@lru_cache(maxsize=1024)
def _star_wm(g: Complex, m: int) -> dict[int, int]:
    return {
        z: _wm_bits(mem, frozenset(mem), m) for z, mem in _stars_of(g).items()
    }


@lru_cache(maxsize=1024)
def _ball_wm(g: Complex, m: int) -> dict[int, int]:
    return {z: _wm_of_bitset(mem, m) for z, mem in _ball_members_of(g).items()}


@lru_cache(maxsize=1024)
def _sphere_wm(g: Complex, m: int) -> dict[int, int]:
    stars = _stars_of(g)
    balls = _ball_members_of(g)
    return {
        z: _wm_of_bitset(balls[z] - frozenset(stars[z]), m) for z in stars
    }


@lru_cache(maxsize=512)
def _sphere_sets(g: Complex) -> tuple[frozenset[int], ...]:
    stars = _stars_of(g)
    balls = _ball_members_of(g)
    return tuple(
        balls[s.bits] - frozenset(stars[s.bits]) for s in g.simplices
    )


@lru_cache(maxsize=512)
def _union_weights(g: Complex, k: int) -> dict[int, int]:
    """Weighted count of k-tuples by their union, pruned to unions inside g.

    Tuples whose running union leaves the complex can never rejoin it (a
    superset of a non-member is a non-member), and they contribute nothing to
    any star-based sum, so they are dropped as soon as they die.  Costs
    (k-1) * |g|^2 dictionary updates.
    """
    bits = [s.bits for s in g.simplices]
    ws = [s.weight for s in g.simplices]
    members = g.member_bits
    cur: dict[int, int] = {}
    for b, w in zip(bits, ws):
        cur[b] = w
    for _ in range(k - 1):
        nxt: dict[int, int] = {}
        for u, acc in cur.items():
            for b, w in zip(bits, ws):
                ub = u | b
                if ub in members:
                    nxt[ub] = nxt.get(ub, 0) + acc * w
        cur = nxt
    return cur


def _energized_star_wm(g: Complex, h: InteractionFunction) -> dict[int, int]:
    by_bits = {s.bits: s for s in g.simplices}
    out = {}
    for z, mem in _stars_of(g).items():
        out[z] = w_m_energized([by_bits[b] for b in mem], h)
    return out


def _energized_ball_wm(g: Complex, h: InteractionFunction) -> dict[int, int]:
    by_bits = {s.bits: s for s in g.simplices}
    out = {}
    for z, mem in _ball_members_of(g).items():
        out[z] = w_m_energized([by_bits[b] for b in mem], h)
    return out


# ---------------------------------------------------------------------------
# reports and identity checkers


@dataclass(frozen=True)
class EnergyReport:
    """Outcome of one identity check; pass means exact integer equality."""

    suite: str
    m: int
    k: int
    lhs: int
    rhs: int
    passed: bool
    n_simplices: int
    elapsed_ms: float

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "m": self.m,
            "k": self.k,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "n_simplices": self.n_simplices,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _check_mk(m: int, k: int) -> None:
    if m < 1 or k < 1:
        raise InputError("m and k must be at least 1")


def _direct_weighted_sum(
    g: Complex,
    k: int,
    table: Mapping[int, int],
    threads: int,
    op_budget: int | None,
) -> int:
    """sum over all |g|^k configurations of weight(X) * table[union bits of X]."""
    bits = [s.bits for s in g.simplices]
    ws = [s.weight for s in g.simplices]
    n = len(bits)
    if op_budget is not None and n > 1 and n**k > op_budget:
        raise ResourceBudgetError(
            f"direct sum would enumerate {n}^{k} configurations, over the budget {op_budget}"
        )

    def chunk_sum(first_range) -> int:
        total = 0
        get = table.get
        for i0 in first_range:
            b0 = bits[i0]
            w0 = ws[i0]
            for idx in itertools.product(range(n), repeat=k - 1):
                u = b0
                w = w0
                for i in idx:
                    u |= bits[i]
                    w *= ws[i]
                total += w * get(u, 0)
        return total

    if threads <= 1 or n == 0:
        return chunk_sum(range(n))
    step = max(1, n // threads)
    ranges = [range(i, min(i + step, n)) for i in range(0, n, step)]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return sum(ex.map(chunk_sum, ranges))


def energy_sum(
    g: Complex,
    m: int,
    k: int,
    h: InteractionFunction | None = None,
    *,
    variant: str = "star",
    method: str = "grouped",
    threads: int = 1,
    op_budget: int | None = DEFAULT_OP_BUDGET,
) -> EnergyReport:
    """Check w_m(G) against the total k-point energy sum over all configurations.

    The right-hand side sums weight(X) * w_m(U(X)) over every X in G^k, with
    U(X) the intersection of the k stars; ``variant="ball"`` replaces U(X) by
    its closure B(X), which satisfies the same identity.  ``method="direct"``
    enumerates all |G|^k configurations literally (optionally threaded);
    ``grouped`` folds configurations by their union first.  Both methods are
    exact and agree.
    """
    _check_mk(m, k)
    if variant not in ("star", "ball"):
        raise InputError(f"unknown variant {variant!r}")
    t0 = time.perf_counter()
    if h is None:
        lhs = w_m(g, m)
        table = _star_wm(g, m) if variant == "star" else _ball_wm(g, m)
    else:
        if h.arity != m:
            raise InputError(f"interaction arity {h.arity} does not match m={m}")
        lhs = w_m_energized(g, h, op_budget=op_budget)
        table = (
            _energized_star_wm(g, h) if variant == "star" else _energized_ball_wm(g, h)
        )
    rhs = _configuration_sum(g, k, table, method, threads, op_budget)
    suite = "energy" if variant == "star" else "energy-ball"
    elapsed = (time.perf_counter() - t0) * 1000.0
    return EnergyReport(suite, m, k, lhs, rhs, lhs == rhs, len(g), elapsed)


def _configuration_sum(
    g: Complex,
    k: int,
    table: Mapping[int, int],
    method: str,
    threads: int,
    op_budget: int | None,
) -> int:
    if method == "grouped":
        if op_budget is not None and (k - 1) * len(g) ** 2 > op_budget:
            raise ResourceBudgetError(
                f"grouped sum would take {(k - 1) * len(g)**2} updates, "
                f"over the budget {op_budget}"
            )
        uw = _union_weights(g, k)
        return sum(acc * table[z] for z, acc in uw.items())
    if method == "direct":
        return _direct_weighted_sum(g, k, table, threads, op_budget)
    raise InputError(f"unknown method {method!r}")


def sphere_sum(
    g: Complex,
    m: int,
    k: int,
    *,
    method: str = "grouped",
    threads: int = 1,
    op_budget: int | None = DEFAULT_OP_BUDGET,
) -> EnergyReport:
    """Check that the weighted w_m of all configuration spheres S(X) sums to zero."""
    _check_mk(m, k)
    t0 = time.perf_counter()
    table = _sphere_wm(g, m)
    rhs = _configuration_sum(g, k, table, method, threads, op_budget)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return EnergyReport("sphere", m, k, 0, rhs, rhs == 0, len(g), elapsed)


def dual_sphere_sum(
    g: Complex,
    m: int,
    k: int,
    *,
    op_budget: int | None = DEFAULT_OP_BUDGET,
) -> EnergyReport:
    """Check that the weighted w_m of all dual spheres S(x_1) ∩ ... ∩ S(x_k) is zero.

    Unlike S(X), the dual sphere is a plain set intersection of the unit
    spheres, so configurations are walked as multisets with a permutation
    multiplicity.
    """
    _check_mk(m, k)
    t0 = time.perf_counter()
    sph = _sphere_sets(g)
    ws = [s.weight for s in g.simplices]
    n = len(sph)
    n_multisets = math.comb(n + k - 1, k) if n else 0
    if op_budget is not None and n_multisets > op_budget:
        raise ResourceBudgetError(
            f"dual sphere sum would walk {n_multisets} multisets, over the budget {op_budget}"
        )
    kfact = math.factorial(k)
    total = 0
    for combo in itertools.combinations_with_replacement(range(n), k):
        inter = sph[combo[0]]
        for i in combo[1:]:
            if not inter:
                break
            inter = inter & sph[i]
        val = _wm_of_bitset(inter, m) if inter else 0
        if val:
            w = 1
            for i in combo:
                w *= ws[i]
            mult = kfact
            for c in Counter(combo).values():
                mult //= math.factorial(c)
            total += mult * w * val
    elapsed = (time.perf_counter() - t0) * 1000.0
    return EnergyReport("dual-sphere", m, k, 0, total, total == 0, len(g), elapsed)


def valuation_values(a: SimplexSubset, b: SimplexSubset, m: int) -> tuple[int, int]:
    """(w_m(A) + w_m(B), w_m(A∪B) + w_m(A∩B)) for arbitrary subsets of one complex."""
    lhs = w_m(a, m) + w_m(b, m)
    rhs = w_m(a.union(b), m) + w_m(a.intersection(b), m)
    return lhs, rhs


def valuation_check(
    u: SimplexSubset,
    v: SimplexSubset,
    m: int,
    *,
    allow_closed: bool = False,
) -> EnergyReport:
    """Check w_m(U) + w_m(V) = w_m(U∪V) + w_m(U∩V) for open sets.

    The identity genuinely needs open sets once m > 1; closed inputs are
    rejected unless ``allow_closed`` is set (used to demonstrate the failure).
    """
    if m < 1:
        raise InputError("the arity m must be at least 1")
    if u.ambient != v.ambient:
        raise DomainError("the two sets live in different ambient complexes")
    if not allow_closed:
        for name, s in (("first", u), ("second", v)):
            if not s.is_open_set():
                raise DomainError(
                    f"the {name} set is not open; the identity is only guaranteed "
                    "for open sets (pass allow_closed=True to evaluate anyway)"
                )
    t0 = time.perf_counter()
    lhs, rhs = valuation_values(u, v, m)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return EnergyReport(
        "valuation", m, 2, lhs, rhs, lhs == rhs, len(u.ambient), elapsed
    )


def local_valuation_check(g: Complex, xs, m: int) -> EnergyReport:
    """Check w_m(B(X)) = w_m(U(X)) - (-1)^m * w_m(S(X)) for a configuration."""
    from .topology import ball, sphere, star_intersection

    X = configuration(g, xs)
    if m < 1:
        raise InputError("the arity m must be at least 1")
    t0 = time.perf_counter()
    lhs = w_m(ball(g, X), m)
    rhs = w_m(star_intersection(g, X), m) - (-1) ** m * w_m(sphere(g, X), m)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return EnergyReport(
        "local-valuation", m, len(X), lhs, rhs, lhs == rhs, len(g), elapsed
    )


def green(
    g: Complex,
    xs,
    m: int | None = None,
    h: InteractionFunction | None = None,
) -> int:
    """The k-point potential weight(X) * w_m(U(X)); zero when U(X) is empty."""
    from .topology import star_intersection

    X = configuration(g, xs)
    u = star_intersection(g, X)
    if h is None:
        if m is None:
            raise InputError("green needs either m or an interaction function")
        val = w_m(u, m)
    else:
        val = w_m_energized(u, h)
    return config_weight(X) * val


def curvature_profile(g: Complex, m: int) -> tuple[tuple[Simplex, int], ...]:
    """Per-simplex energies weight(x) * w_m(U(x)); they sum to w_m(G)."""
    if m < 1:
        raise InputError("the arity m must be at least 1")
    table = _star_wm(g, m)
    return tuple((s, s.weight * table[s.bits]) for s in g.simplices)
