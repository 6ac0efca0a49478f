import itertools

import pytest
from hypothesis import given, settings

from higherchar.complexes import (
    Complex,
    Simplex,
    SimplexSubset,
    boundary_set,
    closure,
    f_vector,
    is_complex,
    join,
    whitney,
)
from higherchar.errors import DomainError, InputError, ResourceBudgetError
from higherchar.generators import cross_polytope, cycle

from strategies import random_complexes


def verts(g):
    return [s.vertices for s in g]


class TestSimplex:
    def test_basic(self):
        s = Simplex([2, 1])
        assert s.vertices == (1, 2)
        assert s.dim == 1
        assert s.weight == -1
        assert Simplex([5]).weight == 1

    def test_duplicates_collapse(self):
        assert Simplex([1, 1, 2]) == Simplex([1, 2])

    def test_empty_rejected(self):
        with pytest.raises(InputError):
            Simplex([])

    def test_negative_rejected(self):
        with pytest.raises(InputError):
            Simplex([-1, 2])

    def test_from_bits_zero_rejected(self):
        with pytest.raises(InputError):
            Simplex.from_bits(0)

    def test_canonical_order(self):
        ss = sorted([Simplex([1, 2]), Simplex([3]), Simplex([1]), Simplex([1, 3])])
        assert [s.vertices for s in ss] == [(1,), (3,), (1, 2), (1, 3)]


class TestClosure:
    def test_void(self):
        assert len(closure([])) == 0

    def test_single_edge(self):
        assert verts(closure([{1, 2}])) == [(1,), (2,), (1, 2)]  # canonical: dim, then lex

    def test_two_edges(self):
        # all nonempty subsets of each facet, deduplicated
        got = verts(closure([{1, 2}, {2, 3}]))
        assert got == [(1,), (2,), (3,), (1, 2), (2, 3)]

    def test_idempotent_and_monotone(self):
        a = closure([{1, 2, 3}])
        assert closure(a.simplices) == a
        b = closure([{1, 2, 3}, {3, 4}])
        assert set(a.simplices) <= set(b.simplices)

    def test_budget(self):
        with pytest.raises(ResourceBudgetError):
            closure([range(1, 12)], simplex_budget=100)


class TestComplex:
    def test_validation(self):
        with pytest.raises(InputError):
            Complex([{1, 2}])
        Complex([{1}, {2}, {1, 2}])  # fine

    def test_empty_is_allowed(self):
        g = Complex.empty()
        assert len(g) == 0 and g.dim == -1 and g.f_vector == ()

    def test_facets(self):
        g = closure([{1, 2}, {2, 3}])
        assert sorted(s.vertices for s in g.facets()) == [(1, 2), (2, 3)]

    def test_is_complex(self):
        assert is_complex([{1}, {2}, {1, 2}])
        assert not is_complex([{1, 2}])
        assert is_complex([])


class TestFVector:
    def test_octahedron(self):
        assert f_vector(cross_polytope(2)) == (6, 12, 8)

    def test_k2(self):
        assert f_vector(closure([{1, 2}])) == (2, 1)

    def test_c4(self):
        assert f_vector(cycle(4)) == (4, 4)

    @given(random_complexes())
    @settings(max_examples=100, deadline=None)
    def test_alternating_sum_is_euler(self, g):
        from higherchar.characteristics import w_m

        fv = g.f_vector
        assert sum((-1) ** i * c for i, c in enumerate(fv)) == w_m(g, 1)
        assert sum(fv) == len(g)


class TestWhitney:
    def test_triangle(self):
        g = whitney([1, 2, 3], [(1, 2), (2, 3), (1, 3)])
        assert g.f_vector == (3, 3, 1)

    def test_four_cycle(self):
        g = whitney([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 4)])
        assert g.f_vector == (4, 4)

    def test_isolated_vertices(self):
        g = whitney([1, 2, 3], [(1, 2)])
        assert verts(g) == [(1,), (2,), (3,), (1, 2)]

    def test_unknown_vertex_rejected(self):
        with pytest.raises(InputError):
            whitney([1, 2], [(1, 3)])

    def test_self_loop_rejected(self):
        with pytest.raises(InputError):
            whitney([1, 2], [(1, 1)])

    def test_against_brute_force_clique_oracle(self):
        # oracle: test every vertex subset for pairwise adjacency
        edges = [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5), (1, 5)]
        vs = [1, 2, 3, 4, 5]
        adj = {frozenset(e) for e in edges}
        expected = []
        for r in range(1, len(vs) + 1):
            for sub in itertools.combinations(vs, r):
                if all(frozenset(p) in adj for p in itertools.combinations(sub, 2)):
                    expected.append(sub)
        got = whitney(vs, edges)
        assert verts(got) == sorted(expected, key=lambda t: (len(t), t))

    @given(random_complexes())
    @settings(max_examples=25, deadline=None)
    def test_random_whitney_is_complex(self, g):
        assert is_complex(g.simplices)

    def test_simplex_budget(self):
        with pytest.raises(ResourceBudgetError):
            whitney(range(12), [(i, j) for i in range(12) for j in range(i + 1, 12)],
                    simplex_budget=50)


class TestJoin:
    def test_zero_spheres_make_circle(self):
        s0a = Complex([[1], [2]])
        s0b = Complex([[3], [4]])
        j = join(s0a, s0b)
        assert j.f_vector == (4, 4)
        assert j == cross_polytope(1)

    def test_circle_plus_points_is_octahedron(self):
        c4 = cross_polytope(1)
        poles = Complex([[5], [6]])
        octa = join(c4, poles)
        assert octa.f_vector == (6, 12, 8)
        assert octa == cross_polytope(2)

    def test_void_is_neutral(self):
        g = closure([{1, 2}])
        assert join(Complex.empty(), g) == g
        assert join(g, Complex.empty()) == g

    def test_overlap_rejected_and_relabel(self):
        g = Complex([[1], [2]])
        with pytest.raises(InputError):
            join(g, g)
        j = join(g, g, relabel=True)
        assert j.f_vector == (4, 4)

    def test_associative_on_disjoint_labels(self):
        a = Complex([[1], [2]])
        b = Complex([[3], [4]])
        c = Complex([[5], [6]])
        assert join(join(a, b), c) == join(a, join(b, c))


class TestBoundarySet:
    def test_edge(self):
        b = boundary_set([Simplex([1, 2])])
        assert sorted(s.vertices for s in b.members) == [(1,), (2,)]

    def test_closed_has_empty_boundary(self):
        g = closure([{1, 2, 3}])
        assert len(boundary_set(g)) == 0

    def test_star_boundary_in_cycle(self):
        from higherchar.topology import star

        g = cycle(4)
        u = star(g, {1})
        b = boundary_set(u)
        assert sorted(s.vertices for s in b.members) == [(2,), (4,)]


class TestSimplexSubset:
    def test_membership_enforced(self):
        g = closure([{1, 2}])
        with pytest.raises(DomainError):
            SimplexSubset(g, [{3}])

    def test_open_closed_classification(self):
        g = closure([{1, 2}])
        assert SimplexSubset(g, [{1, 2}]).is_open_set()
        assert not SimplexSubset(g, [{1, 2}]).is_closed_set()
        assert SimplexSubset(g, [{1}]).is_closed_set()
        assert not SimplexSubset(g, [{1}]).is_open_set()
        whole = SimplexSubset(g, g.simplices)
        assert whole.is_open_set() and whole.is_closed_set()

    def test_complement_union_intersection(self):
        g = closure([{1, 2}])
        a = SimplexSubset(g, [{1}])
        c = a.complement()
        assert len(c) == 2
        assert len(a.union(c)) == 3
        assert len(a.intersection(c)) == 0
