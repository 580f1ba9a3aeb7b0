import pytest
from hypothesis import given, settings, strategies as st

from hatkit.autsearch import (
    are_isomorphic,
    automorphism_group,
    canonical_form,
    has_orbit_swapper,
    is_arc_transitive,
)
from hatkit.constructions import (
    XeParams,
    XoParams,
    build_circulant,
    build_xe,
    build_xo,
)
from hatkit.errors import SearchBudgetExceededError
from hatkit.graphcore import build_graph, edge_key, is_automorphism
from hatkit.perm import Permutation


def cycle_graph(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen():
    return build_graph(10, [(i, (i + 1) % 5) for i in range(5)]
                       + [(i, i + 5) for i in range(5)]
                       + [(i + 5, (i + 2) % 5 + 5) for i in range(5)])


def relabel(g, p):
    return build_graph(g.n, [edge_key(p(u), p(v)) for u, v in g.edges])


class TestAutomorphismGroup:
    def test_cycle(self):
        assert automorphism_group(cycle_graph(7)).order() == 14

    def test_complete(self):
        assert automorphism_group(complete_graph(5)).order() == 120

    def test_petersen(self):
        assert automorphism_group(petersen()).order() == 120

    def test_smallest_half_arc_transitive(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        aut = automorphism_group(g)
        assert aut.order() == 54 == 2 * g.n
        # the full automorphism group is exactly the construction group
        assert aut.elements() == grp.elements()

    def test_generators_verified(self):
        g = petersen()
        for p in automorphism_group(g).generators:
            assert is_automorphism(g, p)

    def test_budget(self):
        with pytest.raises(SearchBudgetExceededError):
            automorphism_group(complete_graph(8), budget=3)


class TestCanonicalForm:
    @given(st.permutations(range(8)))
    @settings(max_examples=25, deadline=None)
    def test_relabeling_invariance(self, images):
        g = build_circulant(8, {1, -1, 3, -3})
        h = relabel(g, Permutation(tuple(images)))
        assert canonical_form(g).cert == canonical_form(h).cert

    def test_distinguishes_non_isomorphic(self):
        c8 = build_circulant(8, {1, -1, 2, -2})
        k44 = build_circulant(8, {1, -1, 3, -3})
        assert canonical_form(c8).cert != canonical_form(k44).cert


class TestIsomorphism:
    def test_reference_negatives(self):
        g1, _ = build_xo(XoParams(6, 13, 2))
        g2, _ = build_xo(XoParams(6, 13, 3))
        assert are_isomorphic(g1, g2) == (False, None)
        g3, _ = build_xe(XeParams(4, 20, 3, 0))
        g4, _ = build_xe(XeParams(4, 20, 3, 10))
        assert are_isomorphic(g3, g4) == (False, None)

    def test_parameter_symmetry(self):
        g1, _ = build_xo(XoParams(3, 9, 2))
        g2, _ = build_xo(XoParams(3, 9, 7))  # 7 = -2 mod 9
        g3, _ = build_xo(XoParams(3, 9, 5))  # 5 = 2^-1 mod 9
        ok, witness = are_isomorphic(g1, g2)
        assert ok and witness is not None
        assert are_isomorphic(g1, g3)[0]

    def test_witness_is_verified_automorphism_transport(self):
        g = petersen()
        h = relabel(g, Permutation((3, 1, 4, 0, 5, 9, 2, 6, 8, 7)))
        ok, w = are_isomorphic(g, h)
        assert ok
        for u, v in g.edges:
            assert h.has_edge(w(u), w(v))

    def test_size_mismatch(self):
        assert are_isomorphic(cycle_graph(5), cycle_graph(6)) == (False, None)


class TestArcTransitivity:
    def test_reference_circulants(self):
        assert not is_arc_transitive(build_circulant(13, {1, -1, 3, -3}))
        assert is_arc_transitive(build_circulant(5, {1, -1, 2, -2}))

    def test_cycle(self):
        assert is_arc_transitive(cycle_graph(6))

    def test_half_arc_transitive_graph(self):
        g, _ = build_xo(XoParams(3, 9, 2))
        assert not is_arc_transitive(g)


class TestOrbitSwapper:
    def test_half_arc_transitive_graph_has_none(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        assert not has_orbit_swapper(g, grp)

    def test_arc_transitive_ambient_group_has_one(self):
        # the two-cycle circulant is K_{4,4}, whose full automorphism group
        # reverses the chosen orientation
        from hatkit.constructions import special_circulant_k44
        g, grp = special_circulant_k44()
        assert has_orbit_swapper(g, grp)
