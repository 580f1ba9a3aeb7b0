import pytest

from hatkit.alternating import (
    alt_bipartition,
    alternating_cycles,
    analyze,
    antipodal_tau,
    associated_circulant,
    build_rho,
    check_mult_lemma,
    min_r_jump,
    rotation_profile,
    verify_gta_jump,
)
from hatkit.constructions import (
    XeParams,
    XoParams,
    build_circulant,
    build_cubic_arc_graph,
    build_wreath,
    build_xe,
    build_xo,
    special_circulant_k44,
    wreath_hat_group,
)
from hatkit.errors import (
    AlternatingStructureError,
    NotCyclePreservingError,
    PreconditionFailedError,
)
from hatkit.graphcore import certify_hat, orientation_from_arcs, reverse_orientation
from hatkit.quotients import kernels


def oriented(g, grp):
    return certify_hat(g, grp).orientation


def analyzed(builder, p):
    g, grp = builder(p)
    return g, grp, analyze(oriented(g, grp))


def loose_orientation(k):
    """A radius-2 orientation whose alternating 4-cycles pairwise meet in at
    most one vertex: vertices are the edges of Circ_k({+-1, +-2}); the i-th
    4-cycle runs tail {i,i+1}, head {i,i-1}, tail {i,i+2}, head {i,i-2}."""
    labels = sorted({frozenset({i % k, j % k})
                     for i in range(k) for j in (i + 1, i + 2)},
                    key=sorted)
    idx = {lab: x for x, lab in enumerate(labels)}

    def v(a, b):
        return idx[frozenset({a % k, b % k})]

    arcs = []
    for i in range(k):
        arcs.append((v(i, i + 1), v(i, i - 1)))
        arcs.append((v(i, i + 2), v(i, i - 1)))
        arcs.append((v(i, i + 2), v(i, i - 2)))
        arcs.append((v(i, i + 1), v(i, i - 2)))
    from hatkit.graphcore import build_graph
    edges = sorted({tuple(sorted(a)) for a in arcs})
    return orientation_from_arcs(build_graph(2 * k, edges), arcs)


class TestAlternatingCycles:
    def test_xo_cycle_count_and_length(self):
        _g, _grp, s = analyzed(build_xo, XoParams(3, 9, 2))
        assert len(s.cycles) == 3
        assert all(len(c) == 18 for c in s.cycles)

    def test_xe_cycle_count(self):
        _g, _grp, s = analyzed(build_xe, XeParams(4, 20, 3, 0))
        assert len(s.cycles) == 4
        assert all(len(c) == 40 for c in s.cycles)

    def test_wreath_cycles(self):
        for n in (3, 6):
            g = build_wreath(n)
            cycles = alternating_cycles(oriented(g, wreath_hat_group(n)))
            assert len(cycles) == n
            assert all(len(c) == 4 for c in cycles)

    def test_each_edge_in_one_cycle(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        cycles = alternating_cycles(oriented(g, grp))
        seen = []
        for c in cycles:
            for i in range(len(c)):
                seen.append(tuple(sorted((c[i - 1], c[i]))))
        assert sorted(seen) == sorted(g.edges)

    def test_normalization(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        for c in alternating_cycles(oriented(g, grp)):
            assert c[0] == min(c)
            assert c[1] < c[-1]

    def test_vertex_repeating_walk_rejected(self):
        # K5 oriented x -> x+1, x -> x+2: the walk revisits vertices
        g = build_circulant(5, {1, -1, 2, -2})
        og = orientation_from_arcs(
            g, [(x, (x + d) % 5) for x in range(5) for d in (1, 2)])
        with pytest.raises(AlternatingStructureError):
            analyze(og)


class TestAnalyze:
    def test_reference_values(self):
        _g, _grp, s = analyzed(build_xo, XoParams(3, 9, 2))
        assert (s.radius, s.attachment) == (9, 9)
        assert s.Q == {2, 4} and s.jum == 2
        assert s.attachment_kind == "tight"

    def test_even_family_values(self):
        for t in (0, 10):
            _g, _grp, s = analyzed(build_xe, XeParams(4, 20, 3, t))
            assert s.attachment == 20 and s.Q == {3, 7}

    def test_odd_13(self):
        _g, _grp, s = analyzed(build_xo, XoParams(3, 13, 3))
        assert s.attachment == 13 and s.jum == 3

    def test_attachment_two_gives_q_one(self):
        from hatkit.autsearch import automorphism_group
        from hatkit.graphcore import build_graph
        k4 = build_graph(4, [(i, j) for i in range(4)
                             for j in range(i + 1, 4)])
        g, grp = build_cubic_arc_graph(k4, automorphism_group(k4))
        s = analyze(oriented(g, grp))
        assert s.attachment == 2 and s.Q == {1}

    def test_loose_orientation(self):
        s = analyze(loose_orientation(7))
        assert s.radius == 2 and s.attachment == 1
        assert s.Q == {0} and s.jum == 0
        assert s.attachment_kind == "loose"
        assert all(len(b) == 1 for b in s.attachment_sets)

    def test_degenerate_two_cycles(self):
        g, grp = special_circulant_k44()
        s = analyze(oriented(g, grp))
        assert s.attachment == 2 * s.radius == 8
        assert len(s.cycles) == 2

    def test_reverse_orientation_swaps_jump_roles(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        s = analyze(oriented(g, grp))
        s_rev = analyze(reverse_orientation(oriented(g, grp)))
        assert (s_rev.q_t, s_rev.q_h) == (s.q_h, s.q_t)
        assert s_rev.Q == s.Q

    def test_attachment_sets_partition(self):
        g, grp = build_xe(XeParams(4, 8, 3, 0))
        s = analyze(oriented(g, grp))
        union = set()
        for b in s.attachment_sets:
            assert len(b) == s.attachment
            assert not (union & b)
            union |= b
        assert union == set(range(g.n))


class TestJumpLemmas:
    def test_grid_jump_formula(self):
        assert min_r_jump(2, 9) == 2  # min{2, 7, 5, 4}
        assert verify_gta_jump(XoParams(3, 9, 2))
        assert verify_gta_jump(XoParams(6, 13, 3))
        assert verify_gta_jump(XoParams(6, 13, 2))
        assert verify_gta_jump(XeParams(4, 20, 3, 10))

    def test_mult_lemma(self):
        for builder, p in ((build_xo, XoParams(3, 9, 2)),
                           (build_xe, XeParams(4, 20, 3, 10))):
            g, grp = builder(p)
            og = oriented(g, grp)
            ok, witness = check_mult_lemma(analyze(og), og)
            assert ok and witness is None

    def test_mult_lemma_vacuous_for_loose(self):
        og = loose_orientation(7)
        ok, witness = check_mult_lemma(analyze(og), og)
        assert ok and witness is None


class TestAssociatedCirculant:
    def test_from_x13(self):
        _g, _grp, s = analyzed(build_xo, XoParams(3, 13, 3))
        c = associated_circulant(s)
        expected = build_circulant(13, {1, -1, 3, -3})
        assert c.edge_set == expected.edge_set

    def test_degenerate_small(self):
        og = loose_orientation(7)
        assert associated_circulant(analyze(og)).n == 1


class TestTau:
    def test_wreath_tau(self):
        g = build_wreath(6)
        og = oriented(g, wreath_hat_group(6))
        s = analyze(og)
        tau = antipodal_tau(og, s)
        assert tau is not None
        assert (tau * tau).is_identity()
        assert not tau.is_identity()

    def test_precondition_odd_radius(self):
        from hatkit.autsearch import automorphism_group
        from hatkit.graphcore import build_graph
        k4 = build_graph(4, [(i, j) for i in range(4)
                             for j in range(i + 1, 4)])
        g, grp = build_cubic_arc_graph(k4, automorphism_group(k4))
        og = oriented(g, grp)
        with pytest.raises(PreconditionFailedError):
            antipodal_tau(og, analyze(og))

    def test_precondition_wrong_attachment(self):
        g, grp = build_xe(XeParams(4, 8, 3, 0))
        og = oriented(g, grp)
        with pytest.raises(PreconditionFailedError):
            antipodal_tau(og, analyze(og))


class TestRotationProfile:
    def test_identity_is_zero_rotation(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        s = analyze(oriented(g, grp))
        prof = rotation_profile(grp.identity, s)
        assert all(entry == ("rotation", 0) for entry in prof.values())

    def test_kernel_contains_rotations_and_reflections(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        og = oriented(g, grp)
        s = analyze(og)
        kinds = set()
        for p in kernels(g, grp, s)["K_alt"].elements():
            kinds |= {kind for kind, _ in rotation_profile(p, s).values()}
        assert kinds == {"rotation", "reflection"}

    def test_non_preserving_rejected(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        s = analyze(oriented(g, grp))
        sigma = grp.generators[1]  # shifts layers, permutes the cycles
        with pytest.raises(NotCyclePreservingError):
            rotation_profile(sigma, s)


class TestBipartition:
    def test_triangle_alt_not_bipartite(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        s = analyze(oriented(g, grp))
        assert alt_bipartition(s) is None

    def test_even_cycle_alt_bipartite(self):
        g, grp = build_xo(XoParams(4, 5, 2))
        s = analyze(oriented(g, grp))
        assert alt_bipartition(s) is not None


class TestBuildRho:
    def test_rejects_divisible_attachment(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        og = oriented(g, grp)
        s = analyze(og)
        gamma = grp.identity
        with pytest.raises(PreconditionFailedError):
            build_rho(og, s, grp, gamma)

    def test_rejects_small_attachment(self):
        from hatkit.autsearch import automorphism_group
        from hatkit.graphcore import build_graph
        k4 = build_graph(4, [(i, j) for i in range(4)
                             for j in range(i + 1, 4)])
        g, grp = build_cubic_arc_graph(k4, automorphism_group(k4))
        og = oriented(g, grp)
        s = analyze(og)
        with pytest.raises(PreconditionFailedError):
            build_rho(og, s, grp, grp.identity)
