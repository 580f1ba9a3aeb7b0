import pytest

from hatkit.alternating import AltStructure, analyze
from hatkit.constructions import (
    XeParams,
    XoParams,
    build_cubic_arc_graph,
    build_wreath,
    build_xe,
    build_xo,
    special_circulant_k44,
    wreath_hat_group,
)
from hatkit.errors import (
    BlocksNotInvariantError,
    InconsistentError,
    PreconditionFailedError,
    TooFewCyclesError,
)
from hatkit.graphcore import build_graph, certify_hat
from hatkit.perm import GroupByGenerators, Permutation, group_structure
from hatkit.quotients import (
    BlockSystem,
    alt_graph,
    attachment_partition,
    classify_kernel,
    construction_b,
    kernels,
    psi_isomorphism,
    quotient_action,
    quotient_graph,
    thm_pipeline,
)


def analyzed(g, grp):
    return analyze(certify_hat(g, grp).orientation)


def k4_arc_instance():
    from hatkit.autsearch import automorphism_group
    k4 = build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    return build_cubic_arc_graph(k4, automorphism_group(k4))


def stub_structure(r, a):
    """Bare (r, a) carrier for exercising the classification table rows
    that have no desk-scale instance."""
    return AltStructure(cycles=(), radius=r, attachment=a, ell=2 * r // a,
                        attachment_sets=(), q_t=1, q_h=1, jum=1,
                        incidence={}, tail_cycle={})


def cyclic_group(k, degree=None):
    degree = degree or k
    return GroupByGenerators(
        (Permutation.from_mapping(degree, lambda x: (x + 1) % k
                                  if x < k else x),), degree=degree)


class TestBlockSystems:
    def test_attachment_partition_layers(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        b = attachment_partition(analyzed(g, grp))
        assert b.block_count == 3 and b.block_size == 9
        # the attachment sets are the layers of the construction
        assert b.blocks == tuple(frozenset(range(9 * i, 9 * i + 9))
                                 for i in range(3))

    def test_xe_partition(self):
        g, grp = build_xe(XeParams(4, 20, 3, 0))
        b = attachment_partition(analyzed(g, grp))
        assert b.block_count == 4 and b.block_size == 20

    def test_construction_b_even_ell_equals_attachment(self):
        g, grp = build_xo(XoParams(3, 9, 2))  # ell = 2
        s = analyzed(g, grp)
        assert construction_b(s).blocks == attachment_partition(s).blocks

    def test_construction_b_odd_ell_halves(self):
        g, grp = k4_arc_instance()  # a = 2, ell = 3
        s = analyzed(g, grp)
        b = construction_b(s)
        assert b.block_size == 1 and b.block_count == g.n


class TestQuotientGraph:
    def test_tight_quotient_is_triangle(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        q = quotient_graph(g, attachment_partition(analyzed(g, grp)))
        assert q.graph.n == 3 and len(q.graph.edges) == 3
        # a tightly attached graph collapses to a cycle: flagged degenerate
        assert q.degenerate and q.multiplicity > 1

    def test_singleton_blocks_identity_quotient(self):
        g, grp = k4_arc_instance()
        s = analyzed(g, grp)
        q = quotient_graph(g, construction_b(s))
        assert q.graph.edge_set == g.edge_set
        assert q.multiplicity == 1

    def test_wreath_fiber_quotient_degenerate(self):
        n = 5
        g = build_wreath(n)
        fibers = BlockSystem(tuple(frozenset({2 * i, 2 * i + 1})
                                   for i in range(n)), "AttachmentSets", 1)
        q = quotient_graph(g, fibers)
        assert q.multiplicity == 4 and q.degenerate
        assert q.graph.is_regular(2)


class TestAltGraph:
    def test_triangle(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        a = alt_graph(analyzed(g, grp))
        assert a.n == 3 and len(a.edges) == 3

    def test_cycle_for_larger_m(self):
        g, grp = build_xo(XoParams(5, 11, 3))
        a = alt_graph(analyzed(g, grp))
        assert a.n == 5 and a.is_regular(2) and a.is_connected

    def test_two_cycles_rejected(self):
        g, grp = special_circulant_k44()
        with pytest.raises(TooFewCyclesError):
            alt_graph(analyzed(g, grp))


class TestKernels:
    def test_reference_kernels(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        ks = kernels(g, grp, analyzed(g, grp))
        assert (ks["K_alt"].elements() == ks["K_B"].elements()
                == ks["K_A"].elements())
        assert ks["K_alt"].order() == 18
        assert str(group_structure(ks["K_alt"])) == "Dihedral(18)"

    def test_wreath_kernel_elementary_abelian(self):
        n = 5
        g = build_wreath(n)
        grp = wreath_hat_group(n)
        ks = kernels(g, grp, analyzed(g, grp))
        assert str(group_structure(ks["K_alt"])) == f"ElemAbelian2({n})"

    def test_degenerate_kernel_dihedral(self):
        g, grp = special_circulant_k44()
        ks = kernels(g, grp, analyzed(g, grp))
        assert str(group_structure(ks["K_alt"])) == "Dihedral(8)"

    def test_arc_graph_kernel_trivial(self):
        g, grp = k4_arc_instance()
        ks = kernels(g, grp, analyzed(g, grp))
        assert ks["K_alt"].order() == 1


class TestClassify:
    def test_case_iii(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        s = analyzed(g, grp)
        case = classify_kernel(s, kernels(g, grp, s)["K_alt"])
        assert case.case == "iii" and str(case.observed) == "Dihedral(18)"

    def test_case_i(self):
        g, grp = special_circulant_k44()
        s = analyzed(g, grp)
        case = classify_kernel(s, kernels(g, grp, s)["K_alt"])
        assert case.case == "i" and str(case.observed) == "Dihedral(8)"

    def test_case_ii(self):
        g = build_wreath(4)
        grp = wreath_hat_group(4)
        s = analyzed(g, grp)
        assert classify_kernel(s, kernels(g, grp, s)["K_alt"]).case == "ii"

    def test_case_v(self):
        g, grp = k4_arc_instance()
        s = analyzed(g, grp)
        assert classify_kernel(s, kernels(g, grp, s)["K_alt"]).case == "v"

    def test_case_iv_table_row(self):
        # no desk-scale instance exists with 3 <= a < r, a | r; the table
        # row itself is exercised with a synthetic kernel
        case = classify_kernel(stub_structure(r=12, a=3), cyclic_group(3))
        assert case.case == "iv" and str(case.observed) == "Cyclic(3)"

    def test_case_iv_a2_trivial_allowed(self):
        case = classify_kernel(stub_structure(r=4, a=2),
                               GroupByGenerators.trivial(4))
        assert case.case == "iv" and case.consistent

    def test_inconsistent_raises(self):
        with pytest.raises(InconsistentError):
            classify_kernel(stub_structure(r=12, a=3), cyclic_group(4))


class TestQuotientAction:
    def test_induced_order(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        s = analyzed(g, grp)
        b = attachment_partition(s)
        ks = kernels(g, grp, s)
        induced = quotient_action(grp, b, kernel=ks["K_A"])
        assert induced.order() == grp.order() // ks["K_A"].order()

    def test_non_invariant_blocks_rejected(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        bad = BlockSystem(tuple(frozenset({3 * i, 3 * i + 1, 3 * i + 2})
                                for i in range(9)), "AttachmentSets", 1)
        with pytest.raises(BlocksNotInvariantError):
            quotient_action(grp, bad)

    def test_trivial_group(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        b = attachment_partition(analyzed(g, grp))
        induced = quotient_action(GroupByGenerators.trivial(g.n), b)
        assert induced.order() == 1


class TestPsi:
    def test_arc_graph_psi(self):
        g, grp = k4_arc_instance()
        s = analyzed(g, grp)
        b = construction_b(s)
        q = quotient_graph(g, b)
        induced = quotient_action(grp, b)
        q_s = analyze(certify_hat(q.graph, induced).orientation)
        mapping = psi_isomorphism(s, b, q_s)
        assert sorted(mapping) == list(range(len(s.cycles)))
        assert sorted(set(mapping.values())) == list(range(len(q_s.cycles)))

    def test_precondition(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        s = analyzed(g, grp)
        with pytest.raises(PreconditionFailedError):
            psi_isomorphism(s, attachment_partition(s), s)


class TestPipeline:
    def test_tight_outcome(self):
        g, grp = build_xo(XoParams(3, 9, 2))
        report = thm_pipeline(g, grp)
        assert report["outcome"] == "tight"

    def test_arc_graph_outcome(self):
        g, grp = k4_arc_instance()
        report = thm_pipeline(g, grp)
        assert report["outcome"] == "quotient"
        assert report["quotient_kind"] == "antipodal"
        assert report["kernel"] == "Trivial"
        assert "psi_cycle_map" in report

    def test_degenerate_rejected(self):
        g, grp = special_circulant_k44()
        with pytest.raises(PreconditionFailedError):
            thm_pipeline(g, grp)

    def test_wreath_tight(self):
        g = build_wreath(6)
        report = thm_pipeline(g, wreath_hat_group(6))
        assert report["outcome"] == "tight"
