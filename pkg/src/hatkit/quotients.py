"""Block systems over the attachment structure, quotient graphs, the
alternating-cycle graph, the three setwise-fixing kernels and their
structural classification, induced quotient actions, and the cycle-level
isomorphism between the alternating-cycle graphs of a graph and of its
quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

from .alternating import AltStructure, analyze, antipodal_tau
from .errors import (
    BlocksNotInvariantError,
    InconsistentError,
    PreconditionFailedError,
    TooFewCyclesError,
)
from .graphcore import Graph, build_graph, certify_hat, edge_key
from .perm import (
    GroupByGenerators,
    Permutation,
    StructureTag,
    action_kernel,
    group_structure,
    setwise_action,
)


@dataclass(frozen=True)
class BlockSystem:
    """A partition of the vertex set into equal-size blocks.

    kind "AttachmentSets": the pairwise cycle intersections (block size a).
    kind "ConstructionB": for even ell identical to the attachment sets;
    for odd ell each attachment set splits into its two orientation-role
    halves (block size a/2).  s is the half-step parameter (ell/2 or ell).
    """

    blocks: tuple  # tuple of frozensets, ordered by least element
    kind: str
    s: int

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def block_of(self) -> dict:
        out = {}
        for k, b in enumerate(self.blocks):
            for v in b:
                out[v] = k
        return out


def _sorted_blocks(blocks) -> tuple:
    return tuple(sorted((frozenset(b) for b in blocks), key=min))


def attachment_partition(s: AltStructure) -> BlockSystem:
    return BlockSystem(blocks=_sorted_blocks(s.attachment_sets),
                       kind="AttachmentSets", s=s.ell // 2 if s.ell % 2 == 0
                       else s.ell)


def construction_b(s: AltStructure) -> BlockSystem:
    """The half-step block system.

    For even ell this is exactly the attachment partition.  For odd ell the
    double-step orbit through a vertex picks out every other attachment
    position, i.e. the vertices sharing that vertex's orientation role
    (double tail vs double head) on the cycle, so each attachment set splits
    into its two role-halves of size a/2.
    """
    if s.ell % 2 == 0:
        return BlockSystem(blocks=_sorted_blocks(s.attachment_sets),
                           kind="ConstructionB", s=s.ell // 2)
    blocks = []
    for aset in s.attachment_sets:
        c1, c2 = sorted({cid for v in aset for cid, _ in s.incidence[v]})
        half_t = frozenset(v for v in aset if s.tail_cycle[v] == c1)
        half_h = aset - half_t
        if len(half_t) != len(half_h):
            raise InconsistentError(
                {"attachment_set": sorted(aset),
                 "reason": "role halves of unequal size"})
        blocks.extend([half_t, half_h])
    return BlockSystem(blocks=_sorted_blocks(blocks), kind="ConstructionB",
                       s=s.ell)


@dataclass(frozen=True)
class QuotientGraph:
    """Simple quotient on the blocks, remembering how many original edges
    lie over each quotient edge.  degenerate flags the cycle-with-doubled-
    edges pattern, which is excluded from half-arc-transitivity analysis."""

    graph: Graph
    multiplicity: int
    degenerate: bool
    edge_counts: dict = field(compare=False)  # quotient edge -> fiber size


def quotient_graph(g: Graph, b: BlockSystem) -> QuotientGraph:
    block_of = b.block_of()
    if len(block_of) != g.n:
        raise ValueError("block system does not partition the vertex set")
    counts: Dict[tuple, int] = {}
    for u, v in g.edges:
        bu, bv = block_of[u], block_of[v]
        if bu == bv:
            continue
        counts[edge_key(bu, bv)] = counts.get(edge_key(bu, bv), 0) + 1
    q = build_graph(len(b.blocks), sorted(counts))
    mult = max(counts.values()) if counts else 0
    degenerate = (mult >= 2 and q.n >= 3 and q.is_connected
                  and q.is_regular(2))
    return QuotientGraph(graph=q, multiplicity=mult, degenerate=degenerate,
                         edge_counts=counts)


def alt_graph(s: AltStructure) -> Graph:
    """Graph on the alternating cycles, adjacent when they intersect."""
    if len(s.cycles) < 3:
        raise TooFewCyclesError(
            f"only {len(s.cycles)} alternating cycles; the cycle graph is "
            "degenerate when the two cycles exhaust the vertex set")
    sets = s.cycle_sets
    edges = []
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j]:
                edges.append((i, j))
    return build_graph(len(sets), edges)


def kernels(g: Graph, group: GroupByGenerators, s: AltStructure) -> dict:
    """The three setwise-fixing kernels: on the alternating cycles, on the
    half-step blocks, and on the attachment sets."""
    k_alt = action_kernel(
        group, s.cycle_edge_sets,
        lambda es, p: frozenset(edge_key(p(u), p(v)) for u, v in es))
    k_b = action_kernel(group, construction_b(s).blocks, setwise_action)
    k_a = action_kernel(group, attachment_partition(s).blocks, setwise_action)
    return {"K_alt": k_alt, "K_B": k_b, "K_A": k_a}


@dataclass(frozen=True)
class KernelCase:
    """Classification of the cycle-fixing kernel by (r, a)."""

    case: str  # "i" | "ii" | "iii" | "iv" | "v"
    expected: str
    observed: StructureTag
    consistent: bool


def _is_cyclic_of(tag: StructureTag, k: int) -> bool:
    if k == 1:
        return tag.kind == "Trivial"
    if k == 2:
        return tag.kind == "Cyclic" and tag.param == 2
    return tag.kind == "Cyclic" and tag.param == k


def classify_kernel(s: AltStructure, K: GroupByGenerators) -> KernelCase:
    """Match the kernel against the five-case structure table:

    (i)   a = 2r       -> dihedral of order 2r
    (ii)  a = r = 2    -> subgroup of an elementary abelian 2-group
    (iii) a = r > 2    -> dihedral of order 2a
    (iv)  a < r, a | r -> cyclic of order a (possibly trivial when a = 2)
    (v)   a < r, a ∤ r -> cyclic of order a/2

    Raises InconsistentError when the observed structure does not fit --
    that signals a bug or an invalid input, never a new mathematical fact.
    """
    a, r = s.attachment, s.radius
    tag = group_structure(K)
    if a == 2 * r:
        case, expected = "i", f"Dihedral({2 * r})"
        ok = (tag.kind == "Dihedral" and tag.param == 2 * r) or \
            (r == 1 and _is_cyclic_of(tag, 2)) or \
            (r == 2 and tag.kind == "ElemAbelian2" and tag.param == 2)
    elif a == r == 2:
        case, expected = "ii", "subgroup of ElemAbelian2(*)"
        ok = tag.kind in ("Trivial", "ElemAbelian2") or _is_cyclic_of(tag, 2)
    elif a == r:
        case, expected = "iii", f"Dihedral({2 * a})"
        ok = tag.kind == "Dihedral" and tag.param == 2 * a
    elif r % a == 0:
        case, expected = "iv", f"Cyclic({a})"
        ok = _is_cyclic_of(tag, a) or (a == 2 and tag.kind == "Trivial")
    else:
        case, expected = "v", f"Cyclic({a // 2})"
        ok = _is_cyclic_of(tag, a // 2)
    if not ok:
        raise InconsistentError(
            {"case": case, "expected": expected, "observed": str(tag),
             "r": r, "a": a, "order": K.order()})
    return KernelCase(case=case, expected=expected, observed=tag,
                      consistent=True)


def quotient_action(group: GroupByGenerators, b: BlockSystem,
                    kernel: Optional[GroupByGenerators] = None
                    ) -> GroupByGenerators:
    """Induced permutation group on the blocks.  When the block kernel is
    supplied, the induced order is verified to be |G| / |kernel|."""
    index = {blk: k for k, blk in enumerate(b.blocks)}
    gens = []
    for gen in group.generators:
        images = [0] * len(b.blocks)
        for blk, k in index.items():
            img = setwise_action(blk, gen)
            if img not in index:
                raise BlocksNotInvariantError(
                    f"generator maps block {sorted(blk)} to the non-block "
                    f"{sorted(img)}")
            images[k] = index[img]
        gens.append(Permutation(tuple(images)))
    induced = GroupByGenerators(tuple(gens), degree=len(b.blocks),
                                element_cap=group.element_cap)
    if kernel is not None:
        expect = group.order() // kernel.order()
        if induced.order() != expect:
            raise InconsistentError(
                {"induced_order": induced.order(), "expected": expect})
    return induced


def psi_isomorphism(s: AltStructure, b: BlockSystem,
                    quotient_alt: AltStructure) -> dict:
    """The cycle-level map: each alternating cycle goes to the sequence of
    blocks its vertices traverse, which is an alternating cycle of the
    quotient.  Verified to be an adjacency-preserving bijection both ways.

    Requires a < r (for a >= r the quotient collapses too far).
    """
    if s.attachment >= s.radius:
        raise PreconditionFailedError(
            f"cycle-level isomorphism needs a < r, got a = {s.attachment}, "
            f"r = {s.radius}")
    block_of = b.block_of()
    q_sets = {frozenset(c): cid for cid, c in enumerate(quotient_alt.cycles)}
    mapping = {}
    used = set()
    for cid, cycle in enumerate(s.cycles):
        image = frozenset(block_of[v] for v in cycle)
        if image not in q_sets:
            raise InconsistentError(
                {"cycle": cid, "reason": "block image is not a quotient "
                 "alternating cycle", "image": sorted(image)})
        mapping[cid] = q_sets[image]
        used.add(q_sets[image])
    if len(used) != len(quotient_alt.cycles) or len(mapping) != len(s.cycles):
        raise InconsistentError({"reason": "cycle map is not a bijection"})
    sets = s.cycle_sets
    q_cycle_sets = quotient_alt.cycle_sets
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            here = bool(sets[i] & sets[j])
            there = bool(q_cycle_sets[mapping[i]] & q_cycle_sets[mapping[j]])
            if here != there:
                raise InconsistentError(
                    {"pair": (i, j), "reason": "adjacency not preserved"})
    return mapping


def thm_pipeline(g: Graph, group: GroupByGenerators) -> dict:
    """End-to-end quotient reduction for a half-arc-transitive pair.

    Outcome "tight": a = r, no further reduction.  Outcome "quotient":
    a < r; the half-step blocks are exactly the orbits of their kernel,
    the kernel is cyclic of order a (a | r) or a/2 (a ∤ r), and the
    quotient with the induced group is a certified half-arc-transitive
    pair that is loosely (a | r) or antipodally (a ∤ r) attached.

    For even radius with a = 2, the group is first extended by the
    antipodal automorphism when that exists outside the group.
    """
    cert = certify_hat(g, group)
    s = analyze(cert.orientation)
    if s.attachment == 2 * s.radius:
        raise PreconditionFailedError(
            "the two-cycle degenerate case admits no quotient reduction")

    extended = False
    if s.radius % 2 == 0 and s.attachment == 2:
        tau = antipodal_tau(cert.orientation, s)
        if tau is not None and tau not in group:
            group = group.with_extra_generator(tau)
            cert = certify_hat(g, group)
            s = analyze(cert.orientation)
            extended = True

    report = {"r": s.radius, "a": s.attachment, "ell": s.ell,
              "jum": s.jum, "extended_by_tau": extended}
    if s.attachment == s.radius:
        report["outcome"] = "tight"
        return report

    b = construction_b(s)
    k_b = action_kernel(group, b.blocks, setwise_action)
    orbit_blocks = _sorted_blocks(k_b.orbits(range(g.n)))
    if orbit_blocks != b.blocks:
        raise InconsistentError(
            {"reason": "kernel orbits differ from the half-step blocks"})
    tag = group_structure(k_b)
    want = s.attachment if s.radius % s.attachment == 0 else s.attachment // 2
    if not (_is_cyclic_of(tag, want)
            or (want == 2 and tag.kind == "Trivial")):
        raise InconsistentError(
            {"reason": "block kernel not cyclic of the predicted order",
             "observed": str(tag), "expected_order": want})

    q = quotient_graph(g, b)
    induced = quotient_action(group, b, kernel=k_b)
    if q.degenerate:
        report.update(outcome="degenerate-quotient",
                      kernel=str(tag), quotient_n=q.graph.n)
        return report
    q_cert = certify_hat(q.graph, induced)
    q_s = analyze(q_cert.orientation)
    want_kind = "loose" if s.radius % s.attachment == 0 else "antipodal"
    if q_s.attachment_kind != want_kind:
        raise InconsistentError(
            {"reason": "quotient attachment kind mismatch",
             "observed": q_s.attachment_kind, "expected": want_kind})
    report.update(outcome="quotient", kernel=str(tag),
                  quotient_n=q.graph.n, quotient_r=q_s.radius,
                  quotient_a=q_s.attachment,
                  quotient_kind=q_s.attachment_kind)
    if s.attachment < s.radius:
        q_alt = q_s
        psi = psi_isomorphism(s, b, q_alt)
        report["psi_cycle_map"] = {int(k): int(v) for k, v in psi.items()}
    return report
