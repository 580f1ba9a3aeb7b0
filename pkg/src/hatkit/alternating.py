"""Alternating cycles of an oriented tetravalent graph and the derived
numbers: radius, attachment number and sets, the jump pair {q_t, q_h} and
the alternating jump.

The jump parameters are computed from explicit cycle-position arithmetic,
so a group is only needed later, for kernels.  Cycles are normalized to
start at their least vertex with the lesser neighbor second, which makes
every index computation reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .constructions import build_circulant
from .errors import (
    AlternatingStructureError,
    NotCyclePreservingError,
    PreconditionFailedError,
    UnequalCycleLengthsError,
    WellDefinednessFailureError,
)
from .graphcore import Graph, OrientedGraph, build_graph, edge_key, is_automorphism
from .perm import GroupByGenerators, Permutation


def alternating_cycles(og: OrientedGraph) -> list:
    """Decompose the edge set into alternating cycles.

    Traversal rule: having entered a vertex as the head of an edge, leave
    through the other edge having it as head, and dually for tails.  Every
    edge lies on exactly one alternating cycle.
    """
    g = og.graph
    unused = set(g.edge_set)
    cycles = []
    while unused:
        e0 = min(unused)
        h0 = og.head_of[e0]
        t0 = e0[0] if h0 == e0[1] else e0[1]
        cycle = []
        v, e = t0, e0
        while True:
            cycle.append(v)
            if e not in unused:
                raise AlternatingStructureError(
                    f"edge {e} revisited during traversal")
            unused.discard(e)
            w = e[0] if e[1] == v else e[1]
            if og.head_of[e] == w:
                candidates = [(x, edge_key(x, w)) for x in og.in_neighbors[w]]
            else:
                candidates = [(x, edge_key(w, x)) for x in og.out_neighbors[w]]
            nxt = [(x, ek) for x, ek in candidates if ek != e]
            if len(nxt) != 1:
                raise AlternatingStructureError(
                    f"ambiguous continuation at vertex {w}")
            v, e = w, nxt[0][1]
            if v == t0 and e == e0:
                break
        cycles.append(tuple(cycle))
    return [normalize_cycle(c) for c in cycles]


def normalize_cycle(cycle: tuple) -> tuple:
    """Rotate to put the least vertex first; orient so the second vertex is
    the lesser of the two neighbors of the first."""
    i = cycle.index(min(cycle))
    rotated = cycle[i:] + cycle[:i]
    if rotated[-1] < rotated[1]:
        rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
    return rotated


@dataclass(frozen=True)
class AltStructure:
    """The complete alternating-cycle structure of an oriented graph."""

    cycles: tuple  # tuple of cyclic vertex sequences, each of length 2r
    radius: int
    attachment: int
    ell: int  # 2r / a
    attachment_sets: tuple  # partition of V into frozensets
    q_t: int
    q_h: int
    jum: int
    incidence: dict = field(compare=False)  # vertex -> ((cid, pos), (cid, pos))
    tail_cycle: dict = field(compare=False)  # vertex -> cid where it is a tail

    @property
    def Q(self) -> frozenset:
        return frozenset({self.q_t, self.q_h})

    @property
    def cycle_sets(self) -> tuple:
        return tuple(frozenset(c) for c in self.cycles)

    @property
    def cycle_edge_sets(self) -> tuple:
        """Cycles as edge sets; distinguishes the two cycles even in the
        degenerate case where both run through every vertex."""
        out = []
        for c in self.cycles:
            out.append(frozenset(edge_key(c[i - 1], c[i])
                                 for i in range(len(c))))
        return tuple(out)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cycles) // 2

    @property
    def attachment_kind(self) -> str:
        if self.attachment == 2 * self.radius:
            return "degenerate"
        if self.attachment == self.radius:
            return "tight"
        if self.attachment == 1:
            return "loose"
        if self.attachment == 2:
            return "antipodal"
        return "other"

    def attachment_set_of(self, v: int) -> frozenset:
        for s in self.attachment_sets:
            if v in s:
                return s
        raise KeyError(v)

    def summary(self) -> dict:
        return {
            "n": self.n,
            "r": self.radius,
            "a": self.attachment,
            "ell": self.ell,
            "Q": sorted(self.Q),
            "jum": self.jum,
            "attachment_kind": self.attachment_kind,
            "cycle_count": len(self.cycles),
        }


def _vertex_roles(og: OrientedGraph, cycles) -> Tuple[dict, dict]:
    """incidence: vertex -> tuple of (cycle id, position); tail_cycle:
    vertex -> the cycle on which it is the tail of both incident arcs."""
    incidence: Dict[int, list] = {}
    tail_cycle: Dict[int, int] = {}
    for cid, cycle in enumerate(cycles):
        length = len(cycle)
        for pos, v in enumerate(cycle):
            incidence.setdefault(v, []).append((cid, pos))
            prev_v = cycle[pos - 1]
            next_v = cycle[(pos + 1) % length]
            prev_head = og.head_of[edge_key(prev_v, v)]
            next_head = og.head_of[edge_key(v, next_v)]
            if (prev_head == v) != (next_head == v):
                raise AlternatingStructureError(
                    f"cycle {cid} is not alternating at vertex {v}")
            if prev_head != v:  # v is the tail of both arcs
                if v in tail_cycle:
                    raise AlternatingStructureError(
                        f"vertex {v} is a double tail")
                tail_cycle[v] = cid
    for v, incs in incidence.items():
        if len(incs) != 2 or incs[0][0] == incs[1][0]:
            raise AlternatingStructureError(
                f"vertex {v} does not lie on exactly two alternating cycles")
        if v not in tail_cycle:
            raise AlternatingStructureError(f"vertex {v} is a double head")
    return ({v: tuple(incs) for v, incs in incidence.items()}, tail_cycle)


def _jump_at(og: OrientedGraph, cycles, incidence, tail_cycle, v, ell, a):
    """(q_t, q_h) measured at base vertex v."""
    if a == 1:
        return 0, 0
    (c1, p1), (c2, p2) = incidence[v]
    if tail_cycle[v] == c1:
        tc, tp, hc, hp = c1, p1, c2, p2
    else:
        tc, tp, hc, hp = c2, p2, c1, p1
    C, Cp = cycles[tc], cycles[hc]
    length = len(C)
    targets_t = {C[(tp + ell) % length], C[(tp - ell) % length]}
    targets_h = {Cp[(hp + ell) % length], Cp[(hp - ell) % length]}
    q_t = q_h = None
    for q in range(1, a):
        if q_t is None and {Cp[(hp + q * ell) % length],
                            Cp[(hp - q * ell) % length]} & targets_t:
            q_t = q
        if q_h is None and {C[(tp + q * ell) % length],
                            C[(tp - q * ell) % length]} & targets_h:
            q_h = q
        if q_t is not None and q_h is not None:
            break
    if q_t is None or q_h is None:
        raise AlternatingStructureError(
            f"jump parameters undefined at vertex {v}")
    return q_t, q_h


def analyze(og: OrientedGraph, check_vertices: int = 3) -> AltStructure:
    """Full alternating-cycle analysis of an oriented graph.

    Verifies the structural invariants the theory presupposes (equal cycle
    lengths, attachment sets at positions i*ell, base-vertex independence of
    the jump pair at sampled vertices) and raises diagnostics otherwise.
    """
    cycles = alternating_cycles(og)
    lengths = {len(c) for c in cycles}
    if len(lengths) != 1:
        raise UnequalCycleLengthsError(
            f"alternating cycle lengths {sorted(lengths)}; the orientation is "
            "not induced by any half-arc-transitive action")
    (length,) = lengths
    if length % 2 != 0:
        raise AlternatingStructureError(f"odd alternating cycle length {length}")
    radius = length // 2
    incidence, tail_cycle = _vertex_roles(og, cycles)

    cycle_sets = [frozenset(c) for c in cycles]
    att_sets = {}
    for v, ((c1, _), (c2, _)) in incidence.items():
        att_sets.setdefault((c1, c2), cycle_sets[c1] & cycle_sets[c2])
    sizes = {len(s) for s in att_sets.values()}
    if len(sizes) != 1:
        raise AlternatingStructureError(
            f"attachment set sizes differ: {sorted(sizes)}")
    (a,) = sizes
    if (2 * radius) % a != 0:
        raise AlternatingStructureError(
            f"attachment number {a} does not divide cycle length {2 * radius}")
    # intersecting cycle pairs beyond those sharing a vertex cannot exist;
    # but verify every intersecting pair has the common size
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            inter = cycle_sets[i] & cycle_sets[j]
            if inter and len(inter) != a:
                raise AlternatingStructureError(
                    f"cycles {i}, {j} meet in {len(inter)} != {a} vertices")
    ell = 2 * radius // a

    # Eq.-(1) spacing: on each incident cycle an attachment set sits at
    # positions p0 + i*ell
    for (c1, c2), s in att_sets.items():
        for cid in (c1, c2):
            positions = sorted(pos for pos, v in enumerate(cycles[cid])
                               if v in s)
            base = positions[0]
            if any((p - base) % ell != 0 for p in positions):
                raise AlternatingStructureError(
                    f"attachment set of cycles {c1},{c2} not ell-spaced on {cid}")

    attachment_sets = tuple(sorted({s for s in att_sets.values()}, key=min))
    covered = set()
    for s in attachment_sets:
        if covered & s:
            raise AlternatingStructureError("attachment sets overlap")
        covered |= s

    base = min(incidence)
    q_t, q_h = _jump_at(og, cycles, incidence, tail_cycle, base, ell, a)
    vertices = sorted(incidence)
    step = max(1, len(vertices) // (check_vertices + 1))
    for v in vertices[step::step][:check_vertices]:
        if _jump_at(og, cycles, incidence, tail_cycle, v, ell, a) != (q_t, q_h):
            raise AlternatingStructureError(
                f"jump parameters differ at vertex {v}")
    return AltStructure(
        cycles=tuple(cycles), radius=radius, attachment=a, ell=ell,
        attachment_sets=attachment_sets, q_t=q_t, q_h=q_h,
        jum=min(q_t, q_h), incidence=incidence, tail_cycle=tail_cycle)


def min_r_jump(q: int, r: int) -> int:
    """min over {q, -q, q^-1, -q^-1} reduced into {0..r-1}."""
    qinv = pow(q, -1, r)
    return min(q % r, (-q) % r, qinv, (-qinv) % r)


def verify_gta_jump(params) -> bool:
    """Check that a tightly attached family member's alternating jump equals
    the minimum of {+-q, +-q^-1} mod r."""
    from .constructions import XeParams, XoParams, build_xe, build_xo
    from .graphcore import certify_hat

    if isinstance(params, XoParams):
        graph, group = build_xo(params)
    elif isinstance(params, XeParams):
        graph, group = build_xe(params)
    else:
        raise TypeError(f"expected XoParams or XeParams, got {type(params)}")
    cert = certify_hat(graph, group)
    s = analyze(cert.orientation)
    return s.jum == min_r_jump(params.q, params.r)


def associated_circulant(s: AltStructure) -> Graph:
    """Circ_a({+-1, +-jum}); a one-vertex graph for a = 1 (loop disregarded)
    and a single edge for a = 2."""
    a = s.attachment
    if a == 1:
        return build_graph(1, [])
    if a == 2:
        return build_graph(2, [(0, 1)])
    conn = {1, -1, s.jum, -s.jum} if s.jum not in (0, 1) else {1, -1}
    return build_circulant(a, conn)


def check_mult_lemma(s: AltStructure, og: OrientedGraph):
    """Index identity between the two cycles through each vertex: with the
    cycles aligned so the first attachment steps match, the i-th attachment
    positions correspond under multiplication by q_t (resp. +-q_h).

    Returns (True, None), or (False, witness) -- the latter would contradict
    the theory and signals an implementation bug.
    """
    a, ell = s.attachment, s.ell
    if a == 1:
        return True, None
    length = 2 * s.radius
    for v in sorted(s.incidence):
        (c1, p1), (c2, p2) = s.incidence[v]
        if s.tail_cycle[v] == c1:
            tc, tp, hc, hp = c1, p1, c2, p2
        else:
            tc, tp, hc, hp = c2, p2, c1, p1
        C, Cp = s.cycles[tc], s.cycles[hc]

        def idx(cycle, p0, i, sign):
            return cycle[(p0 + sign * i) % length]

        ok_t = False
        for sc in (1, -1):  # direction of C
            for sp in (1, -1):  # direction of C'
                if idx(Cp, hp, s.q_t * ell, sp) != idx(C, tp, ell, sc):
                    continue
                if all(idx(C, tp, i * ell, sc) == idx(Cp, hp, i * s.q_t * ell, sp)
                       for i in range(a)):
                    ok_t = True
                    break
            if ok_t:
                break
        if not ok_t:
            return False, {"vertex": v, "which": "q_t"}

        ok_h = False
        for sc in (1, -1):
            for sp in (1, -1):
                if idx(C, tp, s.q_h * ell, sc) != idx(Cp, hp, ell, sp):
                    continue
                if all(idx(Cp, hp, i * ell, sp) == idx(C, tp, i * s.q_h * ell, sc)
                       for i in range(a)):
                    ok_h = True
                    break
            if ok_h:
                break
        if not ok_h:
            return False, {"vertex": v, "which": "q_h"}
    return True, None


def antipodal_tau(og: OrientedGraph, s: AltStructure) -> Optional[Permutation]:
    """The map sending each vertex to its antipodal counterpart on both of
    its cycles; defined for a = 2 with even radius.  Returns None when the
    two antipodal images disagree or the map is not an automorphism."""
    if s.attachment != 2:
        raise PreconditionFailedError(f"attachment {s.attachment} != 2")
    if s.radius % 2 != 0:
        raise PreconditionFailedError(f"radius {s.radius} is odd")
    r = s.radius
    length = 2 * r
    images = {}
    for v, ((c1, p1), (c2, p2)) in s.incidence.items():
        w1 = s.cycles[c1][(p1 + r) % length]
        w2 = s.cycles[c2][(p2 + r) % length]
        if w1 != w2:
            return None
        images[v] = w1
    tau = Permutation(tuple(images[v] for v in range(og.graph.n)))
    if not is_automorphism(og.graph, tau):
        return None
    return tau


def rotation_profile(gamma: Permutation, s: AltStructure) -> dict:
    """Per-cycle action of a cycle-preserving permutation: a rotation step
    (in cycle positions) or a reflection tag.

    Raises NotCyclePreservingError if gamma moves some cycle off itself.
    """
    profile = {}
    length = 2 * s.radius
    for cid, cycle in enumerate(s.cycles):
        cset = frozenset(cycle)
        if frozenset(gamma(v) for v in cycle) != cset:
            raise NotCyclePreservingError(f"cycle {cid} not fixed setwise")
        pos = {v: i for i, v in enumerate(cycle)}
        k = (pos[gamma(cycle[0])] - 0) % length
        if all(pos[gamma(cycle[j])] == (j + k) % length for j in range(length)):
            profile[cid] = ("rotation", k)
        elif all(pos[gamma(cycle[j])] == (k - j) % length for j in range(length)):
            profile[cid] = ("reflection", k)
        else:
            raise NotCyclePreservingError(
                f"action on cycle {cid} is neither rotation nor reflection")
    return profile


def _alt_adjacency(s: AltStructure) -> dict:
    nbrs: Dict[int, set] = {cid: set() for cid in range(len(s.cycles))}
    sets = s.cycle_sets
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j]:
                nbrs[i].add(j)
                nbrs[j].add(i)
    return nbrs


def alt_bipartition(s: AltStructure) -> Optional[Tuple[frozenset, frozenset]]:
    """2-coloring of the alternating-cycle graph, or None if not bipartite."""
    nbrs = _alt_adjacency(s)
    color = {}
    for start in nbrs:
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return None
    return (frozenset(c for c, col in color.items() if col == 0),
            frozenset(c for c, col in color.items() if col == 1))


def build_rho(og: OrientedGraph, s: AltStructure, group: GroupByGenerators,
              gamma: Permutation) -> Permutation:
    """Square root of a double-step kernel rotation.

    Preconditions: a does not divide r, 4 < a < r, and jum = 1 or the
    alternating-cycle graph is bipartite; gamma must fix every cycle and act
    as a 2*ell-step rotation on at least one of them.  The returned rho
    satisfies rho^2 = gamma, is an automorphism fixing every alternating
    cycle, and reverses the orientation class.
    """
    a, r, ell, q = s.attachment, s.radius, s.ell, s.jum
    length = 2 * r
    if r % a == 0:
        raise PreconditionFailedError(f"a = {a} divides r = {r}")
    if not (4 < a < r):
        raise PreconditionFailedError(f"need 4 < a < r, got a = {a}, r = {r}")
    bipart = alt_bipartition(s)
    if q != 1 and bipart is None:
        raise PreconditionFailedError(
            "jum != 1 and the alternating-cycle graph is not bipartite")
    profile = rotation_profile(gamma, s)
    steps = {}
    for cid, (kind, k) in profile.items():
        if kind != "rotation":
            raise PreconditionFailedError(f"gamma reflects cycle {cid}")
        steps[cid] = k
    two_ell = {(2 * ell) % length, (-2 * ell) % length}
    two_q_ell = {(2 * q * ell) % length, (-2 * q * ell) % length}
    if not any(k in two_ell for k in steps.values()):
        raise PreconditionFailedError(
            "gamma is not a 2*ell-step rotation on any cycle")

    all_ids = set(range(len(s.cycles)))
    if q == 1:
        index_set = all_ids
    elif q != a // 2 - 1:
        index_set = {cid for cid, k in steps.items() if k in two_ell}
        if any(k not in two_ell | two_q_ell for k in steps.values()):
            raise PreconditionFailedError(
                "gamma steps outside {+-2*ell, +-2*q*ell}")
    else:
        # the two rotation classes coincide; take the bipartition class
        # containing the least-indexed cycle
        side0, side1 = bipart
        index_set = side0 if 0 in side0 else side1

    # relabel so gamma is a +2*ell (in I) or +2*q*ell (outside I) rotation
    oriented = {}
    for cid, cycle in enumerate(s.cycles):
        want = (2 * ell) % length if cid in index_set else (2 * q * ell) % length
        if steps[cid] == want:
            oriented[cid] = cycle
        elif (-steps[cid]) % length == want:
            oriented[cid] = (cycle[0],) + tuple(reversed(cycle[1:]))
        else:
            raise PreconditionFailedError(
                f"cycle {cid} rotation step {steps[cid]} fits neither class")

    shift = {cid: (ell if cid in index_set else q * ell) % length
             for cid in all_ids}
    images = {}
    for cid, cycle in oriented.items():
        k = shift[cid]
        for j, v in enumerate(cycle):
            w = cycle[(j + k) % length]
            if v in images and images[v] != w:
                raise WellDefinednessFailureError(
                    f"vertex {v} gets images {images[v]} and {w}")
            images[v] = w
    rho = Permutation(tuple(images[v] for v in range(og.graph.n)))

    if rho * rho != gamma:
        raise WellDefinednessFailureError("rho^2 != gamma")
    if not is_automorphism(og.graph, rho):
        raise WellDefinednessFailureError("rho is not an automorphism")
    for cycle in s.cycles:
        if frozenset(rho(v) for v in cycle) != frozenset(cycle):
            raise WellDefinednessFailureError("rho moves an alternating cycle")
    if og.is_preserved_by(rho):
        raise WellDefinednessFailureError("rho does not reverse the orientation")
    return rho
