"""Simple undirected graphs, arcs, group-induced orientations and the
half-arc-transitivity certificate.

Edges are stored as unordered pairs (u, v) with u < v; arcs as ordered
pairs.  Graphs are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    ArcTransitiveError,
    DisconnectedError,
    DuplicateEdgeError,
    LoopEdgeError,
    NotAutomorphismError,
    NotEdgeTransitiveError,
    NotVertexTransitiveError,
)
from .perm import GroupByGenerators, Permutation


def edge_key(u: int, v: int) -> tuple:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted neighbor lists."""

    n: int
    adjacency: tuple  # tuple of tuples, adjacency[v] sorted

    @cached_property
    def edges(self) -> tuple:
        out = []
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    out.append((u, v))
        return tuple(out)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def arcs(self) -> tuple:
        out = []
        for u, v in self.edges:
            out.append((u, v))
            out.append((v, u))
        return tuple(sorted(out))

    @cached_property
    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_regular(self, k: int) -> bool:
        return all(len(nbrs) == k for nbrs in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set

    def require_connected(self):
        if not self.is_connected:
            raise DisconnectedError("operation requires a connected graph")

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def build_graph(n: int, edge_list) -> Graph:
    """Build a Graph from an edge list, rejecting loops and duplicates.

    Disconnected graphs are representable (analysis operations reject them
    later); endpoints out of range are a ValueError.
    """
    adj = [[] for _ in range(n)]
    seen = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"endpoint out of range: ({u}, {v})")
        if u == v:
            raise LoopEdgeError(f"loop edge ({u}, {v})")
        key = edge_key(u, v)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def is_automorphism(g: Graph, p: Permutation) -> bool:
    if p.degree != g.n:
        return False
    return all(edge_key(p(u), p(v)) in g.edge_set for u, v in g.edges)


def vertex_act(x: int, p: Permutation) -> int:
    return p(x)


def edge_act(e: tuple, p: Permutation) -> tuple:
    return edge_key(p(e[0]), p(e[1]))


def arc_act(a: tuple, p: Permutation) -> tuple:
    return (p(a[0]), p(a[1]))


@dataclass(frozen=True)
class OrientedGraph:
    """A tetravalent graph plus a head choice per edge, with in-degree and
    out-degree 2 at every vertex."""

    graph: Graph
    head_of: dict = field(compare=False)  # edge (u<v) -> head vertex

    def __post_init__(self):
        g = self.graph
        if not g.is_regular(4):
            raise ValueError("oriented graphs must be tetravalent")
        indeg = [0] * g.n
        outdeg = [0] * g.n
        for (u, v), h in self.head_of.items():
            if h not in (u, v):
                raise ValueError(f"head {h} not an endpoint of {(u, v)}")
            t = u if h == v else v
            indeg[h] += 1
            outdeg[t] += 1
        if set(self.head_of) != g.edge_set:
            raise ValueError("orientation must cover every edge exactly once")
        if any(d != 2 for d in indeg) or any(d != 2 for d in outdeg):
            raise ValueError("orientation is not in/out 2-regular")

    def head(self, u: int, v: int) -> int:
        return self.head_of[edge_key(u, v)]

    def tail(self, u: int, v: int) -> int:
        h = self.head(u, v)
        return u if h == v else v

    @cached_property
    def out_neighbors(self) -> tuple:
        out = [[] for _ in range(self.graph.n)]
        for (u, v), h in self.head_of.items():
            t = u if h == v else v
            out[t].append(h)
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def in_neighbors(self) -> tuple:
        inn = [[] for _ in range(self.graph.n)]
        for (u, v), h in self.head_of.items():
            t = u if h == v else v
            inn[h].append(t)
        return tuple(tuple(sorted(x)) for x in inn)

    @cached_property
    def arc_set(self) -> frozenset:
        """The chosen arc per edge (tail, head)."""
        out = set()
        for (u, v), h in self.head_of.items():
            t = u if h == v else v
            out.add((t, h))
        return frozenset(out)

    def is_preserved_by(self, p: Permutation) -> bool:
        return all((p(t), p(h)) in self.arc_set for t, h in self.arc_set)


def reverse_orientation(og: OrientedGraph) -> OrientedGraph:
    """Swap every head and tail; involutive."""
    flipped = {}
    for (u, v), h in og.head_of.items():
        flipped[(u, v)] = u if h == v else v
    return OrientedGraph(og.graph, flipped)


def orientation_from_arcs(g: Graph, arcs) -> OrientedGraph:
    head_of = {}
    for t, h in arcs:
        key = edge_key(t, h)
        if key in head_of:
            raise ValueError(f"edge {key} oriented twice")
        head_of[key] = h
    return OrientedGraph(g, head_of)


@dataclass(frozen=True)
class HatCertificate:
    """Witness that (graph, group) is a half-arc-transitive pair, together
    with the group-induced orientation (the arc orbit containing the
    lexicographically least arc)."""

    group: GroupByGenerators = field(compare=False)
    orientation: OrientedGraph = field(compare=False)
    vertex_transitive: bool = True
    edge_transitive: bool = True
    arc_transitive: bool = False

    @property
    def valid(self) -> bool:
        return (self.vertex_transitive and self.edge_transitive
                and not self.arc_transitive)


def certify_hat(graph: Graph, group: GroupByGenerators) -> HatCertificate:
    """Check that the group acts half-arc-transitively on the graph and
    return the induced orientation.

    Generators are verified to be automorphisms rather than trusted.
    Raises NotAutomorphismError / NotVertexTransitiveError /
    NotEdgeTransitiveError / ArcTransitiveError as appropriate.
    """
    if not graph.is_regular(4):
        raise ValueError("half-arc-transitivity analysis needs a tetravalent graph")
    graph.require_connected()
    for i, gen in enumerate(group.generators):
        if not is_automorphism(graph, gen):
            raise NotAutomorphismError(i)

    if not group.is_transitive(range(graph.n), vertex_act):
        raise NotVertexTransitiveError("group is not transitive on vertices")
    if not group.is_transitive(graph.edges, edge_act):
        raise NotEdgeTransitiveError("group is not transitive on edges")

    base_arc = min(graph.arcs)
    orbit = group.orbit(base_arc, arc_act)
    if len(orbit) == 2 * len(graph.edges):
        raise ArcTransitiveError("group acts transitively on arcs")
    # a vertex- and edge- but not arc-transitive action has two paired orbits,
    # each containing exactly one arc per edge; verify rather than assume
    per_edge = {}
    for t, h in orbit:
        key = edge_key(t, h)
        if key in per_edge:
            raise ArcTransitiveError(
                f"arc orbit contains both arcs of edge {key}")
        per_edge[key] = h
    if set(per_edge) != graph.edge_set:
        raise NotEdgeTransitiveError("arc orbit misses some edges")
    orientation = OrientedGraph(graph, per_edge)
    return HatCertificate(group=group, orientation=orientation)
