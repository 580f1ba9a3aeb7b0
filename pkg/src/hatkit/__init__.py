"""hatkit: construction and analysis of tetravalent graphs admitting
half-arc-transitive group actions — alternating cycles, attachment and
jump invariants, quotient reductions, kernels, and exact isomorphism
testing at desk scale."""

from .alternating import AltStructure, alternating_cycles, analyze
from .constructions import XeParams, XoParams, build_xe, build_xo
from .graphcore import Graph, OrientedGraph, build_graph, certify_hat
from .perm import GroupByGenerators, Permutation

__all__ = [
    "AltStructure",
    "Graph",
    "GroupByGenerators",
    "OrientedGraph",
    "Permutation",
    "XeParams",
    "XoParams",
    "alternating_cycles",
    "analyze",
    "build_graph",
    "build_xe",
    "build_xo",
    "certify_hat",
]

__version__ = "0.1.0"
