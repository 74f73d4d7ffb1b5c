"""Toolkit for componentwise linearity of weighted oriented edge ideals."""

from .betti import (
    BettiTable,
    FieldSpec,
    betti_table,
    has_linear_resolution,
    lcm_lattice_points,
    regularity,
)
from .classifier import Certificate, PowerObstruction, classify, power_obstruction
from .deciders import (
    CheckAllResult,
    ComponentwiseResult,
    LinearQuotientResult,
    SplitLeaf,
    SplitNode,
    VertexSplitResult,
    check_all,
    is_componentwise_linear,
    is_linear_quotient,
    is_vertex_splittable,
)
from .graphs import SimpleGraph, cycle_graph, complete_graph, path_graph
from .monomials import Monomial, MonomialIdeal, minimalize, monomials_of_degree
from .oriented import ForbiddenConfig, WeightedOrientedGraph, graph_edge_ideal

__all__ = [
    "BettiTable",
    "Certificate",
    "CheckAllResult",
    "ComponentwiseResult",
    "FieldSpec",
    "ForbiddenConfig",
    "LinearQuotientResult",
    "Monomial",
    "MonomialIdeal",
    "PowerObstruction",
    "SimpleGraph",
    "SplitLeaf",
    "SplitNode",
    "VertexSplitResult",
    "WeightedOrientedGraph",
    "betti_table",
    "check_all",
    "classify",
    "complete_graph",
    "cycle_graph",
    "graph_edge_ideal",
    "has_linear_resolution",
    "is_componentwise_linear",
    "is_linear_quotient",
    "is_vertex_splittable",
    "lcm_lattice_points",
    "minimalize",
    "monomials_of_degree",
    "path_graph",
    "power_obstruction",
    "regularity",
]
