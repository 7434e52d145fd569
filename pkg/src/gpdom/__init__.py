"""Exact domination toolkit for generalized Petersen graphs P(n, 2) with a faulty vertex."""

from .graph import (FaultSpec, GPGraph, GraphError, InvalidEdge, InvalidFault,
                    InvalidParameter, InvalidVertex, Ring, Vertex, build_graph,
                    closed_neighborhood, parse_vertex, reflect, rotate)
from .analysis import (BlockProfile, DomSet, block, classify, gamma_profile,
                       is_dominating, pseudo_couple_vertices, self_contained_blocks)
from .solver import (SolveResult, enumerate_minimum_sets, solve_bnb, solve_dp,
                     verify_certificate)
from .normalize import (RewriteStep, exchange, normalize, reduce_couples,
                        to_canonical_type, to_type1)
from .construct import construct_fault_5k1, construct_fault_5k2, construct_fault_free
from .robustness import alteration_number, bondage_number, single_edge_invariance

__all__ = [
    "FaultSpec", "GPGraph", "GraphError", "InvalidEdge", "InvalidFault",
    "InvalidParameter", "InvalidVertex", "Ring", "Vertex", "build_graph",
    "closed_neighborhood", "parse_vertex", "reflect", "rotate",
    "BlockProfile", "DomSet", "block", "classify", "gamma_profile",
    "is_dominating", "pseudo_couple_vertices", "self_contained_blocks",
    "SolveResult", "enumerate_minimum_sets", "solve_bnb", "solve_dp",
    "verify_certificate",
    "RewriteStep", "exchange", "normalize", "reduce_couples",
    "to_canonical_type", "to_type1",
    "construct_fault_5k1", "construct_fault_5k2", "construct_fault_free",
    "alteration_number", "bondage_number", "single_edge_invariance",
]
