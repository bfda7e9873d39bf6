"""Homomorphisms from finite graphs to cycles: enumeration, reconfiguration
components, homotopy-type classification, and an exact homology cross-check.
"""

from homcycle.cover import (
    CIRCLE,
    POINT,
    ComponentReport,
    HomotopyType,
    LatticePoint,
    QuotientClass,
    classify_component,
    classify_full,
    deck_period,
    descend_to_origin,
    enumerate_cover_quotient,
    frozen_vertices,
    in_shift_lattice,
    in_universal_cover,
    lattice_moves,
    negate_transport,
    orient,
    project,
)
from homcycle.errors import (
    BadKError,
    CapExceededError,
    DocumentError,
    HomcycleError,
    NotAHomomorphismError,
    NotInDError,
    NotInEError,
    SimplexCellsPresentError,
    TypeUndefinedError,
)
from homcycle.graphs import (
    Digraph,
    SimpleGraph,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    has_directed_cycle,
    has_isolated_vertex,
    induced_subgraph,
    is_connected,
    is_sink,
    is_source,
    path_graph,
    strongly_connected_components,
    vertices_on_directed_cycles,
)
from homcycle.homology import (
    BettiPair,
    TwoSkeleton,
    betti,
    build_two_skeleton,
    verify_classification,
)
from homcycle.homs import (
    CyclicHom,
    EdgeType,
    HomSkeleton,
    build_hom_skeleton,
    enumerate_homs,
    hom_adjacent,
    pair_type,
    skeleton_components,
    validate_hom,
)

__version__ = "0.1.0"

__all__ = [
    "BadKError",
    "BettiPair",
    "CIRCLE",
    "CapExceededError",
    "ComponentReport",
    "CyclicHom",
    "Digraph",
    "DocumentError",
    "EdgeType",
    "HomSkeleton",
    "HomcycleError",
    "HomotopyType",
    "LatticePoint",
    "NotAHomomorphismError",
    "NotInDError",
    "NotInEError",
    "POINT",
    "QuotientClass",
    "SimpleGraph",
    "SimplexCellsPresentError",
    "TwoSkeleton",
    "TypeUndefinedError",
    "betti",
    "build_hom_skeleton",
    "build_two_skeleton",
    "classify_component",
    "classify_full",
    "complete_graph",
    "connected_components",
    "cycle_graph",
    "deck_period",
    "descend_to_origin",
    "disjoint_union",
    "enumerate_cover_quotient",
    "enumerate_homs",
    "frozen_vertices",
    "has_directed_cycle",
    "has_isolated_vertex",
    "hom_adjacent",
    "in_shift_lattice",
    "in_universal_cover",
    "induced_subgraph",
    "is_connected",
    "is_sink",
    "is_source",
    "lattice_moves",
    "negate_transport",
    "orient",
    "pair_type",
    "path_graph",
    "project",
    "skeleton_components",
    "strongly_connected_components",
    "validate_hom",
    "verify_classification",
    "vertices_on_directed_cycles",
]
