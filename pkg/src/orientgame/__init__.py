"""Workbench for the acyclic orientation edge-query game."""

from .bounds import BoundReport, approx_estimate, bound_report
from .engine import (
    AlgyStrategy,
    GameState,
    MatchAbort,
    StrategistStrategy,
    Transcript,
    apply_answer,
    edge_status,
    empty_state,
    extension_count,
    is_terminal,
    open_edges,
    play_match,
)
from .graph import (
    Cut,
    GeneratorSpec,
    Graph,
    GuardError,
    count_acyclic_orientations,
    generate,
    max_cut,
    min_degree_core,
    parse_graph,
    serialize_graph,
)
from .poset import Poset, linear_extension
from .reduction import (
    ReducedGraph,
    SandwichReport,
    build_cut_poset,
    build_reduction,
    hasse_cross_check,
    sandwich_check,
)
from .solver import SolveResult, Solver, game_value

__all__ = [name for name in dir() if not name.startswith("_")]
