"""Proper interval vertex deletion: recognition, obstructions, sunflower
reduction, kernelization rules and an exact solver."""

from .errors import ParseError, ResourceLimitError
from .generate import generate_instance
from .graph import (
    Graph,
    complete_graph,
    connected_components,
    cycle_graph,
    delete_vertices,
    induced_subgraph,
    path_graph,
    splice_component,
)
from .hitting_set import (
    SetFamily,
    Sunflower,
    find_sunflower,
    is_hitting_set,
    minimal_hitting_sets,
    reduce_preserving_minimal,
)
from .io import emit_trace, parse_graph, parse_instance, parse_trace, serialize_graph
from .obstructions import (
    Obstruction,
    enumerate_small_obstructions,
    find_any_hole,
    find_small_obstruction,
    is_valid_obstruction,
)
from .recognition import (
    CliquePath,
    ProperOrdering,
    clique_path,
    is_proper_interval,
    maximum_clique,
    proper_interval_ordering,
)
from .rules import (
    Instance,
    KernelOutcome,
    Modulator,
    ReductionTrace,
    TraceStep,
    Verdict,
    build_modulator,
    forced_vertices,
    irrelevant_vertex,
    kernelize,
    shrink_clique_path,
)
from .solver import Solution, brute_force_solve, minimum_deletion, solve

__all__ = [name for name in dir() if not name.startswith("_")]
