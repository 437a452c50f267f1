"""Cone partitions of the non-negative orthant for min-cut and max-cut on K_n."""

from .adjacency import (
    AdjacencyVerdict,
    Certificate,
    Reason,
    adjacent,
    certificate,
    is_crossing,
    max_certificate,
    min_certificate,
    symdiff_one,
    verify_certificate,
)
from .core import (
    Cut,
    Instance,
    Sense,
    canonicalize,
    cut_from_vertices,
    cut_value,
    cut_vector,
    edge_index,
    enumerate_cuts,
)
from .graphs import (
    build_graph,
    clique_number,
    crossing_count,
    degree_formula,
    diameter,
    middle_cut,
    verify_theorems,
)
from .lp import LinearProgram, cone_membership, oracle_adjacent, skeleton_adjacent, solve_lp
from .walker import local_search, poly_neighbors

__version__ = "0.1.0"
