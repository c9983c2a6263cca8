"""Exact signed counts of walks, super-walks and edge super-walks on finite graphs."""

from .counting import (
    VerificationReport,
    counting_matrix,
    edge_super_walk_matrix,
    super_walk_matrix,
    verify,
    walk_count_matrix,
)
from .exact import IntMatrix, identity, mat_mul, mat_pow, mat_vec, max_abs_entry, trace, transpose
from .graph import (
    Edge,
    Graph,
    Vertex,
    adjacency_matrix,
    build_graph,
    even_laplacian,
    flip_edge,
    incidence_matrix,
    odd_laplacian,
    random_graph,
    sign_of,
    valence,
)
from .oracle import (
    WalkRecord,
    edge_super_steps,
    enumerate_walks,
    signed_edge_super_walks,
    signed_super_walks,
    super_steps,
)
from .spectral import HeatKernel, evolve_state, matrix_exponential, supertrace

__version__ = "0.1.0"
