"""Polynomial colouring of star-forest-free graphs, with exact oracles."""

from .colorer import (
    ColorConfig,
    Coloring,
    ColoringResult,
    ExponentCertificate,
    ExponentLevel,
    TraceNode,
    audit_trace,
    color_star_forest_free,
    compute_exponent,
    exponent_sufficient,
    greedy_color,
    verify_bound,
    verify_coloring,
    verify_exponent_inequality,
)
from .errors import EnumerationCapExceeded, InvariantViolation, NotHFree, OracleScaleError, StarChiError
from .fileio import ParseError, read_dimacs_col, read_graph6, write_dimacs_col, write_graph6
from .generators import GenSpec, blowup, clique_union, complete_multipartite, gnp, mycielski, rejection_h_free
from .graph import Graph, GraphError, VertexSet, build_graph, induced_subgraph
from .oracles import (
    Embedding,
    RamseyOutcome,
    chromatic_number_exact,
    clique_number,
    contains_induced_star_forest,
    is_h_free,
    max_clique,
    max_stable_set,
    ramsey_bound,
    ramsey_witness,
)
from .starforest import StarForest, parse_pattern

__version__ = "0.1.0"
