"""Crossing-free acyclic Hamiltonian path completion for embedded planar
st-digraphs, and the two-page book embeddings it yields."""

from .book import BookEdge, BookEmbedding, book_embed
from .completion import (
    Completion,
    CompletionEdge,
    ValidationReport,
    check_face_shape,
    check_lemma2,
    induced_path,
    normalize,
    validate_completion,
)
from .errors import *
from .generate import GenConfig, gen_ladder_width2, gen_random_nfree, gen_random_st
from .graph import (
    DualGraph,
    EmbeddedDigraph,
    EmbeddedStDigraph,
    Face,
    FaceStructure,
    build_dual,
    build_graph,
    check_st,
    mirror,
    order_dual,
    trace_faces,
)
from .io import parse_costs, parse_graph, parse_set, serialize_costs, serialize_graph, serialize_set
from .mss import SetupCostMatrix, min_setup_schedule, mss_decide, setup_costs, zero_cost_schedule
from .nfree import complete_auto, complete_hfree, complete_nfree
from .oracle import oracle_all, oracle_count, oracle_exists
from .patterns import PatternOccurrence, augment_to_st, find_embedded_H, find_embedded_N
from .render import render_dot, render_svg
from .width import WidthInfo, edge_independence_number, poset_width

__version__ = "0.1.0"
