"""Exact multiplicative Zagreb indices and extremal graphs with given cut edges."""

from .constructors import (
    ClassSpec,
    bound_thm31,
    bound_thm32,
    bound_thm41,
    bound_thm42,
    c_n_p,
    c_n_s,
    coalesce,
    complete,
    cycle,
    join_by_path,
    k_n_p,
    k_n_s,
    path,
    star,
)
from .enumerate import connected_graphs, count_class, enumerate_class, enumerate_connected
from .errors import (
    Disconnected,
    EmptyClass,
    InvalidClass,
    InvalidEdge,
    InvalidVertex,
    Malformed,
    PatternMismatch,
    TooLarge,
    TooSmall,
    ZagrebError,
)
from .g6 import decode_g6, encode_g6
from .graph import (
    CutEdgeReport,
    Graph,
    blocks,
    bridges,
    canonical_form,
    canonical_graph,
    classify_cut_edges,
    cyclomatic_number,
    degree,
    is_connected,
    is_isomorphic,
    is_two_connected,
    new_graph,
)
from .indices import m1, m2, pi1, pi2, pi2_edge_form, ratio_l, ratio_t
from .verify import extremal_search, lemma_suite, verify_all, verify_theorem

__version__ = "0.1.0"
