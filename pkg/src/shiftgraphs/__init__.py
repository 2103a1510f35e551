"""Generalized shift graphs: construction, structure, reconstruction,
chromatic numbers, and automorphism groups, over finite sets and ordinals."""

from .pattern import TypePattern, parse_type, sigma, swap_type, type_of_pair
from .ordinal import Count, INFINITE, Ordinal, below_count, decompose, parse_ordinal, tail_count
from .graph import (
    DegreeCensus,
    ShiftGraph,
    UnlabeledGraph,
    build_graph,
    degree_closed_form,
    finite_degree_census,
    infer_k,
    rank,
    to_dot,
    to_json_dict,
    unrank,
)
from .structure import (
    BipartiteWitness,
    EquivalencePartition,
    QuotientGraph,
    check_bipartite_form,
    common_neighbors,
    equivalence_classes,
    isolated_vertices,
    max_cocliques_with_side_condition,
    quotient,
)
from .coloring import (
    Coloring,
    binary_msb_coloring,
    exact_chromatic,
    find_coloring,
    greedy_coloring,
    injection_certificate,
    injection_lower_bound,
    partition_tree,
)
from .automorphism import (
    GroupDescriptor,
    aut_order_via_classes,
    brute_aut_order,
    compare_aut,
    predicted_order,
)
from .reconstruct import (
    Labeling,
    ReconstructionReport,
    extract_bar_sequence,
    infer_alpha_symbolic,
    reconstruct,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
