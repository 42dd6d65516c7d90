"""Exact combinatorics of plane trees, Dyck/Schroder paths, and chains,
organized around the butterfly decomposition of doubly rooted plane trees."""

__version__ = "0.1.0"

from .errors import CapacityError, DomainError, ExactnessError, ParseError
from .trees import (
    Chain,
    DoublyRootedTree,
    KColoredTree,
    LeafColoredTree,
    PlaneTree,
    chain_count,
    classify_edges,
    distinguish_by_label,
    enumerate_chains,
    enumerate_trees,
    lr_preorder_events,
    parse_tree,
    rl_preorder_labels,
    serialize,
)
from .lattice_paths import (
    LatticePath,
    SegmentDecomposition,
    classify,
    decompose,
    enumerate_paths,
    flaw_blocks,
    flaws,
    parse_path,
    reflect,
)
from .bijections import (
    Butterfly,
    ButterflyDecomposition,
    bicolored_to_drt,
    bicolored_to_free_dyck,
    butterfly_compose,
    butterfly_decompose,
    chain_to_tricolored,
    colored_chain_to_kcolored,
    drt_to_bicolored,
    drt_to_free_dyck,
    free_dyck_to_bicolored,
    free_dyck_to_drt,
    free_schroder_to_leafcolored_drt,
    glove_dyck_to_tree,
    glove_tree_to_dyck,
    kcolored_to_colored_chain,
    leafcolored_drt_to_free_schroder,
    leafcolored_to_schroder,
    prefix_edge_count,
    schroder_to_leafcolored,
    stem_size,
    tricolored_to_chain,
)
from .involutions import (
    dyck_flip,
    schroder_flip,
    signed_block_sum_dyck,
    signed_block_sum_schroder,
)
from .series_counting import (
    RiordanArray,
    Series,
    a_nk,
    asymptotic_report,
    average_chain_size,
    catalan,
    central_binomial,
    chains_count,
    chains_of_size,
    chains_total_size,
    coeff_C_pow,
    flaw_block_count_dyck,
    flaw_block_weight_schroder,
    identity9_check,
    named_series,
    narayana,
    riordan_apply,
    riordan_entry,
    schroder_number,
)
