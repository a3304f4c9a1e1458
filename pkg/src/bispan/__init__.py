"""Toolkit for bispanning graphs: spanning tree pairs, base exchange
graphs, cyclic base orderings, composition theorems, enumeration, and the
two-player edge recoloring game."""

from .bispanning import (
    TreePair,
    clique2_sum,
    connectivity_class,
    decompose_2vconn,
    find_bispanning_subgraph,
    find_two_trees,
    is_atomic,
    reduce_deg3,
    verify_bispanning,
)
from .catalog import catalog_names, named_graph
from .compose import (
    cartesian_product,
    compose_deg3,
    deg3_classify,
    eta_join,
    verify_composite_decomposition,
    verify_deg3_composition,
    verify_eta_2sum,
)
from .core import (
    MultiGraph,
    canonical_code,
    fundamental_cut,
    fundamental_cycle,
    parse_edge_list,
    format_edge_list,
)
from .enumeration import count_bispanning, enumerate_bispanning
from .exchange import (
    ExchangeGraph,
    apply_exchange,
    build_tau,
    enumerate_tree_pairs,
    leaf_restricted_tau3,
    nu,
    pair_key,
    tau_connected,
    unique_exchange,
)
from .game import GameState, alice_flip, bob_auto, bob_fix, hint, new_game, undo
from .ordering import (
    SwapSequence,
    build_cbo,
    find_uecbo,
    join_uecbo_2sum,
    reverse_uecbo,
    verify_cbo,
    verify_uecbo,
)

__version__ = "0.1.0"
