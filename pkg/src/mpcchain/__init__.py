"""Minimum-path-cover sparse dynamic programming on DAGs."""
from .anchors import AnchorParams, find_anchors
from .chaining import (
    Anchor,
    ChainResult,
    SeqAnchor,
    brute_force_chain,
    chain_dag_mpc,
    chain_dag_naive,
    chain_dag_with_overlaps,
    chain_sequences,
    precompute_overlaps,
)
from .graph import CycleError, GraphError, LabeledDag, ParseError, generate_dag, parse_dag, path_dag, serialize_dag, topological_order
from .lcs import lcs_dag_sequence, lcs_sequences
from .lis import lis_dag, lis_sequence
from .mpc import PathCover, brute_force_width, greedy_path_cover, minimum_path_cover
from .reach import ReachIndex, build_reach_index, cover_and_links, forward_links, last2reach
from .rmq import NEG_INF, RmqTree

__version__ = "0.1.0"
