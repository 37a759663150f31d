"""Longest common subsequence between a labeled DAG and a sequence."""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import GraphError, LabeledDag
from .lis import BRUTE_FORCE_MAX_NODES, _all_paths
from .mpc import PathCover
from .reach import ForwardLinks, cover_and_links
from .rmq import RmqTree


@dataclass(frozen=True)
class LcsResult:
    length: int
    witness: tuple[tuple[int, int], ...]  # (node, 1-based position in S)
    llcs: dict  # (v, j) -> score, over the match set


def remap_alphabet(dag: LabeledDag, S: Sequence[int]) -> tuple[LabeledDag, list[int]]:
    """Relabel by rank among the distinct symbols of ``S``.

    Node labels that do not occur in ``S`` become ``len(S) + 1`` and never
    match.
    """
    distinct = sorted(set(S))
    missing = len(S) + 1

    def rank(x):
        i = bisect_left(distinct, x)
        return i + 1 if i < len(distinct) and distinct[i] == x else missing

    new_labels = [rank(dag.labels[v]) for v in dag.nodes]
    return dag.with_labels(new_labels), [rank(x) for x in S]


def match_positions(S: Sequence[int]) -> dict[int, list[int]]:
    """symbol -> sorted 1-based positions where it occurs in ``S``."""
    where: dict[int, list[int]] = {}
    for j, x in enumerate(S, 1):
        where.setdefault(x, []).append(j)
    return where


def lcs_dag_sequence(
    dag: LabeledDag,
    S: Sequence[int],
    cover: Optional[PathCover] = None,
    links: Optional[ForwardLinks] = None,
) -> LcsResult:
    """LCS between any path label of ``dag`` and ``S``.

    ``LLCS[v, j]`` (for ``label(v) == S[j]``) is the best common subsequence
    ending with the pair ``(v, j)``.  Trees are keyed by positions ``0..|S|``;
    the query ``rmaxq(0, j - 1)`` keeps positions strictly increasing.
    """
    if not dag.is_labeled:
        raise GraphError("lcs_dag_sequence needs a labeled DAG")
    if cover is None or links is None:
        cover, _, links = cover_and_links(dag, cover)
    dag, S = remap_alphabet(dag, S)
    where = match_positions(S)
    positions = [()] + [tuple(where.get(dag.labels[v], ())) for v in dag.nodes]
    trees = [RmqTree.with_keys(range(len(S) + 1)) for _ in range(cover.K)]
    llcs: dict[tuple[int, int], int] = {}
    back: dict[tuple[int, int], Optional[tuple[int, int]]] = {}
    for v in dag.nodes:
        for j in positions[v]:
            llcs[(v, j)] = 1
            back[(v, j)] = None

    def relax(v, i):
        tree = trees[i]
        for j in positions[v]:
            best, arg = tree.rmaxq_arg(0, j - 1)
            if best + 1 > llcs[(v, j)]:
                llcs[(v, j)] = int(best) + 1
                back[(v, j)] = arg

    for v in dag.nodes:
        if positions[v]:
            for i in links.self_links[v]:
                relax(v, i)
            for i in cover.paths_of_node[v]:
                tree = trees[i]
                for j in positions[v]:
                    tree.update(j, llcs[(v, j)], (v, j))
        for w, i in links.cross_links[v]:
            if positions[w]:
                relax(w, i)

    if not llcs:
        return LcsResult(0, (), {})
    end = max(llcs, key=lambda key: (llcs[key], -key[0], -key[1]))
    witness = []
    key = end
    while key is not None:
        witness.append(key)
        key = back[key]
    witness.reverse()
    return LcsResult(llcs[end], tuple(witness), llcs)


def lcs_sequences(A: Sequence, B: Sequence) -> int:
    """Classic quadratic LCS length."""
    if len(A) > 10_000 or len(B) > 10_000:
        raise ValueError("quadratic oracle limited to 10^4 symbols per input")
    prev = [0] * (len(B) + 1)
    for a in A:
        cur = [0]
        for jb, b in enumerate(B, 1):
            cur.append(prev[jb - 1] + 1 if a == b else max(prev[jb], cur[-1]))
        prev = cur
    return prev[-1]


def brute_force_lcs_dag(dag: LabeledDag, S: Sequence[int]) -> int:
    if dag.node_count > BRUTE_FORCE_MAX_NODES:
        raise ValueError(f"oracle limited to {BRUTE_FORCE_MAX_NODES} nodes")
    return max(lcs_sequences(dag.path_label(p), S) for p in _all_paths(dag))
