"""Longest strictly increasing subsequence on sequences and on labeled DAGs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import GraphError, LabeledDag
from .mpc import PathCover
from .reach import ForwardLinks, cover_and_links
from .rmq import NEG_INF, RmqTree


@dataclass(frozen=True)
class LisResult:
    length: int
    witness: tuple[tuple[int, int], ...]  # (position or node, symbol)
    llis: tuple[int, ...]  # indexed like the input; slot 0 unused for DAGs


def rank_remap(symbols: Sequence[int]) -> tuple[list[int], int]:
    """Order-preserving map onto ``1..d`` (equal symbols share a rank)."""
    distinct = sorted(set(symbols))
    rank = {s: r for r, s in enumerate(distinct, 1)}
    return [rank[s] for s in symbols], len(distinct)


def lis_sequence(seq: Sequence[int]) -> LisResult:
    """O(n log n) LIS; ``witness`` holds ``(index, symbol)`` with 0-based indexes."""
    if not seq:
        return LisResult(0, (), ())
    ranks, d = rank_remap(seq)
    tree = RmqTree.with_keys(range(d + 1))
    llis = []
    back = []
    for i, r in enumerate(ranks):
        best, arg = tree.rmaxq_arg(0, r - 1)
        llis.append(int(best) + 1)
        back.append(arg)
        tree.update(r, llis[-1], i)
    end = max(range(len(seq)), key=lambda i: (llis[i], -i))
    witness = []
    i = end
    while i is not None:
        witness.append((i, seq[i]))
        i = back[i]
    witness.reverse()
    return LisResult(llis[end], tuple(witness), tuple(llis))


def lis_dag(
    dag: LabeledDag,
    cover: Optional[PathCover] = None,
    links: Optional[ForwardLinks] = None,
    trace: Optional[list] = None,
) -> LisResult:
    """LIS over all path labels of ``dag`` in O(K |V| log |V|) given the cover.

    At node ``v`` the queries through its own paths run first (finishing
    ``LLIS[v]``), then ``v`` is inserted into the trees of every path through
    it, then the links to nodes off those paths are followed.  ``trace``, when
    given, receives ``(u, v, i, LLIS[v])`` after every link query.
    """
    if not dag.is_labeled:
        raise GraphError("lis_dag needs a labeled DAG")
    if cover is None or links is None:
        cover, _, links = cover_and_links(dag, cover)
    n = dag.node_count
    ranks, d = rank_remap([dag.labels[v] for v in dag.nodes])
    rank = [0, *ranks]
    trees = [RmqTree.with_keys(range(d + 1)) for _ in range(cover.K)]
    llis = [0] + [1] * n
    back: list[Optional[int]] = [None] * (n + 1)

    def relax(u, v, i):
        best, arg = trees[i].rmaxq_arg(0, rank[v] - 1)
        if best + 1 > llis[v]:
            llis[v] = int(best) + 1
            back[v] = arg
        if trace is not None:
            trace.append((u, v, i, llis[v]))

    for v in dag.nodes:
        for i in links.self_links[v]:
            relax(v, v, i)
        for i in cover.paths_of_node[v]:
            trees[i].update(rank[v], llis[v], v)
        for w, i in links.cross_links[v]:
            relax(v, w, i)

    end = max(dag.nodes, key=lambda v: (llis[v], -v))
    witness = []
    v = end
    while v is not None:
        witness.append((v, dag.labels[v]))
        v = back[v]
    witness.reverse()
    return LisResult(llis[end], tuple(witness), tuple(llis))


BRUTE_FORCE_MAX_NODES = 14


def _all_paths(dag: LabeledDag):
    """Every path of ``dag`` (as node lists), by DFS from every node."""
    for s in dag.nodes:
        stack = [[s]]
        while stack:
            p = stack.pop()
            yield p
            for w in dag.succ[p[-1]]:
                stack.append(p + [w])


def brute_force_lis_dag(dag: LabeledDag) -> int:
    if dag.node_count > BRUTE_FORCE_MAX_NODES:
        raise ValueError(f"oracle limited to {BRUTE_FORCE_MAX_NODES} nodes")
    if not dag.is_labeled:
        raise GraphError("needs a labeled DAG")
    return max(lis_sequence(dag.path_label(p)).length for p in _all_paths(dag))


def brute_force_llis(dag: LabeledDag) -> list[int]:
    """For each node v, the best LIS over path labels that ends with v's own label."""
    best = [0] * (dag.node_count + 1)
    for p in _all_paths(dag):
        labels = dag.path_label(p)
        # longest increasing subsequence of labels that uses the last element
        llis = _quadratic_lis_ending(labels)
        best[p[-1]] = max(best[p[-1]], llis[-1])
    return best


def _quadratic_lis_ending(seq):
    out = []
    for i, x in enumerate(seq):
        out.append(1 + max((out[j] for j in range(i) if seq[j] < x), default=0))
    return out
