"""last2reach, forward propagation links and a constant-time reachability index."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .graph import LabeledDag, dag_from_edges
from .mpc import PathCover, minimum_path_cover


@dataclass(frozen=True)
class Last2Reach:
    """``table[v, i]`` is the 1-based position on path ``i`` of the last node of
    that path reaching ``v`` (every node reaches itself), or -1."""

    table: np.ndarray  # shape (|V| + 1, K); row 0 unused
    cover: PathCover
    index_in_path: tuple[dict[int, int], ...]  # index_in_path[i][v] = position of v on path i

    def __getitem__(self, key):
        v, i = key
        return int(self.table[v, i])

    def node_at(self, i: int, position: int) -> int:
        return self.cover.paths[i][position - 1]


def last2reach(dag: LabeledDag, cover: PathCover) -> Last2Reach:
    K = cover.K
    table = np.full((dag.node_count + 1, K), -1, dtype=np.int64)
    index_in_path = tuple({v: pos for pos, v in enumerate(p, 1)} for p in cover.paths)
    pred = dag.pred
    for v in dag.nodes:
        preds = pred[v]
        if len(preds) == 1:
            table[v] = table[preds[0]]
        elif preds:
            table[v] = table[list(preds)].max(axis=0)
        for i in cover.paths_of_node[v]:
            table[v, i] = index_in_path[i][v]
    table.flags.writeable = False
    return Last2Reach(table, cover, index_in_path)


@dataclass(frozen=True)
class ForwardLinks:
    """``forward[u]`` lists the ``(v, i)`` with ``last2reach[v, i]`` equal to u.

    ``self_links[u]`` and ``cross_links[u]`` split that list by ``v == u``.
    """

    forward: tuple[tuple[tuple[int, int], ...], ...]
    self_links: tuple[tuple[int, ...], ...]
    cross_links: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def total(self) -> int:
        return sum(len(f) for f in self.forward)

    def __getitem__(self, u):
        return self.forward[u]


def forward_links(l2r: Last2Reach) -> ForwardLinks:
    paths = l2r.cover.paths
    n = l2r.table.shape[0] - 1
    forward: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    rows = l2r.table.tolist()
    for v in range(1, n + 1):
        for i, pos in enumerate(rows[v]):
            if pos != -1:
                forward[paths[i][pos - 1]].append((v, i))
    self_links = tuple(tuple(i for v, i in f if v == u) for u, f in enumerate(forward))
    cross_links = tuple(tuple((v, i) for v, i in f if v != u) for u, f in enumerate(forward))
    return ForwardLinks(tuple(tuple(f) for f in forward), self_links, cross_links)


def cover_and_links(dag: LabeledDag, cover: Optional[PathCover] = None):
    """Convenience: (cover, last2reach, forward links) for ``dag``."""
    if cover is None:
        cover = minimum_path_cover(dag)
    l2r = last2reach(dag, cover)
    return cover, l2r, forward_links(l2r)


class ReachIndex:
    """O(1) reachability queries on an arbitrary digraph with nodes ``1..n``.

    Strongly connected components are contracted; the condensation gets a
    minimum path cover and its last2reach table.  ``reaches(x, x)`` is true.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        edges = list(edges)
        self.node_count = n
        if edges:
            rows = [u - 1 for u, _ in edges]
            cols = [v - 1 for _, v in edges]
            adj = csr_matrix((np.ones(len(edges), dtype=np.int8), (rows, cols)), shape=(n, n))
            n_comp, comp = connected_components(adj, directed=True, connection="strong")
        else:
            n_comp, comp = n, np.arange(n)
        comp = [int(c) + 1 for c in comp]
        cond_edges = sorted({(comp[u - 1], comp[v - 1]) for u, v in edges if comp[u - 1] != comp[v - 1]})
        dag, renumber = dag_from_edges(n_comp, cond_edges)
        self.component = (0, *(renumber[c] for c in comp))  # node -> condensation node
        self.dag = dag
        self.cover = minimum_path_cover(dag)
        l2r = last2reach(dag, self.cover)
        self.last2reach = l2r
        self._table = l2r.table.tolist()
        owner_path = [0] * (dag.node_count + 1)
        owner_pos = [0] * (dag.node_count + 1)
        for c in dag.nodes:
            i = self.cover.paths_of_node[c][0]
            owner_path[c] = i
            owner_pos[c] = l2r.index_in_path[i][c]
        self._owner_path = owner_path
        self._owner_pos = owner_pos

    @classmethod
    def from_dag(cls, dag: LabeledDag) -> "ReachIndex":
        return cls(dag.node_count, dag.edges)

    @property
    def width(self) -> int:
        return self.cover.K

    def reaches(self, x: int, y: int) -> bool:
        if not (1 <= x <= self.node_count and 1 <= y <= self.node_count):
            raise KeyError(f"unknown node in query ({x}, {y})")
        cx, cy = self.component[x], self.component[y]
        i = self._owner_path[cx]
        return self._owner_pos[cx] <= self._table[cy][i]


def build_reach_index(n: int, edges) -> ReachIndex:
    return ReachIndex(n, edges)


def reaches(index: ReachIndex, x: int, y: int) -> bool:
    return index.reaches(x, y)


def dfs_reachable(n: int, edges, x: int) -> set[int]:
    """All nodes reachable from ``x`` (including ``x``) by plain DFS."""
    succ = [[] for _ in range(n + 1)]
    for u, v in edges:
        succ[u].append(v)
    seen = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        for w in succ[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen
