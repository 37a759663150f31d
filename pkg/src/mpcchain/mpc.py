"""Minimum path cover of a DAG in O(k |E| log |V|).

Pipeline: a greedy cover of O(k log |V|) paths gives a feasible flow in the
node-split network; Ford-Fulkerson then shrinks it to a minimum flow, whose
decomposition is a minimum path cover.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .graph import LabeledDag, topological_order


class FlowError(ValueError):
    """The flow handed to a step violates its contract."""


@dataclass(frozen=True)
class PathCover:
    paths: tuple[tuple[int, ...], ...]
    paths_of_node: tuple[tuple[int, ...], ...] = field(repr=False)  # slot 0 unused

    @classmethod
    def from_paths(cls, paths: Sequence[Sequence[int]], node_count: int) -> "PathCover":
        paths = tuple(tuple(p) for p in paths)
        owners: list[list[int]] = [[] for _ in range(node_count + 1)]
        for i, p in enumerate(paths):
            for v in p:
                owners[v].append(i)
        return cls(paths, tuple(tuple(o) for o in owners))

    @property
    def K(self) -> int:
        return len(self.paths)

    def __len__(self):
        return len(self.paths)

    def validate(self, dag: LabeledDag) -> None:
        """Raise ``ValueError`` unless this is a path cover of ``dag``."""
        if len(self.paths_of_node) != dag.node_count + 1:
            raise ValueError("cover built for a different node count")
        for i, p in enumerate(self.paths):
            if not dag.is_path(p):
                raise ValueError(f"path {i} is not a path of the DAG: {p}")
        for v in dag.nodes:
            if not self.paths_of_node[v]:
                raise ValueError(f"node {v} is not covered")
        check = PathCover.from_paths(self.paths, dag.node_count)
        if check.paths_of_node != self.paths_of_node:
            raise ValueError("paths_of_node is inconsistent with paths")


def greedy_path_cover(dag: LabeledDag) -> PathCover:
    """Repeatedly take a path through the most still-uncovered nodes.

    ``best[v]`` is the largest number of uncovered nodes on a path starting at
    ``v``.  Ties go to the smallest node id, both for the start node and for
    the successor followed.  A path is extended until it reaches a sink.
    """
    n = dag.node_count
    succ = dag.succ
    uncovered = [0] + [1] * n
    remaining = n
    paths = []
    best = [0] * (n + 1)
    nxt = [0] * (n + 1)
    while remaining:
        for v in range(n, 0, -1):
            b, w_best = 0, 0
            for w in succ[v]:  # ascending, so strict > keeps the smallest id
                if w_best == 0 or best[w] > b:
                    b, w_best = best[w], w
            best[v] = uncovered[v] + b
            nxt[v] = w_best
        start = max(range(1, n + 1), key=lambda v: (best[v], -v))
        path = []
        v = start
        while v:
            path.append(v)
            if uncovered[v]:
                uncovered[v] = 0
                remaining -= 1
            v = nxt[v]
        paths.append(path)
    return PathCover.from_paths(paths, n)


class FlowNetwork:
    """Node-split network G* carrying an integral flow.

    Vertex ids: source ``0``, sink ``1``, ``v-`` is ``2v`` and ``v+`` is
    ``2v + 1``.  Edges are stored in parallel arrays; demand is 1 exactly on the
    split edges ``(v-, v+)``.
    """

    SOURCE = 0
    SINK = 1

    def __init__(self, dag: LabeledDag):
        self.node_count = dag.node_count
        tail, head, demand = [], [], []
        self.split_edge = [-1] * (dag.node_count + 1)
        self.edge_index: dict[tuple[int, int], int] = {}

        def add(a, b, d):
            self.edge_index[(a, b)] = len(tail)
            tail.append(a)
            head.append(b)
            demand.append(d)

        for v in dag.nodes:
            add(self.SOURCE, 2 * v, 0)
            self.split_edge[v] = len(tail)
            add(2 * v, 2 * v + 1, 1)
            add(2 * v + 1, self.SINK, 0)
        for u, v in dag.edges:
            add(2 * u + 1, 2 * v, 0)
        self.tail = tail
        self.head = head
        self.demand = demand
        self.flow = [0] * len(tail)
        n_vertices = 2 * dag.node_count + 2
        self.out_edges: list[list[int]] = [[] for _ in range(n_vertices)]
        self.in_edges: list[list[int]] = [[] for _ in range(n_vertices)]
        for e, (a, b) in enumerate(zip(tail, head)):
            self.out_edges[a].append(e)
            self.in_edges[b].append(e)
        for lst in self.out_edges:
            lst.sort(key=lambda e: head[e])
        self.augmentations = 0

    @property
    def value(self) -> int:
        return sum(self.flow[e] for e in self.out_edges[self.SOURCE])

    def copy(self) -> "FlowNetwork":
        other = object.__new__(FlowNetwork)
        other.__dict__.update(self.__dict__)
        other.flow = list(self.flow)
        return other

    def is_feasible(self) -> bool:
        if any(f < d for f, d in zip(self.flow, self.demand)):
            return False
        for x in range(2, len(self.out_edges)):
            inflow = sum(self.flow[e] for e in self.in_edges[x])
            outflow = sum(self.flow[e] for e in self.out_edges[x])
            if inflow != outflow:
                return False
        return True

    def add_path(self, path: Sequence[int], amount: int = 1) -> None:
        """Route ``amount`` units s -> path[0]- -> ... -> path[-1]+ -> t."""
        idx = self.edge_index
        prev = self.SOURCE
        for v in path:
            self.flow[idx[(prev, 2 * v)]] += amount
            self.flow[idx[(2 * v, 2 * v + 1)]] += amount
            prev = 2 * v + 1
        self.flow[idx[(prev, self.SINK)]] += amount


def build_flow_from_cover(dag: LabeledDag, cover: PathCover) -> FlowNetwork:
    net = FlowNetwork(dag)
    for p in cover.paths:
        net.add_path(p)
    return net


def shrink_to_minimum(net: FlowNetwork) -> FlowNetwork:
    """Reduce a feasible flow to a minimum feasible flow.

    Each augmenting path from s to t in the reduction network moves flow off
    the current solution: an edge ``e`` can be traversed forwards while
    ``flow(e) > demand(e)`` (lowering it) and backwards without limit (raising
    it, since G* has no upper capacities).  Search is breadth-first.  The
    returned network is a new object; ``augmentations`` counts the paths used.
    """
    if not net.is_feasible():
        raise FlowError("input flow is not feasible")
    net = net.copy()
    net.augmentations = 0
    flow, demand, tail, head = net.flow, net.demand, net.tail, net.head
    out_edges, in_edges = net.out_edges, net.in_edges
    n_vertices = len(out_edges)
    s, t = net.SOURCE, net.SINK
    while True:
        # parent_edge[x] = e (>=0 forward, ~e backward)
        parent = [None] * n_vertices
        parent[s] = -1 - len(flow)  # sentinel, never a valid edge code
        queue = deque([s])
        found = False
        while queue and not found:
            x = queue.popleft()
            for e in out_edges[x]:
                y = head[e]
                if parent[y] is None and flow[e] > demand[e]:
                    parent[y] = e
                    if y == t:
                        found = True
                        break
                    queue.append(y)
            if found:
                break
            for e in in_edges[x]:
                y = tail[e]
                if parent[y] is None:
                    parent[y] = ~e
                    queue.append(y)
        if not found:
            break
        # bottleneck over forward (decreasing) edges
        bottleneck = None
        y = t
        while y != s:
            code = parent[y]
            if code >= 0:
                slack = flow[code] - demand[code]
                bottleneck = slack if bottleneck is None else min(bottleneck, slack)
                y = tail[code]
            else:
                y = head[~code]
        y = t
        while y != s:
            code = parent[y]
            if code >= 0:
                flow[code] -= bottleneck
                y = tail[code]
            else:
                flow[~code] += bottleneck
                y = head[~code]
        net.augmentations += 1
    return net


def decompose_flow(net: FlowNetwork) -> PathCover:
    """Split the flow into ``value`` source-to-sink walks, smallest ids first."""
    flow = list(net.flow)
    head = net.head
    paths = []
    s, t = net.SOURCE, net.SINK
    out_edges = net.out_edges
    while True:
        start = next((e for e in out_edges[s] if flow[e] > 0), None)
        if start is None:
            break
        path = []
        e = start
        while True:
            flow[e] -= 1
            x = head[e]
            if x == t:
                break
            if x % 2 == 0:
                path.append(x // 2)
            e = next(e2 for e2 in out_edges[x] if flow[e2] > 0)
        paths.append(path)
    return PathCover.from_paths(paths, net.node_count)


def minimum_path_cover(dag: LabeledDag) -> PathCover:
    greedy = greedy_path_cover(dag)
    net = shrink_to_minimum(build_flow_from_cover(dag, greedy))
    return decompose_flow(net)


def width(dag: LabeledDag) -> int:
    return len(minimum_path_cover(dag))


ORACLE_MAX_NODES = 200


def transitive_closure(dag: LabeledDag) -> list[int]:
    """Bitset rows: bit ``w`` of ``reach[v]`` is set iff v reaches w (v != w)."""
    reach = [0] * (dag.node_count + 1)
    for v in range(dag.node_count, 0, -1):
        r = 0
        for w in dag.succ[v]:
            r |= (1 << w) | reach[w]
        reach[v] = r
    return reach


def brute_force_width(dag: LabeledDag) -> int:
    """Width via Fulkerson's reduction: |V| minus a maximum matching of the
    bipartite graph with an edge (u, w) whenever u strictly reaches w."""
    n = dag.node_count
    if n > ORACLE_MAX_NODES:
        raise ValueError(f"oracle limited to {ORACLE_MAX_NODES} nodes, got {n}")
    reach = transitive_closure(dag)
    rows, cols = [], []
    for u in dag.nodes:
        r, w = reach[u], 0
        while r:
            if r & 1:
                rows.append(u - 1)
                cols.append(w - 1)
            r >>= 1
            w += 1
    if not rows:
        return n
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    match = maximum_bipartite_matching(graph, perm_type="column")
    return n - int(np.count_nonzero(match >= 0))
