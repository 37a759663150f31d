"""DAG representation, parsing, serialization and synthetic graphs.

Nodes are the integers ``1..n`` and every edge ``(u, v)`` has ``u < v``, so
the identity order is a topological order.  Inputs that are not sorted this
way are renumbered by :func:`parse_dag`.
"""
from __future__ import annotations

import heapq
from bisect import bisect_left
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence


class GraphError(ValueError):
    """Invalid graph structure."""


class CycleError(GraphError):
    """Raised when a graph that must be acyclic contains a cycle."""

    def __init__(self, edge: tuple[int, int]):
        self.edge = edge
        super().__init__(f"not a DAG: back edge {edge[0]} -> {edge[1]}")


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class LabeledDag:
    """Immutable DAG on nodes ``1..node_count`` with optional integer labels.

    ``succ[v]`` and ``pred[v]`` hold sorted neighbour tuples; index 0 is unused
    so that node ids can be used directly.
    """

    __slots__ = ("node_count", "edges", "labels", "succ", "pred")

    def __init__(
        self,
        node_count: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Mapping[int, int] | Sequence[int]] = None,
    ):
        if node_count < 1:
            raise GraphError("a DAG needs at least one node")
        edges = tuple((int(u), int(v)) for u, v in edges)
        seen = set()
        succ: list[list[int]] = [[] for _ in range(node_count + 1)]
        pred: list[list[int]] = [[] for _ in range(node_count + 1)]
        for u, v in edges:
            if not (1 <= u <= node_count and 1 <= v <= node_count):
                raise GraphError(f"edge ({u}, {v}) has a node outside 1..{node_count}")
            if u == v:
                raise GraphError(f"self-loop on node {u}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) violates the id order; use parse_dag to renumber")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            succ[u].append(v)
            pred[v].append(u)
        object.__setattr__(self, "node_count", node_count)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "succ", tuple(tuple(sorted(s)) for s in succ))
        object.__setattr__(self, "pred", tuple(tuple(sorted(p)) for p in pred))
        object.__setattr__(self, "labels", _normalize_labels(labels, node_count))

    def __setattr__(self, name, value):
        raise AttributeError("LabeledDag is immutable")

    @property
    def nodes(self) -> range:
        return range(1, self.node_count + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def is_labeled(self) -> bool:
        return self.labels is not None

    def label(self, v: int) -> int:
        if self.labels is None:
            raise GraphError("graph is unlabeled")
        return self.labels[v]

    def has_edge(self, u: int, v: int) -> bool:
        s = self.succ[u]
        i = bisect_left(s, v)
        return i < len(s) and s[i] == v

    def is_path(self, nodes: Sequence[int]) -> bool:
        if not nodes:
            return False
        if any(not (1 <= v <= self.node_count) for v in nodes):
            return False
        return all(self.has_edge(a, b) for a, b in zip(nodes, nodes[1:]))

    def path_label(self, nodes: Sequence[int]) -> list[int]:
        return [self.label(v) for v in nodes]

    def with_labels(self, labels) -> "LabeledDag":
        return LabeledDag(self.node_count, self.edges, labels)

    def __eq__(self, other):
        if not isinstance(other, LabeledDag):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and sorted(self.edges) == sorted(other.edges)
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.node_count, tuple(sorted(self.edges)), self.labels))

    def __repr__(self):
        tag = ", labeled" if self.is_labeled else ""
        return f"LabeledDag(|V|={self.node_count}, |E|={self.edge_count}{tag})"


def _normalize_labels(labels, n):
    """Return labels as a tuple indexed by node (slot 0 is None)."""
    if labels is None:
        return None
    if isinstance(labels, Mapping):
        missing = [v for v in range(1, n + 1) if v not in labels]
        if missing:
            raise GraphError(f"node {missing[0]} has no label")
        extra = [v for v in labels if not (1 <= v <= n)]
        if extra:
            raise GraphError(f"label given for unknown node {extra[0]}")
        values = [labels[v] for v in range(1, n + 1)]
    else:
        values = list(labels)
        if len(values) == n + 1 and values[0] is None:
            values = values[1:]
        if len(values) != n:
            raise GraphError(f"expected {n} labels, got {len(values)}")
    for v, lab in enumerate(values, 1):
        if not isinstance(lab, int) or isinstance(lab, bool) or lab < 0:
            raise GraphError(f"label of node {v} must be a non-negative integer, got {lab!r}")
    return (None, *values)


@dataclass(frozen=True)
class TopoOrder:
    order: tuple[int, ...]
    rank: tuple[int, ...]  # rank[v] = position of v in order; slot 0 unused


def topological_order(dag: LabeledDag) -> TopoOrder:
    """Kahn's algorithm, smallest available node id first."""
    order = _kahn(dag.node_count, dag.succ, [len(p) for p in dag.pred])
    rank = [0] * (dag.node_count + 1)
    for r, v in enumerate(order):
        rank[v] = r
    return TopoOrder(tuple(order), tuple(rank))


def _kahn(n, succ, indeg):
    indeg = list(indeg)
    heap = [v for v in range(1, n + 1) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for w in succ[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order


def _find_back_edge(n, succ, candidates):
    """Return one edge closing a cycle among ``candidates`` (iterative DFS)."""
    state = dict.fromkeys(candidates, 0)  # 0 new, 1 on stack, 2 done
    for root in sorted(candidates):
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        state[root] = 1
        while stack:
            u, it = stack[-1]
            for w in it:
                if w not in state:
                    continue
                if state[w] == 1:
                    return (u, w)
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(succ[w])))
                    break
            else:
                state[u] = 2
                stack.pop()
    raise AssertionError("no cycle found among candidates")


def parse_graph(text: str) -> tuple[int, list[tuple[int, int]], Optional[dict[int, int]]]:
    """Parse the graph file format without any acyclicity checks.

    Format: a header ``|V| |E|``, then ``|E|`` lines ``u v``, then optionally
    ``|V|`` lines ``node label``.  Blank lines and lines starting with ``#``
    are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(lineno, f"expected integers, got {line!r}") from None
        if len(nums) != 2:
            raise ParseError(lineno, f"expected two integers, got {len(nums)}")
        rows.append((lineno, nums[0], nums[1]))
    if not rows:
        raise ParseError(1, "missing header line")
    lineno, n, m = rows[0]
    if n < 1 or m < 0:
        raise ParseError(lineno, "header must be '|V| |E|' with |V| >= 1")
    body = rows[1:]
    if len(body) < m:
        raise ParseError(body[-1][0] if body else lineno, f"expected {m} edge lines, got {len(body)}")
    edges = []
    seen = set()
    for lineno, u, v in body[:m]:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"edge ({u}, {v}) references a node outside 1..{n}")
        if u == v:
            raise ParseError(lineno, f"self-loop on node {u}")
        if (u, v) in seen:
            raise ParseError(lineno, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    label_rows = body[m:]
    labels = None
    if label_rows:
        if len(label_rows) != n:
            raise ParseError(label_rows[-1][0], f"expected {n} label lines, got {len(label_rows)}")
        labels = {}
        for lineno, v, lab in label_rows:
            if not 1 <= v <= n:
                raise ParseError(lineno, f"label for unknown node {v}")
            if v in labels:
                raise ParseError(lineno, f"node {v} labeled twice")
            if lab < 0:
                raise ParseError(lineno, "labels must be non-negative")
            labels[v] = lab
    return n, edges, labels


def dag_from_edges(n: int, edges, labels=None) -> tuple[LabeledDag, dict[int, int]]:
    """Build a DAG from arbitrary ids ``1..n``, renumbering into a topological order.

    Returns the DAG and the map ``original id -> new id``.
    """
    succ = [[] for _ in range(n + 1)]
    indeg = [0] * (n + 1)
    for u, v in edges:
        succ[u].append(v)
        indeg[v] += 1
    order = _kahn(n, succ, indeg)
    if len(order) < n:
        placed = set(order)
        rest = [v for v in range(1, n + 1) if v not in placed]
        raise CycleError(_find_back_edge(n, succ, rest))
    new_id = {old: new for new, old in enumerate(order, 1)}
    new_edges = [(new_id[u], new_id[v]) for u, v in edges]
    new_labels = None
    if labels is not None:
        if isinstance(labels, Mapping):
            new_labels = {new_id[v]: lab for v, lab in labels.items()}
        else:
            new_labels = {new_id[v]: lab for v, lab in enumerate(labels, 1)}
    return LabeledDag(n, new_edges, new_labels), new_id


def parse_dag(text: str) -> tuple[LabeledDag, dict[int, int]]:
    """Parse the graph file format into a :class:`LabeledDag`.

    Returns ``(dag, renumbering)`` where ``renumbering`` maps each input id to
    its id in ``dag``; it is the identity when the input is already sorted.

    Raises:
        ParseError: malformed content (carries the line number).
        CycleError: the graph has a cycle (carries one back edge).
    """
    n, edges, labels = parse_graph(text)
    return dag_from_edges(n, edges, labels)


def serialize_dag(dag: LabeledDag) -> str:
    lines = [f"{dag.node_count} {dag.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in dag.edges)
    if dag.labels is not None:
        lines.extend(f"{v} {dag.labels[v]}" for v in dag.nodes)
    return "\n".join(lines) + "\n"


def generate_dag(
    nodes: int,
    target_width: int,
    label_alphabet: int = 0,
    seed: int = 0,
    cross_edges: Optional[int] = None,
    window: int = 64,
) -> LabeledDag:
    """Random DAG whose width is at most ``target_width``.

    Nodes are dealt to ``target_width`` backbone chains (each chain gets at
    least one node); consecutive chain members are joined by an edge, so the
    chains form a path cover.  ``cross_edges`` extra edges ``(u, v)`` with
    ``u < v <= u + window`` are then added; extra edges cannot increase the
    width.  ``label_alphabet > 0`` assigns uniform labels from
    ``0..label_alphabet-1``.
    """
    if target_width < 1 or nodes < target_width:
        raise ValueError("need 1 <= target_width <= nodes")
    rng = random.Random(seed)
    owner = list(range(target_width)) + [rng.randrange(target_width) for _ in range(nodes - target_width)]
    rng.shuffle(owner)
    last = [0] * target_width
    edges = set()
    for v, c in enumerate(owner, 1):
        if last[c]:
            edges.add((last[c], v))
        last[c] = v
    if cross_edges is None:
        cross_edges = nodes // 2
    attempts = 0
    target = len(edges) + cross_edges
    while len(edges) < target and attempts < 20 * cross_edges + 100 and nodes > 1:
        attempts += 1
        u = rng.randint(1, nodes - 1)
        v = rng.randint(u + 1, min(nodes, u + window))
        edges.add((u, v))
    labels = None
    if label_alphabet > 0:
        labels = [rng.randrange(label_alphabet) for _ in range(nodes)]
    return LabeledDag(nodes, sorted(edges), labels)


def path_dag(labels: Sequence[int] | None = None, n: Optional[int] = None) -> LabeledDag:
    """The path ``1 -> 2 -> ... -> n``, optionally labeled."""
    if n is None:
        n = len(labels)
    return LabeledDag(n, [(i, i + 1) for i in range(1, n)], labels)
