"""Co-linear chaining of anchors against a read R.

Three precedence variants are supported:

* ``sequence``: anchors ``([x..y], [c..d])`` between two sequences; consecutive
  anchors need ``y' < y`` and ``d' < d``.
* ``overlap_limited``: anchors ``(P, [c..d])`` with P a DAG path; consecutive
  anchors need a non-empty DAG path from the last node of ``P'`` to the first
  node of ``P``, and ``d' < d``.
* ``general``: like ``overlap_limited`` but paths may also continue each other
  through a suffix-prefix overlap (see :func:`has_suffix_prefix_overlap`).

All variants maximise the ordered coverage of R, the number of positions lying
in at least one chained interval.  ``C[j]`` is the best coverage of a chain
ending with anchor ``j``.  With predecessor ``j'`` it is ``C[j'] + (d - c + 1)``
when ``d' < c`` and ``C[j'] + (d - d')`` when ``c <= d' < d``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import GraphError, LabeledDag
from .mpc import PathCover
from .reach import ForwardLinks, cover_and_links
from .rmq import NEG_INF, RmqTree


@dataclass(frozen=True)
class Anchor:
    """Path ``path`` of the DAG matched to the read interval ``[c..d]`` (1-based)."""

    path: tuple[int, ...]
    c: int
    d: int

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(int(v) for v in self.path))
        if not self.path:
            raise ValueError("anchor path must be non-empty")
        if not 1 <= self.c <= self.d:
            raise ValueError(f"anchor interval must satisfy 1 <= c <= d, got [{self.c}..{self.d}]")

    @property
    def first(self) -> int:
        return self.path[0]

    @property
    def last(self) -> int:
        return self.path[-1]

    @property
    def length(self) -> int:
        return self.d - self.c + 1


@dataclass(frozen=True)
class SeqAnchor:
    """Interval ``[x..y]`` of T matched to interval ``[c..d]`` of R."""

    x: int
    y: int
    c: int
    d: int

    def __post_init__(self):
        if not self.x <= self.y:
            raise ValueError("need x <= y")
        if not 1 <= self.c <= self.d:
            raise ValueError(f"anchor interval must satisfy 1 <= c <= d, got [{self.c}..{self.d}]")

    @property
    def length(self) -> int:
        return self.d - self.c + 1


@dataclass(frozen=True)
class ChainResult:
    coverage: int
    best_index: Optional[int]
    C: tuple[int, ...]
    chain: tuple[int, ...]
    pred: tuple[Optional[int], ...]


def _result(C, pred) -> ChainResult:
    if not C:
        return ChainResult(0, None, (), (), ())
    best = max(range(len(C)), key=lambda j: (C[j], -j))
    chain = []
    j = best
    while j is not None:
        chain.append(j)
        j = pred[j]
    chain.reverse()
    return ChainResult(C[best], best, tuple(C), tuple(chain), tuple(pred))


def _chain_step(Cprev: int, dprev: int, c: int, d: int) -> Optional[int]:
    if dprev < c:
        return Cprev + (d - c + 1)
    if dprev < d:
        return Cprev + (d - dprev)
    return None


def chain_coverage(M: Sequence, chain: Sequence[int]) -> int:
    """Ordered coverage of R computed directly from the chained intervals."""
    covered = set()
    for j in chain:
        covered.update(range(M[j].c, M[j].d + 1))
    return len(covered)


def _key_set(M):
    return sorted({0, *(m.d for m in M)})


def chain_sequences(M: Sequence[SeqAnchor]) -> ChainResult:
    """Two-sequence chaining in O(N log N).

    Anchors are processed by increasing ``y``; anchors sharing the same ``y``
    are all scored before any of them is inserted, which keeps ``y`` strictly
    increasing along a chain.  ``T`` holds ``C[j]`` and ``I`` holds
    ``C[j] - d_j``, both keyed by ``d``.
    """
    N = len(M)
    keys = _key_set(M)
    T = RmqTree.with_keys(keys)
    I = RmqTree.with_keys(keys)
    C = [0] * N
    pred: list[Optional[int]] = [None] * N
    order = sorted(range(N), key=lambda j: (M[j].y, M[j].d))
    g = 0
    while g < N:
        h = g
        while h < N and M[order[h]].y == M[order[g]].y:
            h += 1
        group = order[g:h]
        for j in group:
            m = M[j]
            va, pa = T.rmaxq_arg(0, m.c - 1)
            best, arg = m.length + va, pa
            vb, pb = I.rmaxq_arg(m.c, m.d - 1)
            if m.d + vb > best:
                best, arg = m.d + vb, pb
            C[j] = int(best)
            pred[j] = arg
        for j in group:
            T.update(M[j].d, C[j], j)
            I.update(M[j].d, C[j] - M[j].d, j)
        g = h
    return _result(C, pred)


def _check_anchors(dag: LabeledDag, M: Sequence[Anchor]) -> None:
    for j, m in enumerate(M):
        if not dag.is_path(m.path):
            raise GraphError(f"anchor {j}: {m.path} is not a path of the DAG")


def chain_dag_naive(dag: LabeledDag, M: Sequence[Anchor]) -> ChainResult:
    """Overlap-limited chaining in O((|V| + |E|) N).

    Anchors are visited in topological order of their last node (ties: last
    node, first node, then ``d``).  For each one, a DFS over reversed edges
    from the in-neighbours of its first node finds every anchor whose last
    node strictly precedes it.
    """
    _check_anchors(dag, M)
    N = len(M)
    n = dag.node_count
    pred_nodes = dag.pred
    ends: list[list[int]] = [[] for _ in range(n + 1)]
    for j, m in enumerate(M):
        ends[m.last].append(j)
    order = sorted(range(N), key=lambda j: (M[j].last, M[j].first, M[j].d))
    C = [m.length for m in M]
    pred: list[Optional[int]] = [None] * N
    stamp = [-1] * (n + 1)
    ds = [m.d for m in M]
    for j in order:
        m = M[j]
        c, d = m.c, m.d
        best, arg = C[j], None
        stack = []
        for u in pred_nodes[m.first]:
            if stamp[u] != j:
                stamp[u] = j
                stack.append(u)
        while stack:
            x = stack.pop()
            for j2 in ends[x]:
                d2 = ds[j2]
                if d2 < c:
                    val = C[j2] + d - c + 1
                elif d2 < d:
                    val = C[j2] + d - d2
                else:
                    continue
                if val > best:
                    best, arg = val, j2
            for u in pred_nodes[x]:
                if stamp[u] != j:
                    stamp[u] = j
                    stack.append(u)
        C[j] = best
        pred[j] = arg
    return _result(C, pred)


def _chain_with_cover(dag, M, cover, links, overlaps):
    _check_anchors(dag, M)
    if cover is None or links is None:
        cover, _, links = cover_and_links(dag, cover)
    N = len(M)
    n = dag.node_count
    keys = _key_set(M)
    T = [RmqTree.with_keys(keys) for _ in range(cover.K)]
    I = [RmqTree.with_keys(keys) for _ in range(cover.K)]
    starts: list[list[int]] = [[] for _ in range(n + 1)]
    ends: list[list[int]] = [[] for _ in range(n + 1)]
    for j, m in enumerate(M):
        starts[m.first].append(j)
        ends[m.last].append(j)
    C = [m.length for m in M]
    pred: list[Optional[int]] = [None] * N
    cs = [m.c for m in M]
    ds = [m.d for m in M]
    # every tree has the same key array, so the leaf ranges are shared
    probe = T[0] if T else RmqTree.with_keys(keys)
    span_a = [probe.span(0, m.c - 1) for m in M]
    span_b = [probe.span(m.c, m.d - 1) for m in M]

    def query(i, js):
        Ta, Ia = T[i].span_max, I[i].span_max
        for j in js:
            c, d = cs[j], ds[j]
            va, pa = Ta(*span_a[j])
            vb, pb = Ia(*span_b[j])
            ca = d - c + 1 + va
            cb = d + vb
            if ca >= cb:
                if ca > C[j]:
                    C[j], pred[j] = int(ca), pa
            elif cb > C[j]:
                C[j], pred[j] = int(cb), pb

    paths_of_node = cover.paths_of_node
    self_links, cross_links = links.self_links, links.cross_links
    for v in range(1, n + 1):
        # Links from v to itself see only anchors ending strictly before v on
        # that path, so they run before the anchors ending at v are inserted.
        if starts[v]:
            for i in self_links[v]:
                query(i, starts[v])
        for j in ends[v]:
            if overlaps is not None:
                c, d = cs[j], ds[j]
                for j2, _ in overlaps[j]:
                    val = _chain_step(C[j2], ds[j2], c, d)
                    if val is not None and val > C[j]:
                        C[j], pred[j] = val, j2
            for i in paths_of_node[v]:
                T[i].update(ds[j], C[j], j)
                I[i].update(ds[j], C[j] - ds[j], j)
        for w, i in cross_links[v]:
            if starts[w]:
                query(i, starts[w])
    return _result(C, pred)


def chain_dag_mpc(
    dag: LabeledDag,
    M: Sequence[Anchor],
    cover: Optional[PathCover] = None,
    links: Optional[ForwardLinks] = None,
) -> ChainResult:
    """Overlap-limited chaining in O(K N log N) given a cover of K paths.

    Nodes are visited in topological order.  Each cover path ``i`` owns two
    trees keyed by ``d``: ``T[i]`` with ``C[j]`` and ``I[i]`` with ``C[j] - d``
    for anchors ending on that path.  Following the link ``(w, i)`` out of
    ``v`` scores every anchor starting at ``w`` against the anchors ending on
    path ``i`` up to ``v``.
    """
    return _chain_with_cover(dag, M, cover, links, None)


def has_suffix_prefix_overlap(a: Sequence[int], b: Sequence[int]) -> int:
    """Length of the suffix of ``a`` equal to a proper prefix of ``b``, or 0.

    Literal check of the overlap equations: some start ``k`` in
    ``max(1, 2 + i - j) .. i`` (1-based, ``i = len(a)``, ``j = len(b)``) with
    ``a[k..i] == b[1..1 + i - k]``.  In a DAG paths are simple, so at most one
    ``k`` can match.
    """
    i, j = len(a), len(b)
    for k in range(max(1, 2 + i - j), i + 1):
        if all(a[k - 1 + t] == b[t] for t in range(i - k + 1)):
            return i - k + 1
    return 0


OverlapTable = tuple  # per anchor j: tuple of (j', overlap length) with P_j' overlapping into P_j


def precompute_overlaps(M: Sequence[Anchor]) -> OverlapTable:
    """All ordered pairs ``(j', j)`` where ``P_j'`` ends with a proper prefix of ``P_j``.

    Paths are simple, so the first node of ``P_j`` occurs at most once in
    ``P_j'``; an index from node to ``(anchor, position)`` yields the only
    candidate offset per anchor pair, which is then confirmed by comparing
    the suffix with the prefix.
    """
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for j, m in enumerate(M):
        for pos, v in enumerate(m.path):
            occurrences.setdefault(v, []).append((j, pos))
    table = []
    for j, m in enumerate(M):
        p = m.path
        found = []
        for j2, pos in occurrences.get(p[0], ()):
            q = M[j2].path
            length = len(q) - pos
            if length < len(p) and q[pos:] == p[:length]:
                found.append((j2, length))
        table.append(tuple(found))
    return tuple(table)


def chain_dag_with_overlaps(
    dag: LabeledDag,
    M: Sequence[Anchor],
    cover: Optional[PathCover] = None,
    links: Optional[ForwardLinks] = None,
    overlaps: Optional[OverlapTable] = None,
) -> ChainResult:
    """General chaining: path-cover chaining plus suffix-prefix overlaps.

    An overlapping predecessor ends strictly inside ``P_j``, so its ``C`` value
    is final when the last node of ``P_j`` is reached; each overlap is scored
    there in constant time, before ``j`` enters the trees.
    """
    if overlaps is None:
        overlaps = precompute_overlaps(M)
    return _chain_with_cover(dag, M, cover, links, overlaps)


# ---------------------------------------------------------------- oracles

ORACLE_MAX_ANCHORS = 12


def _strict_descendants(dag: LabeledDag) -> list[set[int]]:
    """Per node, the nodes reachable by a non-empty path (plain DFS)."""
    out = [set() for _ in range(dag.node_count + 1)]
    for v in dag.nodes:
        seen = set()
        stack = list(dag.succ[v])
        while stack:
            x = stack.pop()
            if x not in seen:
                seen.add(x)
                stack.extend(dag.succ[x])
        out[v] = seen
    return out


def precedes_limited(desc, a: Anchor, b: Anchor) -> bool:
    return b.first in desc[a.last]


def precedes_general(desc, a: Anchor, b: Anchor) -> bool:
    if not set(a.path) & set(b.path):
        return b.first in desc[a.last]
    return has_suffix_prefix_overlap(a.path, b.path) > 0


def brute_force_chain(instance, M: Sequence, variant: str) -> int:
    """Best ordered coverage by enumerating every valid chain.

    ``instance`` is ignored for ``variant="sequence"`` and is the DAG
    otherwise.  Chains are built in increasing ``d``; coverage is the size of
    the union of their intervals, kept as a bitmask.
    """
    N = len(M)
    if N > ORACLE_MAX_ANCHORS:
        raise ValueError(f"oracle limited to {ORACLE_MAX_ANCHORS} anchors")
    if N == 0:
        return 0
    if variant == "sequence":
        ok = lambda a, b: a.y < b.y
    elif variant in ("overlap_limited", "general"):
        desc = _strict_descendants(instance)
        rel = precedes_limited if variant == "overlap_limited" else precedes_general
        ok = lambda a, b: rel(desc, a, b)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    masks = [((1 << (m.d - m.c + 1)) - 1) << m.c for m in M]
    succ = [[b for b in range(N) if M[a].d < M[b].d and ok(M[a], M[b])] for a in range(N)]
    best = 0
    stack = [(a, masks[a]) for a in range(N)]
    while stack:
        a, mask = stack.pop()
        best = max(best, bin(mask).count("1"))
        for b in succ[a]:
            stack.append((b, mask | masks[b]))
    return best


def is_valid_chain(instance, M: Sequence, chain: Sequence[int], variant: str) -> bool:
    if variant == "sequence":
        ok = lambda a, b: a.y < b.y
    else:
        desc = _strict_descendants(instance)
        rel = precedes_limited if variant == "overlap_limited" else precedes_general
        ok = lambda a, b: rel(desc, a, b)
    return all(M[a].d < M[b].d and ok(M[a], M[b]) for a, b in zip(chain, chain[1:]))
