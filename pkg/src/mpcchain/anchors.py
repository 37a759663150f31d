"""Exact-match anchors between a labeled DAG and a read.

``ext[v, j]`` is the length of the longest exact match between a path ending
at ``v`` and ``R[..j]``: 0 when ``label(v) != R[j]``, otherwise one more than
the best ``ext[u, j - 1]`` over in-neighbours ``u``.  A state is reported when
``ext >= min_length`` and no out-neighbour matches ``R[j + 1]``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .chaining import Anchor
from .graph import GraphError, LabeledDag


@dataclass(frozen=True)
class AnchorParams:
    min_length: int = 1
    max_anchors: Optional[int] = None

    def __post_init__(self):
        if self.min_length < 1:
            raise ValueError("min_length must be >= 1")
        if self.max_anchors is not None and self.max_anchors < 0:
            raise ValueError("max_anchors must be non-negative")


def _check_inputs(dag: LabeledDag, R: Sequence[int]) -> np.ndarray:
    if not dag.is_labeled:
        raise GraphError("anchor finding needs a labeled DAG")
    read = np.asarray(R)
    if read.size and (read.dtype.kind not in "iu" or read.min() < 0):
        raise ValueError("read symbols must be non-negative integer codes, like node labels")
    return read.astype(np.int64, copy=False)


def match_lengths(dag: LabeledDag, R: Sequence[int]) -> np.ndarray:
    """The ``ext`` table, shape ``(|V| + 1, |R| + 1)``; row 0 and column 0 are zero."""
    read = _check_inputs(dag, R)
    m = len(read)
    ext = np.zeros((dag.node_count + 1, m + 1), dtype=np.int32)
    labels = dag.labels
    for v in dag.nodes:
        match = read == labels[v]
        if not match.any():
            continue
        row = ext[v]
        preds = dag.pred[v]
        if preds:
            best = ext[list(preds), :m].max(axis=0) if len(preds) > 1 else ext[preds[0], :m]
            row[1:] = np.where(match, best + 1, 0)
        else:
            row[1:] = match
    return ext


def find_anchors(dag: LabeledDag, R: Sequence[int], params: AnchorParams = AnchorParams()) -> list[Anchor]:
    """Maximal exact matches of length >= ``params.min_length``.

    One witness path per reported state, built backwards through the
    smallest-id in-neighbour that realises the match length.  With
    ``max_anchors`` the longest anchors are kept (ties by position then node).
    """
    ext = match_lengths(dag, R)
    m = ext.shape[1] - 1
    if m == 0:
        return []
    extendable = np.zeros_like(ext, dtype=bool)
    for v in dag.nodes:
        for w in dag.succ[v]:
            extendable[v, :m] |= ext[w, 1:] > 0
    mask = (ext >= params.min_length) & ~extendable
    vs, js = np.nonzero(mask)
    states = sorted(zip(ext[vs, js].tolist(), vs.tolist(), js.tolist()), key=lambda t: (-t[0], t[2], t[1]))
    if params.max_anchors is not None:
        states = states[: params.max_anchors]
    anchors = []
    pred = dag.pred
    for length, v, j in states:
        path = [v]
        x, jj = v, j
        for need in range(length - 1, 0, -1):
            jj -= 1
            x = next(u for u in pred[x] if ext[u, jj] == need)
            path.append(x)
        path.reverse()
        anchors.append(Anchor(tuple(path), j - length + 1, j))
    anchors.sort(key=lambda a: (a.d, a.c, a.path))
    return anchors


def brute_force_mems(dag: LabeledDag, R: Sequence[int], min_length: int) -> set[tuple[int, int, int]]:
    """``(last node, c, d)`` of every maximal match, by enumerating all paths.

    For each ``(v, d)`` the left end is the furthest any path into ``v``
    reaches; right-maximality asks that no out-neighbour of ``v`` matches
    ``R[d + 1]``.
    """
    from .lis import _all_paths

    R = list(R)
    longest: dict[tuple[int, int], int] = {}
    for p in _all_paths(dag):
        lab = dag.path_label(p)
        for d in range(1, len(R) + 1):
            k = 0
            while k < len(p) and k < d and lab[-1 - k] == R[d - 1 - k]:
                k += 1
            if k:
                key = (p[-1], d)
                longest[key] = max(longest.get(key, 0), k)
    out = set()
    for (v, d), k in longest.items():
        if k < min_length:
            continue
        if d < len(R) and any(dag.labels[w] == R[d] for w in dag.succ[v]):
            continue
        out.add((v, d - k + 1, d))
    return out


def sample_read(dag: LabeledDag, length: int, mutation_rate: float = 0.0, alphabet: int = 4, seed: int = 0):
    """Label string of a random walk (from a random source) with substitutions.

    Returns ``(read, walk)``; the read may be shorter than ``length`` when the
    walk hits a sink first.
    """
    if not dag.is_labeled:
        raise GraphError("needs a labeled DAG")
    rng = random.Random(seed)
    sources = [v for v in dag.nodes if not dag.pred[v]]
    walk = [rng.choice(sources)]
    while len(walk) < length and dag.succ[walk[-1]]:
        walk.append(rng.choice(dag.succ[walk[-1]]))
    read = []
    for v in walk:
        x = dag.labels[v]
        if mutation_rate and rng.random() < mutation_rate:
            x = rng.choice([a for a in range(alphabet) if a != x] or [x])
        read.append(x)
    return read, walk
