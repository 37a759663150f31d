"""Keyed range-maximum structure with point updates.

The key set is fixed when the tree is built.  Every leaf stores a score and
an optional payload (used for tracebacks); :meth:`RmqTree.update` keeps the
larger of the old and new score.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Any, Iterable, Optional

NEG_INF = float("-inf")


class RmqTree:
    """Iterative segment tree over a sorted array of distinct keys.

    ``build`` is O(n); ``update`` and ``rmaxq`` are O(log n).
    """

    __slots__ = ("keys", "_pos", "_size", "_val", "_arg")

    def __init__(self, pairs: Iterable[tuple[int, float]] = (), payloads: Optional[Iterable[Any]] = None):
        pairs = list(pairs)
        keys = [k for k, _ in pairs]
        for a, b in zip(keys, keys[1:]):
            if a >= b:
                raise ValueError(f"keys must be strictly increasing, got {a} before {b}")
        self.keys = keys
        self._pos = {k: i for i, k in enumerate(keys)}
        n = len(keys)
        size = 1
        while size < n:
            size *= 2
        self._size = size
        val = [NEG_INF] * (2 * size)
        arg: list[Any] = [None] * (2 * size)
        val[size:size + n] = [v for _, v in pairs]
        if payloads is not None:
            arg[size:size + n] = list(payloads)
        for i in range(size - 1, 0, -1):
            l, r = 2 * i, 2 * i + 1
            if val[l] >= val[r]:
                val[i], arg[i] = val[l], arg[l]
            else:
                val[i], arg[i] = val[r], arg[r]
        self._val = val
        self._arg = arg

    @classmethod
    def with_keys(cls, keys: Iterable[int], zero_key: Optional[int] = 0) -> "RmqTree":
        """Tree over ``keys``, all at -inf except ``zero_key`` which holds 0."""
        return cls((k, 0 if k == zero_key else NEG_INF) for k in keys)

    def __len__(self):
        return len(self.keys)

    def __contains__(self, key):
        return key in self._pos

    def update(self, key: int, value: float, payload: Any = None) -> None:
        try:
            i = self._pos[key] + self._size
        except KeyError:
            raise KeyError(f"unknown key {key}") from None
        val, arg = self._val, self._arg
        if value <= val[i]:
            return
        val[i], arg[i] = value, payload
        i //= 2
        while i and val[i] < value:
            val[i], arg[i] = value, payload
            i //= 2

    def rmaxq(self, l: int, r: int) -> float:
        """Maximum score over keys in ``[l, r]``; -inf when no key lies there."""
        return self.rmaxq_arg(l, r)[0]

    def rmaxq_arg(self, l: int, r: int) -> tuple[float, Any]:
        """Like :meth:`rmaxq` but also returns the payload of the maximum."""
        return self.span_max(bisect_left(self.keys, l), bisect_right(self.keys, r))

    def span(self, l: int, r: int) -> tuple[int, int]:
        """Half-open leaf-index range of the keys in ``[l, r]``."""
        return bisect_left(self.keys, l), bisect_right(self.keys, r)

    def span_max(self, lo: int, hi: int) -> tuple[float, Any]:
        """Maximum and payload over leaves ``lo..hi-1`` (see :meth:`span`)."""
        lo += self._size
        hi += self._size
        best, best_arg = NEG_INF, None
        val, arg = self._val, self._arg
        while lo < hi:
            if lo & 1:
                if val[lo] > best:
                    best, best_arg = val[lo], arg[lo]
                lo += 1
            if hi & 1:
                hi -= 1
                if val[hi] > best:
                    best, best_arg = val[hi], arg[hi]
            lo //= 2
            hi //= 2
        return best, best_arg

    def value(self, key: int) -> float:
        return self._val[self._pos[key] + self._size]

    def items(self):
        base = self._size
        return [(k, self._val[base + i]) for i, k in enumerate(self.keys)]


def build(pairs) -> RmqTree:
    return RmqTree(pairs)


def update(tree: RmqTree, key: int, value: float, payload: Any = None) -> None:
    tree.update(key, value, payload)


def rmaxq(tree: RmqTree, l: int, r: int) -> float:
    return tree.rmaxq(l, r)
