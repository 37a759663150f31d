"""Random instance builders shared by the test modules."""
import random

from mpcchain.chaining import Anchor, SeqAnchor
from mpcchain.graph import LabeledDag


def random_dag(rng: random.Random, n_max=30, p=None, alphabet=0, n_min=1):
    n = rng.randint(n_min, n_max)
    if p is None:
        p = rng.choice([0.05, 0.1, 0.2, 0.35])
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    labels = [rng.randrange(alphabet) for _ in range(n)] if alphabet else None
    return LabeledDag(n, edges, labels)


def random_digraph(rng: random.Random, n_max=25):
    """Arbitrary digraph on 1..n, frequently with cycles."""
    n = rng.randint(1, n_max)
    p = rng.choice([0.03, 0.08, 0.15])
    edges = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v and rng.random() < p]
    return n, edges


def diamond(labels=None):
    return LabeledDag(4, [(1, 2), (1, 3), (2, 4), (3, 4)], labels)


def random_path(rng, dag, max_len=4):
    p = [rng.randint(1, dag.node_count)]
    while len(p) < max_len and dag.succ[p[-1]] and rng.random() < 0.7:
        p.append(rng.choice(dag.succ[p[-1]]))
    return tuple(p)


def random_anchors(rng, dag, n_max=12, read_len=16, max_path=4):
    out = []
    for _ in range(rng.randint(0, n_max)):
        c = rng.randint(1, read_len)
        d = rng.randint(c, min(read_len, c + 5))
        out.append(Anchor(random_path(rng, dag, max_path), c, d))
    return out


def random_seq_anchors(rng, n_max=12, span=16):
    out = []
    for _ in range(rng.randint(0, n_max)):
        x = rng.randint(1, span)
        y = rng.randint(x, x + 4)
        c = rng.randint(1, span)
        d = rng.randint(c, c + 5)
        out.append(SeqAnchor(x, y, c, d))
    return out


def dfs_reach_sets(n, edges):
    """reach[x] = nodes reachable from x by a possibly empty path."""
    succ = [[] for _ in range(n + 1)]
    for u, v in edges:
        succ[u].append(v)
    out = [set() for _ in range(n + 1)]
    for x in range(1, n + 1):
        seen = {x}
        stack = [x]
        while stack:
            u = stack.pop()
            for w in succ[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out[x] = seen
    return out


def overlap_instance(rng, extras=4):
    """A DAG and anchors whose best chain must use a suffix-prefix overlap.

    A random path of length >= 3 is split into two anchors sharing at least
    one node; their read intervals are consecutive, so only an overlapping
    chain covers both.  Up to ``extras`` random short anchors are added.
    """
    while True:
        dag = random_dag(rng, n_max=12, n_min=3, p=0.3)
        start = rng.randint(1, dag.node_count)
        path = [start]
        while dag.succ[path[-1]] and len(path) < 6:
            path.append(rng.choice(dag.succ[path[-1]]))
        if len(path) >= 3:
            break
    share = rng.randint(1, len(path) - 2)
    cut = rng.randint(share, len(path) - 1)  # first anchor ends at index cut-1
    first = tuple(path[:cut])
    second = tuple(path[cut - share:])
    len1 = rng.randint(2, 5)
    len2 = rng.randint(2, 5)
    c1 = rng.randint(1, 3)
    M = [Anchor(first, c1, c1 + len1 - 1), Anchor(second, c1 + len1, c1 + len1 + len2 - 1)]
    for _ in range(rng.randint(0, extras)):
        p = random_path(rng, dag, 3)
        c = rng.randint(1, 8)
        M.append(Anchor(p, c, c + rng.randint(0, 1)))
    rng.shuffle(M)
    return dag, M


def lis_worked_example():
    """Labeled DAG and cover for the three-path LIS walkthrough.

    Node (label): 1 (4) is u, 2 (3), 3 (7), 4 (6), 5 (5), 6 (7) is u', 7 (9),
    8 (8) is v.  Paths: (3, 5, 7, 8), (2, 4, 6) and (1).  v is reached from u
    through the third path, from u' through the second, and lies on the first.
    """
    from mpcchain.mpc import PathCover

    labels = [4, 3, 7, 6, 5, 7, 9, 8]
    edges = [(1, 8), (2, 4), (4, 6), (6, 8), (3, 5), (5, 7), (7, 8), (2, 5)]
    dag = LabeledDag(8, sorted(edges), labels)
    cover = PathCover.from_paths([(3, 5, 7, 8), (2, 4, 6), (1,)], 8)
    return dag, cover
