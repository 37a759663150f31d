"""
Constant-time reachability
==========================

Strongly connected components are contracted, the resulting DAG gets a
minimum path cover, and each query compares two positions on one cover path.
"""

import random

from mpcchain import ReachIndex
from mpcchain.reach import dfs_reachable

# a cycle 1 -> 2 -> 3 -> 1 feeding a tail 3 -> 4 -> 5
edges = [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5)]
index = ReachIndex(5, edges)
print("components after contraction:", index.dag.node_count, " width:", index.width)
for x, y in [(2, 1), (1, 5), (5, 1), (4, 4)]:
    print(f"reaches({x}, {y}) = {index.reaches(x, y)}")

###############################################################################
# Compare against plain DFS on a random digraph.

rng = random.Random(0)
n = 40
edges = {(rng.randint(1, n), rng.randint(1, n)) for _ in range(70)}
edges = [e for e in edges if e[0] != e[1]]
index = ReachIndex(n, edges)
agree = all(
    index.reaches(x, y) == (y in dfs_reachable(n, edges, x))
    for x in range(1, n + 1)
    for y in range(1, n + 1)
)
print("matches DFS on all", n * n, "pairs:", agree)
