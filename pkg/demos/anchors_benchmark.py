"""
From reads to chains, and a timing comparison
=============================================

A read sampled from a random walk, with a few substitutions, is matched
against the graph.  Short matches are plentiful on a four-letter alphabet, so
only the longest ones are kept.  Both chaining methods score the same anchors; the
path-cover method touches only the cover trees instead of searching the
graph once per anchor.
"""

import time

from mpcchain import AnchorParams, chain_dag_mpc, chain_dag_naive, cover_and_links, find_anchors, generate_dag
from mpcchain.anchors import sample_read

dag = generate_dag(3000, 5, label_alphabet=4, seed=1)
read, walk = sample_read(dag, 400, mutation_rate=0.05, seed=2)
anchors = find_anchors(dag, read, AnchorParams(min_length=4, max_anchors=1500))
print(f"|V|={dag.node_count} |E|={dag.edge_count} read={len(read)} anchors={len(anchors)}")

cover, _, links = cover_and_links(dag)
t0 = time.perf_counter()
naive = chain_dag_naive(dag, anchors)
t1 = time.perf_counter()
fast = chain_dag_mpc(dag, anchors, cover, links)
t2 = time.perf_counter()
print(f"cover size {cover.K}; coverage naive={naive.coverage} mpc={fast.coverage}")
print(f"naive {1000 * (t1 - t0):.1f} ms, path cover {1000 * (t2 - t1):.1f} ms")

###############################################################################
# The ``bench`` command runs this over a grid of widths and anchor counts:
#
#     mpcchain bench --quick --format text
