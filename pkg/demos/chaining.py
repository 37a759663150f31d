"""
Co-linear chaining
==================

Anchors pair a DAG path with an interval of a read.  A chain orders anchors
along both the graph and the read; its score is the number of read positions
covered.
"""

from mpcchain import (
    Anchor,
    LabeledDag,
    SeqAnchor,
    chain_dag_mpc,
    chain_dag_naive,
    chain_dag_with_overlaps,
    chain_sequences,
    path_dag,
)

# Two sequences: the second anchor overlaps the first on the read, so only
# its four new positions count.
res = chain_sequences([SeqAnchor(1, 4, 1, 4), SeqAnchor(3, 8, 3, 8)])
print("sequence chaining coverage:", res.coverage)

###############################################################################
# On the diamond, node 1 reaches node 4, so anchors on them chain.  Anchors on
# the two parallel branches do not.

diamond = LabeledDag(4, [(1, 2), (1, 3), (2, 4), (3, 4)])
anchors = [Anchor((1,), 1, 2), Anchor((4,), 3, 5), Anchor((2,), 1, 3), Anchor((3,), 4, 6)]
naive = chain_dag_naive(diamond, anchors)
fast = chain_dag_mpc(diamond, anchors)
print("naive:", naive.coverage, naive.chain, " path cover:", fast.coverage, fast.chain)
print("same per-anchor scores:", naive.C == fast.C)

###############################################################################
# Two anchors sharing node 3 cannot chain through a graph path, but they can
# when one path continues the other by a suffix-prefix overlap.

path = path_dag(n=5)
anchors = [Anchor((1, 2, 3), 1, 3), Anchor((3, 4, 5), 4, 6)]
print("without overlaps:", chain_dag_mpc(path, anchors).coverage)
print("with overlaps   :", chain_dag_with_overlaps(path, anchors).coverage)
