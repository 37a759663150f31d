"""
Minimum path covers
===================

A path cover of a DAG is a set of paths touching every node.  The fewest
paths needed is the width of the DAG, the size of its largest set of
pairwise unreachable nodes.
"""

from mpcchain import LabeledDag, generate_dag, greedy_path_cover, minimum_path_cover
from mpcchain.mpc import brute_force_width, build_flow_from_cover, shrink_to_minimum

# A small diamond: node 1 branches to 2 and 3, which meet again at 4.
diamond = LabeledDag(4, [(1, 2), (1, 3), (2, 4), (3, 4)])
print("greedy :", greedy_path_cover(diamond).paths)

###############################################################################
# The greedy cover is cheap but can be larger than necessary.  Turning it into
# a flow and pushing redundant units back to the source gives an optimal one.

dag = generate_dag(150, 6, seed=3)
greedy = greedy_path_cover(dag)
net = shrink_to_minimum(build_flow_from_cover(dag, greedy))
print(f"greedy paths: {greedy.K}, after shrinking: {net.value}, augmentations: {net.augmentations}")

###############################################################################
# The matching-based oracle agrees.

cover = minimum_path_cover(dag)
cover.validate(dag)
print("minimum cover:", cover.K, " oracle width:", brute_force_width(dag))
