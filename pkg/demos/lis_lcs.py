"""
Increasing and common subsequences on DAGs
==========================================

The same sweep solves both problems.  Nodes are visited in topological order;
every cover path keeps a range-maximum tree, and forward links tell each node
which trees hold the best partial answers reaching it.
"""

from mpcchain import LabeledDag, lcs_dag_sequence, lis_dag, lis_sequence, path_dag

print("LIS of 1 4 2 3 7 5 6:", [s for _, s in lis_sequence([1, 4, 2, 3, 7, 5, 6]).witness])

###############################################################################
# On a DAG the subsequence may follow any path.  Here the increasing run
# 1 < 2 < 3 exists only through the lower branch.

dag = LabeledDag(4, [(1, 2), (1, 3), (2, 4), (3, 4)], labels=[1, 5, 2, 3])
res = lis_dag(dag)
print("DAG LIS:", res.length, "through nodes", [v for v, _ in res.witness])

###############################################################################
# Longest common subsequence with a sequence S.  Labels are integer codes;
# letters are mapped with ``ord`` for readability.

word = lambda s: [ord(ch) for ch in s]
dag = LabeledDag(4, [(1, 2), (1, 3), (2, 4), (3, 4)], labels=word("abcd"))
res = lcs_dag_sequence(dag, word("acd"))
print("LCS with 'acd':", res.length, "pairs (node, position):", res.witness)

# a path DAG is just a string
print("path case:", lcs_dag_sequence(path_dag(word("AGGTAB")), word("GXTXAYB")).length)
