"""Cyclic base orderings and their forced-swap refinement.

A cyclic base ordering (CBO) arranges all 2n-2 edges in a circle so that
every window of n-1 consecutive edges is a spanning tree. A unique
exchange CBO (UECBO) is the stronger form realized by a sequence of
forced swaps: each swap is the only legal one for its outgoing edge, and
after n-1 swaps the two trees have traded places.
"""

from bispan import (
    MultiGraph,
    SwapSequence,
    TreePair,
    build_cbo,
    find_uecbo,
    join_uecbo_2sum,
    named_graph,
    reverse_uecbo,
    verify_cbo,
    verify_uecbo,
)

g, tp = named_graph("W5")
print("W5 start pair: S =", sorted(tp.S), " T =", sorted(tp.T))

cbo = build_cbo(tp)
print("constructed CBO:", cbo.pretty(), "windows ok:", verify_cbo(cbo))

ue = find_uecbo(tp)
print("forced swap sequence:", ue.pretty(), "verified:", verify_uecbo(ue))
rev = reverse_uecbo(ue)
print("its reversal:", rev.pretty(), "verified:", verify_uecbo(rev))

# orderings compose across a 2-clique sum: the two swaps that touch the
# seam edges fuse into one swap of the glued graph
k4 = [(0, 0, 1), (1, 0, 3), (2, 0, 2), (3, 1, 3), (4, 1, 2), (5, 2, 3)]
g1 = MultiGraph(4, k4)
a = find_uecbo(TreePair(g1, frozenset({0, 2, 3}), frozenset({1, 4, 5})))
g2 = MultiGraph(4, [(6, 0, 1), (7, 0, 2), (8, 0, 3), (9, 1, 2),
                    (10, 3, 1), (11, 3, 2)])
b = find_uecbo(TreePair(g2, frozenset({7, 10, 11}), frozenset({6, 8, 9})))
host = MultiGraph(6, [(0, 0, 1), (1, 0, 3), (2, 0, 2), (4, 1, 2),
                      (5, 2, 3), (6, 1, 4), (7, 1, 5), (9, 4, 5),
                      (10, 3, 4), (11, 3, 5)])
joined = join_uecbo_2sum(host, a, b, 3, 8)
print("joined across the seam:", joined.pretty(),
      "verified:", verify_uecbo(joined))
