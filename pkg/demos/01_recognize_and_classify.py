"""Recognizing bispanning graphs and splitting them into two trees.

A bispanning graph is one whose edge set partitions into two disjoint
spanning trees, so it always has exactly 2n-2 edges. This walk-through
builds a few graphs, finds the two trees, and classifies the graphs as
atomic or composite.
"""

from bispan import (
    MultiGraph,
    connectivity_class,
    find_bispanning_subgraph,
    find_two_trees,
    format_edge_list,
    is_atomic,
    named_graph,
    verify_bispanning,
)

# the complete graph on four vertices is the smallest simple example
k4, _ = named_graph("K4")
tp = find_two_trees(k4)
print("K4 edge list with one tree per color:")
print(format_edge_list(k4, tp.coloring()))

# the partition-counting oracle agrees with the constructive search
print("partition criterion:", verify_bispanning(k4))

# a path has a spanning tree but no second one
path = MultiGraph(4, [(0, 0, 1), (1, 1, 2), (2, 2, 3),
                      (3, 0, 1), (4, 0, 1), (5, 0, 1)])
print("path plus parallel edges bispanning?", find_two_trees(path) is not None)

# atomic graphs contain no smaller bispanning graph; composite ones do
for name in ("K4", "W5", "B6_3", "B6_6"):
    g, _ = named_graph(name)
    kind = "atomic" if is_atomic(g) else "composite"
    vc, ec = connectivity_class(g)
    sub = find_bispanning_subgraph(g)
    where = f", proper bispanning subgraph on vertices {sorted(sub)}" if sub else ""
    print(f"{name}: {kind}, connectivity class ({vc},{ec}){where}")
