"""Tree pair search, the partition oracle, structure classification."""

import itertools

import pytest

from bispan.bispanning import (
    TreePair,
    clique2_sum,
    connectivity_class,
    decompose_2vconn,
    double_attach,
    edge_split_attach,
    find_bispanning_subgraph,
    find_two_trees,
    induced_subgraph,
    is_atomic,
    reduce_deg3,
    verify_bispanning,
)
from bispan.catalog import named_graph
from bispan.core import MultiGraph, build_graph, is_spanning_tree
from bispan.errors import NotAtomic, NotBispanning, WrongDegree


def all_multigraphs(n, m):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for combo in itertools.combinations_with_replacement(pairs, m):
        yield build_graph(n, list(combo))


def test_find_two_trees_k4(k4):
    g, _ = k4
    tp = find_two_trees(g)
    assert tp is not None
    assert is_spanning_tree(g, tp.S) and is_spanning_tree(g, tp.T)
    assert tp.S | tp.T == g.edge_ids() and not (tp.S & tp.T)


def test_triangle_is_not_bispanning():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert find_two_trees(g) is None


def test_tree_pair_validation(k4):
    g, tp = k4
    with pytest.raises(NotBispanning):
        TreePair(g, tp.S | {next(iter(tp.T))}, tp.T)


def test_oracle_equivalence_small():
    # constructive search agrees with the partition counting oracle
    for n in (2, 3, 4):
        for g in all_multigraphs(n, 2 * n - 2):
            assert (find_two_trees(g) is not None) == verify_bispanning(g)


def test_atomic_and_connectivity(k4, w5):
    for g, _ in (k4, w5):
        assert is_atomic(g)
        assert connectivity_class(g) in {(2, 3), (3, 3)}
    g, _ = named_graph("B4_3")
    assert not is_atomic(g)


def test_atomic_graphs_are_simple():
    for name in ("K4", "W5", "W6", "B7_1"):
        g, _ = named_graph(name)
        if is_atomic(g):
            assert g.is_simple()


def test_find_bispanning_subgraph():
    g, _ = named_graph("B4_3")
    sub = find_bispanning_subgraph(g)
    assert sub is not None
    gsub, _ = induced_subgraph(g, sub)
    assert gsub.m == 2 * gsub.n - 2
    assert find_two_trees(gsub) is not None
    g, _ = named_graph("K4")
    assert find_bispanning_subgraph(g) is None


def test_double_attach_keeps_bispanning(w5):
    _, tp = w5
    tp2 = double_attach(tp, 0, 3)
    assert verify_bispanning(tp2.g)


def test_edge_split_attach_keeps_bispanning(w5):
    _, tp = w5
    e = min(tp.S)
    tp2 = edge_split_attach(tp, e, 2)
    assert verify_bispanning(tp2.g)


def test_reduce_deg3_structure(w5):
    g, _ = w5
    red = reduce_deg3(g, 4)
    assert red.pivot == 4
    assert len(red.graphs) == 3
    for h in red.graphs:
        assert h.n == g.n - 1 and h.m == g.m - 2
        assert find_two_trees(h) is not None
    # the three reductions share one fresh split edge id
    assert len(set(red.split_edges)) == 1


def test_reduce_deg3_rejects():
    g, _ = named_graph("B5_2")      # composite, vertex 0 has degree 3
    with pytest.raises(NotAtomic):
        reduce_deg3(g, 0)
    g, _ = named_graph("W5")
    with pytest.raises(WrongDegree):
        reduce_deg3(g, 0)           # hub has degree 4


def test_clique2_sum_and_decompose(k4):
    g1, _ = k4
    g2, _ = named_graph("K4")
    s = clique2_sum(g1, 3, g2, 3)
    assert s.n == g1.n + g2.n - 2
    assert s.m == g1.m + g2.m - 2
    assert find_two_trees(s) is not None
    parts = decompose_2vconn(s)
    assert parts is not None
    p1, d1, p2, d2 = parts
    assert {p1.n, p2.n} == {4}
