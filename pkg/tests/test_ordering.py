"""Cyclic base orderings, the unique exchange variant, and 2-sum joins."""

import pytest

from bispan.bispanning import TreePair, clique2_sum, find_two_trees
from bispan.catalog import named_graph
from bispan.core import MultiGraph
from bispan.enumeration import enumerate_bispanning
from bispan.errors import InvalidInput, SeamMismatch
from bispan.exchange import enumerate_tree_pairs
from bispan.ordering import (
    SwapSequence,
    build_cbo,
    find_uecbo,
    join_uecbo_2sum,
    reverse_uecbo,
    verify_cbo,
    verify_uecbo,
)


def w5_start():
    g, tp = named_graph("W5")
    assert sorted(tp.S) == [1, 4, 6, 7]
    return g, tp


def test_known_uecbo_verifies():
    g, tp = w5_start()
    seq = SwapSequence(g, tp, ((0, 7), (1, 3), (2, 4), (6, 5)))
    assert verify_uecbo(seq)


def test_known_uecbo_reversal():
    g, tp = w5_start()
    seq = SwapSequence(g, tp, ((0, 7), (1, 3), (2, 4), (6, 5)))
    rev = reverse_uecbo(seq)
    assert rev.swaps == ((5, 6), (4, 2), (3, 1), (7, 0))
    assert verify_uecbo(rev)


def test_bad_sequence_rejected():
    g, tp = w5_start()
    seq = SwapSequence(g, tp, ((0, 7), (1, 3), (2, 4), (5, 6)))
    assert not verify_uecbo(seq)
    with pytest.raises(InvalidInput):
        reverse_uecbo(seq)


def test_find_uecbo_w5_all_pairs():
    g, _ = named_graph("W5")
    for key in enumerate_tree_pairs(g):
        tp = TreePair(g, frozenset(key), g.edge_ids() - frozenset(key))
        seq = find_uecbo(tp)
        assert seq is not None and verify_uecbo(seq)


def test_known_cbo_windows():
    g, tp = w5_start()
    # two hand-checked orderings for this pair
    for swaps in [((7, 0), (1, 3), (4, 2), (6, 5)), ((6, 5), (4, 2), (1, 3), (7, 0))]:
        seq = SwapSequence(g, tp, swaps)
        assert verify_cbo(seq)


def test_build_cbo_small_graphs():
    for n in (2, 3, 4, 5):
        for g in enumerate_bispanning(n, "general"):
            tp = find_two_trees(g)
            seq = build_cbo(tp)
            assert verify_cbo(seq)


def test_cbo_is_not_always_unique_exchange():
    # a CBO passes the window test without every swap being forced
    g, _ = named_graph("W5")
    tp = TreePair(g, frozenset({0, 1, 3, 5}), frozenset({2, 4, 6, 7}))
    seq = build_cbo(tp)
    assert verify_cbo(seq)


def two_k4_parts():
    g1 = MultiGraph(4, [(0, 0, 1), (1, 0, 3), (2, 0, 2), (3, 1, 3),
                        (4, 1, 2), (5, 2, 3)])
    g2 = MultiGraph(4, [(0, 0, 1), (1, 0, 3), (2, 0, 2), (3, 1, 3),
                        (4, 1, 2), (5, 2, 3)])
    return g1, g2


def test_join_uecbo_2sum_worked_example():
    g1, g2 = two_k4_parts()
    tp1 = TreePair(g1, frozenset({0, 2, 3}), frozenset({1, 4, 5}))
    a = SwapSequence(g1, tp1, ((2, 5), (1, 3), (0, 4)))
    assert verify_uecbo(a)
    # part two with its own vertex numbering, ids shifted by 6
    g2s = MultiGraph(4, [(6, 0, 1), (7, 0, 2), (8, 0, 3), (9, 1, 2),
                         (10, 3, 1), (11, 3, 2)])
    tp2 = TreePair(g2s, frozenset({7, 10, 11}), frozenset({6, 8, 9}))
    b = SwapSequence(g2s, tp2, ((7, 6), (8, 10), (11, 9)))
    assert verify_uecbo(b)
    # the summed host: both seams (ids 3 and 8) removed
    g = MultiGraph(6, [(0, 0, 1), (1, 0, 3), (2, 0, 2), (4, 1, 2),
                       (5, 2, 3), (6, 1, 4), (7, 1, 5), (9, 4, 5),
                       (10, 3, 4), (11, 3, 5)])
    joined = join_uecbo_2sum(g, a, b, 3, 8)
    assert joined.swaps == ((2, 5), (7, 6), (1, 10), (0, 4), (11, 9))
    assert verify_uecbo(joined)


def test_join_uecbo_seam_must_appear_once():
    g1, g2 = two_k4_parts()
    tp1 = TreePair(g1, frozenset({0, 2, 3}), frozenset({1, 4, 5}))
    a = SwapSequence(g1, tp1, ((2, 5), (1, 3), (0, 4)))
    with pytest.raises(SeamMismatch):
        join_uecbo_2sum(clique2_sum(g1, 3, g1, 3), a, a, 99, 98)
