"""Named graph catalog integrity."""

import pytest

from bispan.bispanning import find_two_trees, verify_bispanning
from bispan.catalog import (
    CATALOG_NU,
    catalog_names,
    named_graph,
    nu_reference_pair,
)
from bispan.errors import UnknownName


@pytest.mark.parametrize("name", catalog_names())
def test_every_entry_is_bispanning(name):
    g, tp = named_graph(name)
    assert g.m == 2 * g.n - 2
    if g.n <= 10:
        assert verify_bispanning(g)
    else:
        assert find_two_trees(g) is not None
    # and the stored pair is itself a valid witness (checked on build)
    assert tp.S | tp.T == g.edge_ids()


def test_lookup_normalisation():
    for alias in ("K4", "k4", "B4_1", "b4,1", "B6-11", "W6"):
        g, _ = named_graph(alias)
        assert g.n in (4, 6)
    with pytest.raises(UnknownName):
        named_graph("nope")


def test_triangle_free_entry():
    g, _ = named_graph("B7_1")
    assert g.n == 7 and g.m == 12
    adj = [set() for _ in range(g.n)]
    for _, u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    assert not any(adj[u] & adj[v] for _, u, v in g.edges)


def test_square_free_entry():
    g, _ = named_graph("B18_1")
    assert g.n == 18 and g.m == 34
    adj = [set() for _ in range(g.n)]
    for _, u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    # no 4-cycle: non-adjacent vertex pairs share at most one neighbour
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v not in adj[u]:
                assert len(adj[u] & adj[v]) <= 1


def test_nu_reference_pairs_are_tree_pairs():
    for name in CATALOG_NU:
        g, _ = named_graph(name)
        s = frozenset(nu_reference_pair(name))
        assert s <= g.edge_ids() and len(s) == g.m // 2
