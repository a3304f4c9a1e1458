"""Graph container, cycle/cut machinery, canonicalisation, serialization."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from bispan.core import (
    MultiGraph,
    build_graph,
    canonical_code,
    check_duality,
    connectivity,
    contract,
    delete_edges,
    format_edge_list,
    fundamental_cut,
    fundamental_cycle,
    is_connected,
    is_spanning_tree,
    parse_edge_list,
)
from bispan.errors import LoopEdge, VertexOutOfRange


def tri():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


def test_basic_accessors():
    g = tri()
    assert g.n == 3 and g.m == 3
    assert g.endpoints(1) == (1, 2)
    assert g.degree(0) == 2
    assert g.other_end(2, 0) == 2
    assert g.is_simple()


def test_loops_rejected():
    with pytest.raises(LoopEdge):
        MultiGraph(2, [(0, 1, 1)])
    with pytest.raises(VertexOutOfRange):
        MultiGraph(2, [(0, 0, 5)])


def test_parallel_edges_allowed():
    g = build_graph(2, [(0, 1), (0, 1)])
    assert g.m == 2 and not g.is_simple()


def test_spanning_tree_checks():
    g = tri()
    assert is_spanning_tree(g, frozenset({0, 1}))
    assert not is_spanning_tree(g, frozenset({0, 1, 2}))
    assert not is_spanning_tree(g, frozenset({0}))


def test_fundamental_cycle_and_cut():
    g = tri()
    t = frozenset({0, 1})
    assert fundamental_cycle(g, t, 2) == frozenset({0, 1, 2})
    assert fundamental_cut(g, t, 0) == frozenset({0, 2})


def test_cycle_cut_duality_random():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(3, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        g = build_graph(n, pairs[: 2 * n - 2])
        if not is_connected(g):
            continue
        # greedy spanning tree
        t, seen = set(), None
        from bispan.core import UnionFind

        uf = UnionFind(n)
        for e, u, v in g.edges:
            if uf.union(u, v):
                t.add(e)
        if len(t) == n - 1:
            assert check_duality(g, frozenset(t))


def test_delete_and_contract():
    g = tri()
    g2 = delete_edges(g, [2])
    assert g2.m == 2
    gq, removed, vmap = contract(g, {0, 1})
    assert removed == frozenset({0})
    assert gq.n == 2 and gq.m == 2        # the two former triangle sides


def test_connectivity_k4(k4):
    g, _ = k4
    assert connectivity(g) == (3, 3)


def test_canonical_code_iso_invariance():
    g1 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    perm = [2, 0, 3, 1]
    g2 = build_graph(4, [(perm[u], perm[v]) for _, u, v in g1.edges])
    assert canonical_code(g1) == canonical_code(g2)


def test_canonical_code_separates():
    path = build_graph(3, [(0, 1), (1, 2)])
    star = build_graph(3, [(0, 1), (0, 2)])
    cyc = tri()
    assert canonical_code(path) == canonical_code(star)
    assert canonical_code(path) != canonical_code(cyc)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.data())
def test_canonical_code_random_relabeling(n, data):
    pairs = data.draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda p: p[0] != p[1]
            ),
            min_size=1,
            max_size=2 * n,
        )
    )
    g = build_graph(n, pairs)
    perm = data.draw(st.permutations(range(n)))
    h = build_graph(n, [(perm[u], perm[v]) for u, v in pairs])
    assert canonical_code(g) == canonical_code(h)


def test_edge_list_roundtrip():
    text = "3 4\n0 1 b\n0 1 r\n1 2 b\n1 2 r\n"
    g, colors = parse_edge_list(text)
    assert g.n == 3 and g.m == 4
    assert colors[0] == "blue" and colors[1] == "red"
    assert format_edge_list(g, colors) == text


def test_edge_list_errors():
    with pytest.raises(ValueError):
        parse_edge_list("")
    with pytest.raises(ValueError):
        parse_edge_list("2 2\n0 1 b\n")
    with pytest.raises(ValueError):
        parse_edge_list("2 1\n0 1 x\n")
