"""Composition constructions against directly built exchange graphs."""

import pytest

from bispan.bispanning import clique2_sum, find_bispanning_subgraph
from bispan.catalog import named_graph
from bispan.compose import (
    cartesian_product,
    compose_deg3,
    deg3_classify,
    eta_join,
    verify_composite_decomposition,
    verify_deg3_composition,
    verify_eta_2sum,
)
from bispan.core import MultiGraph
from bispan.bispanning import reduce_deg3
from bispan.errors import (
    CompositionMismatch,
    FormMismatch,
    NotBispanningSubgraph,
)
from bispan.exchange import build_tau


def k4_pair():
    g1 = MultiGraph(4, [(0, 0, 1), (1, 0, 3), (2, 0, 2), (3, 1, 3),
                        (4, 1, 2), (5, 2, 3)])
    g2 = MultiGraph(4, [(0, 0, 1), (1, 0, 3), (2, 0, 2), (3, 1, 3),
                        (4, 1, 2), (5, 2, 3)])
    return g1, g2


def test_cartesian_product_sizes(k4):
    g, _ = k4
    t = build_tau(g, "tau3", "directed")
    b2, _ = named_graph("B2")
    t2 = build_tau(b2, "tau3", "directed")
    prod = cartesian_product(t, t2)
    assert len(prod.vertices) == 12 * 2
    assert len(prod.arcs) == len(t.arcs) * 2 + len(t2.arcs) * 12


def test_cartesian_product_form_mismatch(k4):
    g, _ = k4
    with pytest.raises(FormMismatch):
        cartesian_product(build_tau(g, "tau3", "directed"),
                          build_tau(g, "tau3", "undirected"))


def test_composite_decomposition_doubled_edge():
    g, _ = named_graph("B4_3")
    sub = find_bispanning_subgraph(g)
    iso = verify_composite_decomposition(g, sub)
    assert len(iso.vertex_map) == build_tau(g, "tau3", "directed").num_vertices


def test_composite_decomposition_rejects_atomic(k4):
    g, _ = k4
    with pytest.raises(NotBispanningSubgraph):
        verify_composite_decomposition(g, {0, 1})


def test_eta_join_reproduces_summed_tau3():
    g1, g2 = k4_pair()
    g = clique2_sum(g1, 3, g2, 3)
    iso = verify_eta_2sum(g1, 3, g2, 3, g)
    assert len(iso.vertex_map) == 72
    assert len(iso.arc_map) == 448           # 224 undirected transitions


def test_eta_join_vertex_filter():
    g1, g2 = k4_pair()
    t1 = build_tau(g1, "tau3", "directed")
    t2 = build_tau(g2, "tau3", "directed")
    joined = eta_join(t1, t2, 3, 3)
    # seam edges must sit in opposite trees: half of 12x12 survives
    assert len(joined.vertices) == 72


def test_compose_deg3_k4(k4):
    g, _ = k4
    red = reduce_deg3(g, 0)
    taus = tuple(build_tau(h, "tau3", "directed") for h in red.graphs)
    t = compose_deg3(g, 0, *taus)
    assert len(t.vertices) == 12
    direct = build_tau(g, "tau3", "directed")
    assert len(t.arcs) == len(direct.arcs)


def test_compose_deg3_w5_vertex_additivity(w5):
    g, _ = w5
    red = reduce_deg3(g, 4)
    taus = tuple(build_tau(h, "tau3", "directed") for h in red.graphs)
    sizes = sorted(len(t.vertices) for t in taus)
    assert sizes == [8, 8, 12]
    t = compose_deg3(g, 4, *taus)
    assert len(t.vertices) == 28


@pytest.mark.parametrize("name", ["K4", "W5", "W6", "B6_3", "B6_12"])
def test_verify_deg3_everywhere(name):
    g, _ = named_graph(name)
    pivots = [v for v in range(g.n) if g.degree(v) == 3]
    assert pivots
    reports = [verify_deg3_composition(g, v) for v in pivots]
    # composed graphs at different pivots agree with the one direct tau3,
    # hence with each other
    assert len({r["arcs"] for r in reports}) == 1


def test_deg3_classify_counts(w5):
    g, _ = w5
    rep = deg3_classify(g, 4)
    c = rep["counts"]
    assert c["lifted"] == 76 and c["broken"] == 20
    assert c["leaf"] == 28 and c["forwarded"] == 48 and c["extra"] == 8
    assert sum(v for k, v in c.items() if k != "broken") == 160


def test_classification_is_exhaustive(w5):
    g, _ = w5
    rep = deg3_classify(g, 4)
    direct = build_tau(g, "tau3", "directed")
    assert len(rep["labels"]) == len(direct.arcs)
