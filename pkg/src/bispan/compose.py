"""Composing exchange graphs from parts.

Three constructions, each verified against a directly built tau3 through an
explicit vertex bijection (never a generic isomorphism search):

* Cartesian product: tau3 of a composite graph with a proper bispanning
  subgraph G' is the product of tau3(G') and tau3(G/G').
* eta-join: tau3 of a 2-clique sum, built from the two parts' tau3 graphs
  by keeping internal arcs and chaining the two seam arcs into one.
* Degree-3 composition: tau3 of an atomic graph from the tau3 graphs of
  its three reductions at a degree-3 vertex, via the four-way arc
  classification (lifted / leaf / forwarded / extra).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import MultiGraph, contract, fundamental_cut, fundamental_cycle
from .bispanning import (
    Deg3Reduction,
    TreePair,
    find_two_trees,
    induced_subgraph,
    reduce_deg3,
)
from .errors import (
    CompositionMismatch,
    FormMismatch,
    IsoCheckFailed,
    NotBispanningSubgraph,
    SeamMismatch,
)
from .exchange import (
    ExchangeArc,
    ExchangeGraph,
    PairKey,
    build_tau,
    pair_key,
)


@dataclass(frozen=True)
class TauIsomorphism:
    """An explicit exchange-graph isomorphism: vertex and arc mappings plus
    a tag describing the direction of the map."""

    vertex_map: dict
    arc_map: dict
    direction: str

    def counts(self) -> dict:
        return {"vertices": len(self.vertex_map), "arcs": len(self.arc_map)}


def cartesian_product(a: ExchangeGraph, b: ExchangeGraph) -> ExchangeGraph:
    """Cartesian product of two exchange graphs of the same form.

    Vertices are (key_a, key_b) tuples; each arc of a factor is paired
    with every vertex of the other factor.
    """
    if a.form != b.form or a.form == "simple":
        raise FormMismatch("product needs two directed or two undirected inputs")
    vertices = [(va, vb) for va in a.vertices for vb in b.vertices]
    arcs = []
    for arc in a.arcs:
        for vb in b.vertices:
            arcs.append(
                ExchangeArc(arc.e, arc.f, (arc.source, vb), arc.kind,
                            (arc.target, vb))
            )
    for arc in b.arcs:
        for va in a.vertices:
            arcs.append(
                ExchangeArc(arc.e, arc.f, (va, arc.source), arc.kind,
                            (va, arc.target))
            )
    return ExchangeGraph(a.host, a.variant, a.form, vertices, arcs, [])


def _arc_key(arc: ExchangeArc):
    return (arc.source, arc.e, arc.f, arc.kind, arc.target)


def verify_composite_decomposition(g: MultiGraph, sub) -> TauIsomorphism:
    """Check tau3(g) is isomorphic to tau3(G') x tau3(g contracted at G')
    for the bispanning subgraph G' induced by the vertex set sub, via the
    explicit split of each tree pair into its inside and outside parts.
    """
    sub = frozenset(sub)
    if not 1 <= len(sub) < g.n:
        raise NotBispanningSubgraph("subgraph must be proper and non-empty")
    gsub, _ = induced_subgraph(g, sub)
    if gsub.m != 2 * gsub.n - 2 or find_two_trees(gsub) is None:
        raise NotBispanningSubgraph("induced subgraph is not bispanning")
    if gsub.m == 0:
        raise NotBispanningSubgraph("trivial subgraph")
    inner = gsub.edge_ids()
    gq, removed, _ = contract(g, sub)
    if removed != inner:
        raise NotBispanningSubgraph("subgraph has outside parallel edges")

    whole = build_tau(g, "tau3", "directed")
    t_sub = build_tau(gsub, "tau3", "directed")
    t_q = build_tau(gq, "tau3", "directed")
    prod = cartesian_product(t_sub, t_q)

    def phi(key: PairKey):
        s = set(key)
        return (pair_key(s & inner), pair_key(s - inner))

    vmap = {v: phi(v) for v in whole.vertices}
    if len(set(vmap.values())) != len(vmap) or set(vmap.values()) != set(
        prod.vertices
    ):
        raise IsoCheckFailed("vertex split is not a bijection onto the product")

    prod_arcs = {_arc_key(a) for a in prod.arcs}
    amap = {}
    for arc in whole.arcs:
        img = ExchangeArc(arc.e, arc.f, vmap[arc.source], arc.kind,
                          vmap[arc.target])
        if _arc_key(img) not in prod_arcs:
            raise IsoCheckFailed(f"arc {arc} has no product counterpart")
        amap[_arc_key(arc)] = _arc_key(img)
    if len(amap) != len(prod_arcs):
        raise IsoCheckFailed("product has arcs without counterpart")
    return TauIsomorphism(vmap, amap, "whole-to-product")


def eta_join(t1: ExchangeGraph, t2: ExchangeGraph, d1: int, d2: int) -> ExchangeGraph:
    """Join the directed tau3 graphs of the two parts of a 2-clique sum.

    Vertices are (key1, key2) pairs in which the seam edges d1 and d2 sit
    in opposite trees. Arcs: internal arcs of either part that do not touch
    its seam edge, and chained arcs fusing a swap (e, d1) of one part with
    a swap (d2, f) of the other (and symmetrically).
    """
    if t1.form != "directed" or t2.form != "directed":
        raise FormMismatch("eta_join needs directed inputs")
    if not t1.host.has_edge(d1) or not t2.host.has_edge(d2):
        raise SeamMismatch("seam edges must belong to the two hosts")

    def opposite(k1, k2):
        return (d1 in k1) != (d2 in k2)

    vertices = [
        (k1, k2) for k1 in t1.vertices for k2 in t2.vertices if opposite(k1, k2)
    ]
    vset = set(vertices)
    arcs = []
    for arc in t1.arcs:
        if d1 in (arc.e, arc.f):
            continue
        for k2 in t2.vertices:
            if (arc.source, k2) in vset:
                arcs.append(
                    ExchangeArc(arc.e, arc.f, (arc.source, k2), arc.kind,
                                (arc.target, k2))
                )
    for arc in t2.arcs:
        if d2 in (arc.e, arc.f):
            continue
        for k1 in t1.vertices:
            if (k1, arc.source) in vset:
                arcs.append(
                    ExchangeArc(arc.e, arc.f, (k1, arc.source), arc.kind,
                                (k1, arc.target))
                )
    seam1_in = [a for a in t1.arcs if a.f == d1]
    seam1_out = [a for a in t1.arcs if a.e == d1]
    seam2_in = [a for a in t2.arcs if a.f == d2]
    seam2_out = [a for a in t2.arcs if a.e == d2]
    for a1 in seam1_in:                      # swap (e, d1) with (d2, f)
        for a2 in seam2_out:
            if (a1.source, a2.source) in vset:
                arcs.append(
                    ExchangeArc(a1.e, a2.f, (a1.source, a2.source), a1.kind,
                                (a1.target, a2.target))
                )
    for a2 in seam2_in:                      # swap (e, d2) with (d1, f)
        for a1 in seam1_out:
            if (a1.source, a2.source) in vset:
                arcs.append(
                    ExchangeArc(a2.e, a1.f, (a1.source, a2.source), a2.kind,
                                (a1.target, a2.target))
                )
    return ExchangeGraph(None, "tau3", "directed", vertices, arcs, [])


def psi_flatten(k1: PairKey, k2: PairKey, d1: int, d2: int, offset: int = 0) -> PairKey:
    """Flatten an eta-join product vertex to a tree-pair key of the summed
    graph: union of the two S sides minus the seam edges. offset shifts the
    second part's edge ids (clique2_sum renumbers them)."""
    s = (set(k1) | {e + offset for e in k2}) - {d1, d2 + offset}
    return pair_key(s)


def verify_eta_2sum(g1: MultiGraph, d1: int, g2: MultiGraph, d2: int,
                    g: MultiGraph) -> TauIsomorphism:
    """Check eta_join reproduces the directly built tau3 of the 2-clique
    sum g of g1 and g2 (with g2's edge ids shifted as clique2_sum does)."""
    t1 = build_tau(g1, "tau3", "directed")
    t2 = build_tau(g2, "tau3", "directed")
    joined = eta_join(t1, t2, d1, d2)
    off = max(g1.edge_ids()) + 1
    whole = build_tau(g, "tau3", "directed")

    vmap = {}
    for k1, k2 in joined.vertices:
        vmap[(k1, k2)] = pair_key(
            (set(k1) | {e + off for e in k2}) - {d1, d2 + off}
        )
    if len(set(vmap.values())) != len(vmap) or set(vmap.values()) != set(
        whole.vertices
    ):
        raise IsoCheckFailed("eta-join vertex set does not match the 2-sum")

    inv = {flat: prod for prod, flat in vmap.items()}
    joined_arcs = {_arc_key(a) for a in joined.arcs}
    amap = {}
    for arc in whole.arcs:
        # part-local ids: part 1 keeps its ids, part 2 was shifted by off
        if arc.e < off and arc.f < off:
            e, f = arc.e, arc.f
        elif arc.e >= off and arc.f >= off:
            e, f = arc.e - off, arc.f - off
        elif arc.e < off:                    # chained, swap (e, d1)+(d2, f)
            e, f = arc.e, arc.f - off
        else:                                # chained, swap (e, d2)+(d1, f)
            e, f = arc.e - off, arc.f
        img = ExchangeArc(e, f, inv[arc.source], arc.kind, inv[arc.target])
        if _arc_key(img) not in joined_arcs:
            raise IsoCheckFailed(f"direct arc {arc} missing from the eta-join")
        amap[_arc_key(arc)] = _arc_key(img)
    if len(amap) != len(joined_arcs):
        raise IsoCheckFailed("eta-join has arcs the direct tau3 misses")
    return TauIsomorphism(vmap, amap, "whole-to-join")


def _rho(key: PairKey, bar: int, kept: tuple[int, int], deleted: int) -> PairKey:
    """Map a reduction-graph tree pair to the original graph: the split
    edge expands to the two kept incident edges, the deleted attachment
    edge joins the other tree."""
    s = set(key)
    if bar in s:
        return pair_key(s - {bar} | set(kept))
    return pair_key(s | {deleted})


def _deg3_arcs(g: MultiGraph, red: Deg3Reduction, taus) -> tuple[list, dict]:
    """Shared engine for the degree-3 composition: returns the composed
    vertex list and a mapping arc-key -> class label."""
    all_ids = g.edge_ids()
    vertices: list[PairKey] = []
    labeled: dict = {}

    def add(arc: ExchangeArc, label: str) -> None:
        k = _arc_key(arc)
        if k in labeled:
            raise CompositionMismatch(f"arc produced twice: {arc}")
        labeled[k] = label

    for idx in range(3):
        g_ab = red.graphs[idx]
        bar = red.split_edges[idx]
        kept, deleted = red.replaced[idx]
        t_ab = taus[idx]
        rho = {key: _rho(key, bar, kept, deleted) for key in t_ab.vertices}
        vertices.extend(rho[key] for key in t_ab.vertices)

        # per source pair: the set of start edges whose lifted exchange
        # breaks, from the cut of the split edge intersected with the two
        # cycles its halves close in the expanded tree
        broken: dict[PairKey, frozenset[int]] = {}
        for key in t_ab.vertices:
            sp = frozenset(key)
            tp = g_ab.edge_ids() - sp
            if bar in sp:
                cut = fundamental_cut(g_ab, sp, bar)
                base = frozenset(tp | {deleted})
            else:
                cut = fundamental_cut(g_ab, tp, bar)
                base = frozenset(sp | {deleted})
            c_a = fundamental_cycle(g, base, kept[0])
            c_b = fundamental_cycle(g, base, kept[1])
            broken[key] = cut & c_a & c_b

        for arc in t_ab.arcs:
            if bar not in (arc.e, arc.f):
                if arc.e in broken[arc.source]:
                    continue                       # broken, not lifted
                add(ExchangeArc(arc.e, arc.f, rho[arc.source], arc.kind,
                                rho[arc.target]), "lifted")
            elif arc.f == bar:
                # forwarded: (p, split) becomes (p, e2) with e2 the kept
                # incident edge entering the cut of p in the full graph
                p = arc.e
                src = rho[arc.source]
                s_src = set(src)
                tree_p = frozenset(s_src if p in s_src else all_ids - s_src)
                cut = fundamental_cut(g, tree_p, p)
                hits = [e for e in kept if e in cut]
                if len(hits) != 1:
                    raise CompositionMismatch(
                        f"forwarding of {p} found {len(hits)} targets"
                    )
                e2 = hits[0]
                tgt = pair_key(s_src ^ {p, e2})
                kind = "S" if p in s_src else "T"
                add(ExchangeArc(p, e2, src, kind, tgt), "forwarded")
                kind_rev = "S" if e2 in set(tgt) else "T"
                add(ExchangeArc(e2, p, tgt, kind_rev, src), "forwarded")

    # leaf and extra arcs at the pivot, per composed tree pair
    for key in vertices:
        s = set(key)
        t = all_ids - s
        in_s = [e for e in red.incident if e in s]
        if len(in_s) == 1:
            (ec,) = in_s
            doubles = [e for e in red.incident if e != ec]
            x_tree, y_tree = frozenset(s), frozenset(t)
        else:
            (ec,) = [e for e in red.incident if e in t]
            doubles = [e for e in red.incident if e != ec]
            x_tree, y_tree = frozenset(t), frozenset(s)
        cyc = fundamental_cycle(g, y_tree, ec)
        hits = [e for e in doubles if e in cyc]
        if len(hits) != 1:
            raise CompositionMismatch("attachment cycle misses the pivot pair")
        ea = hits[0]
        tgt = pair_key(s ^ {ec, ea})
        add(ExchangeArc(ec, ea, key, "S" if ec in s else "T", tgt), "leaf")
        cand = fundamental_cut(g, y_tree, ea) & fundamental_cycle(g, x_tree, ea)
        if cand == frozenset({ea, ec}):
            add(ExchangeArc(ea, ec, key, "S" if ea in s else "T", tgt), "extra")
    return vertices, labeled


def compose_deg3(g: MultiGraph, v: int, t_xy: ExchangeGraph,
                 t_xz: ExchangeGraph, t_yz: ExchangeGraph) -> ExchangeGraph:
    """Build directed tau3 of an atomic graph from the tau3 graphs of its
    three reductions at the degree-3 vertex v. Vertices come from the
    disjoint expansion of the reduction pairs; arcs from the four-way
    classification (lifted unless broken, leaf, forwarded, extra)."""
    red = reduce_deg3(g, v)
    vertices, labeled = _deg3_arcs(g, red, (t_xy, t_xz, t_yz))
    arcs = [ExchangeArc(e, f, src, kind, tgt)
            for (src, e, f, kind, tgt) in labeled]
    return ExchangeGraph(g, "tau3", "directed", vertices, arcs, [])


def deg3_classify(g: MultiGraph, v: int) -> dict:
    """Classify every tau3 arc of g relative to the reduction at v and
    count the reduction arcs broken by the expansion. Returns a report
    with per-class counts and the arc -> label mapping."""
    red = reduce_deg3(g, v)
    taus = tuple(build_tau(h, "tau3", "directed") for h in red.graphs)
    vertices, labeled = _deg3_arcs(g, red, taus)
    liftable = sum(
        sum(1 for a in taus[i].arcs if red.split_edges[i] not in (a.e, a.f))
        for i in range(3)
    )
    counts = {"lifted": 0, "leaf": 0, "forwarded": 0, "extra": 0}
    for label in labeled.values():
        counts[label] += 1
    counts["broken"] = liftable - counts["lifted"]
    return {
        "pivot": v,
        "vertices": len(vertices),
        "counts": counts,
        "labels": labeled,
    }


def verify_deg3_composition(g: MultiGraph, v: int) -> dict:
    """Compose tau3 at the degree-3 vertex v and require arc-set equality
    with the directly built tau3. Returns a verification report."""
    red = reduce_deg3(g, v)
    taus = tuple(build_tau(h, "tau3", "directed") for h in red.graphs)
    composed = compose_deg3(g, v, *taus)
    direct = build_tau(g, "tau3", "directed")
    if sorted(composed.vertices) != sorted(direct.vertices):
        raise CompositionMismatch("composed vertex set differs from direct tau3")
    ca = {_arc_key(a) for a in composed.arcs}
    da = {_arc_key(a) for a in direct.arcs}
    if ca != da:
        missing, bogus = da - ca, ca - da
        raise CompositionMismatch(
            f"arc sets differ: {len(missing)} missing, {len(bogus)} extra"
        )
    report = deg3_classify(g, v)
    return {
        "theorem": "deg3-composition",
        "pivot": v,
        "status": "ok",
        "vertices": len(direct.vertices),
        "arcs": len(direct.arcs),
        "counts": report["counts"],
    }
