"""Bispanning graph recognition and structure.

A bispanning graph is one whose edge set splits into two disjoint spanning
trees S and T (blue and red). This module finds such a pair with an
augmenting-swap algorithm, verifies the property independently through the
partition counting bound, classifies graphs as atomic or composite, and
implements the structural operations (double-attach, edge-split-attach,
2-clique sum, degree-3 reduction, contract-delete).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .core import (
    MultiGraph,
    UnionFind,
    build_graph,
    connectivity,
    contract,
    is_spanning_tree,
)
from .errors import (
    InternalInvariant,
    NoSuchEdge,
    NotApplicable,
    NotAtomic,
    NotBispanning,
    SameEdge,
    TooLarge,
    WrongDegree,
)

BLUE = "blue"
RED = "red"
BLACK = "black"

# sentinel for the BFS root in predecessor maps
ROOT = -1


@dataclass(frozen=True)
class TreePair:
    """A partition of a bispanning graph's edges into two spanning trees."""

    g: MultiGraph
    S: frozenset[int]
    T: frozenset[int]

    def __post_init__(self):
        all_ids = self.g.edge_ids()
        if self.S & self.T or (self.S | self.T) != all_ids:
            raise NotBispanning("S and T must partition the edge set")
        if not is_spanning_tree(self.g, self.S) or not is_spanning_tree(self.g, self.T):
            raise NotBispanning("S and T must both be spanning trees")

    def tree_of(self, e: int) -> str:
        return BLUE if e in self.S else RED

    def swapped(self) -> "TreePair":
        return TreePair(self.g, self.T, self.S)

    def coloring(self) -> dict[int, str]:
        c = {e: BLUE for e in self.S}
        c.update({e: RED for e in self.T})
        return c


def pair_from_coloring(g: MultiGraph, coloring: dict[int, str]) -> TreePair:
    S = frozenset(e for e, c in coloring.items() if c == BLUE)
    T = frozenset(e for e, c in coloring.items() if c == RED)
    return TreePair(g, S, T)


# ---------------------------------------------------------------------------
# finding two disjoint spanning trees


def colored_bfs(g: MultiGraph, root: int, coloring: dict[int, str],
                c: str) -> dict[int, int]:
    """Breadth-first tree of color-c edges rooted at root.

    Returns vertex -> predecessor edge id; the root maps to the ROOT
    sentinel; unreached vertices are absent.
    """
    pred = {root: ROOT}
    queue = deque([root])
    adj = g.adj()
    while queue:
        v = queue.popleft()
        for e, w in adj[v]:
            if w not in pred and coloring.get(e) == c:
                pred[w] = e
                queue.append(w)
    return pred


def augment_tree(g: MultiGraph, coloring: dict[int, str], e0: int,
                 uf_blue: UnionFind, uf_red: UnionFind) -> bool:
    """Search for an augmenting color-swap sequence that makes room for e0.

    Explores the swap space breadth-first over edges: an edge taken from the
    queue is tried in the opposite forest; on success the label chain back to
    e0 is recolored. Mutates `coloring` in place. Returns False when no
    sequence exists (the graph is not bispanning).
    """
    v0, _w0 = g.endpoints(e0)
    pred = {
        BLUE: colored_bfs(g, v0, coloring, BLUE),
        RED: colored_bfs(g, v0, coloring, RED),
    }
    label: dict[int, int] = {}
    queue = deque([e0])
    while queue:
        e = queue.popleft()
        v, w = g.endpoints(e)
        c = RED if coloring.get(e) == BLUE else BLUE
        uf = uf_blue if c == BLUE else uf_red
        if uf.find(v) != uf.find(w):
            uf.union(v, w)
            # a valid swap sequence ends here; replay it along the labels
            while e != e0:
                c, coloring[e] = coloring[e], c
                e = label[e]
            coloring[e0] = c
            return True
        # e closes a cycle in forest c; walk that cycle back toward v0
        pc = pred[c]
        if v != v0 and pc.get(v, ROOT) != ROOT and pc[v] not in label:
            x = v
        elif w != v0 and pc.get(w, ROOT) != ROOT and pc[w] not in label:
            x = w
        else:
            # the whole cycle is already in the label tree: nothing new to
            # explore from this edge (happens e.g. with triple parallel
            # edges in non-bispanning inputs)
            continue
        stack = []
        while x != v0 and pc[x] not in label:
            e2 = pc[x]
            stack.append(e2)
            x = g.other_end(e2, x)
        while stack:
            e2 = stack.pop()
            label[e2] = e
            queue.append(e2)
    return False


def find_two_trees(g: MultiGraph,
                   precolor: Optional[dict[int, str]] = None) -> Optional[TreePair]:
    """Find a disjoint spanning tree pair, or None if g is not bispanning.

    An optional precoloring is honored where consistent; pre-colored edges
    that would close a one-color cycle are silently reset and recolored by
    the main loop.
    """
    if g.m != 2 * g.n - 2:
        return None
    if g.n == 1:
        return TreePair(g, frozenset(), frozenset())
    coloring = dict(precolor) if precolor else {}
    uf = {BLUE: UnionFind(g.n), RED: UnionFind(g.n)}
    for e, v1, v2 in g.edges:
        c = coloring.get(e, BLACK)
        if c in (BLUE, RED) and uf[c].find(v1) != uf[c].find(v2):
            uf[c].union(v1, v2)
        else:
            coloring[e] = BLACK
    for e, v1, v2 in g.edges:
        if coloring.get(e) in (BLUE, RED):
            continue
        if uf[BLUE].find(v1) != uf[BLUE].find(v2):
            coloring[e] = BLUE
            uf[BLUE].union(v1, v2)
        elif uf[RED].find(v1) != uf[RED].find(v2):
            coloring[e] = RED
            uf[RED].union(v1, v2)
        elif not augment_tree(g, coloring, e, uf[BLUE], uf[RED]):
            return None
    return pair_from_coloring(g, coloring)


# ---------------------------------------------------------------------------
# independent verification and atomicity


def _partitions(n: int):
    """All set partitions of range(n) as vertex -> block index lists."""
    labels = [0] * n

    def rec(i: int, maxlbl: int):
        if i == n:
            yield labels
            return
        for b in range(maxlbl + 2):
            labels[i] = b
            yield from rec(i + 1, max(maxlbl, b))

    yield from rec(0, -1) if n else iter(())


def verify_bispanning(g: MultiGraph) -> bool:
    """Partition-counting test: |E| = 2n-2 and every partition P of the
    vertices has at least 2(|P|-1) cross edges. Brute force over all
    partitions; independent oracle for find_two_trees."""
    if g.n > 10:
        raise TooLarge("verify_bispanning brute-forces partitions; n <= 10")
    if g.m != 2 * g.n - 2:
        return False
    if g.n == 1:
        return True
    pairs = [(u, v) for _, u, v in g.edges]
    for labels in _partitions(g.n):
        blocks = len(set(labels))
        if blocks in (1,):
            continue
        cross = sum(1 for u, v in pairs if labels[u] != labels[v])
        if cross < 2 * (blocks - 1):
            return False
    return True


def is_strictly_edge_rich(g: MultiGraph) -> bool:
    """Strict partition bound: every non-trivial partition has strictly more
    than 2(|P|-1) cross edges. Slow (Bell-number) oracle for is_atomic."""
    if g.n > 10:
        raise TooLarge("n <= 10")
    pairs = [(u, v) for _, u, v in g.edges]
    for labels in _partitions(g.n):
        blocks = len(set(labels))
        if blocks == 1 or blocks == g.n:
            continue
        cross = sum(1 for u, v in pairs if labels[u] != labels[v])
        if cross <= 2 * (blocks - 1):
            return False
    return True


def induced_subgraph(g: MultiGraph, vs) -> tuple[MultiGraph, dict[int, int]]:
    """Subgraph induced by vertex set vs, vertices renumbered in sorted
    order; edge ids survive. Returns (graph, old vertex -> new vertex)."""
    vs = sorted(set(vs))
    vmap = {v: i for i, v in enumerate(vs)}
    inside = set(vs)
    edges = [(e, vmap[u], vmap[v]) for e, u, v in g.edges
             if u in inside and v in inside]
    return MultiGraph(len(vs), edges), vmap


def find_bispanning_subgraph(g: MultiGraph) -> Optional[frozenset[int]]:
    """A vertex set V' with 1 < |V'| < n inducing a bispanning subgraph, or
    None iff g is atomic. Subsets are scanned in increasing size with the
    2|V'|-2 edge-count filter applied first."""
    import itertools

    if find_two_trees(g) is None:
        raise NotBispanning("input must be bispanning")
    incident = g.adj()
    for k in range(2, g.n):
        for vs in itertools.combinations(range(g.n), k):
            inside = set(vs)
            cnt = sum(1 for v in vs for e, w in incident[v] if w in inside)
            if cnt != 2 * (2 * k - 2):  # each inside edge counted twice
                continue
            sub, _ = induced_subgraph(g, vs)
            if find_two_trees(sub) is not None:
                return frozenset(vs)
    return None


def is_atomic(g: MultiGraph) -> bool:
    """True iff g has no non-trivial bispanning subgraph."""
    if g.n > 10:
        raise TooLarge("is_atomic supports n <= 10")
    return find_bispanning_subgraph(g) is None


def connectivity_class(g: MultiGraph) -> tuple[int, int]:
    """(vertex, edge) connectivity of a bispanning graph; always one of
    (1,2), (1,3), (2,2), (2,3), (3,3)."""
    if find_two_trees(g) is None:
        raise NotBispanning("input must be bispanning")
    return connectivity(g)


# ---------------------------------------------------------------------------
# structural operations


def _next_id(g: MultiGraph) -> int:
    return max(g.edge_ids(), default=-1) + 1


def double_attach(tp: TreePair, x: int, y: int) -> TreePair:
    """Attach a new vertex v by one S edge to x and one T edge to y."""
    g = tp.g
    v = g.n
    ex, ey = _next_id(g), _next_id(g) + 1
    g2 = MultiGraph(g.n + 1, list(g.edges) + [(ex, x, v), (ey, y, v)])
    return TreePair(g2, tp.S | {ex}, tp.T | {ey})


def edge_split_attach(tp: TreePair, splice: int, z: int) -> TreePair:
    """Split the edge `splice` = {x,y} through a new vertex v (both halves
    inherit splice's tree) and attach v to z in the other tree."""
    g = tp.g
    if not g.has_edge(splice):
        raise NoSuchEdge(f"no edge {splice}")
    x, y = g.endpoints(splice)
    v = g.n
    base = _next_id(g)
    ex, ey, ez = base, base + 1, base + 2
    edges = [t for t in g.edges if t[0] != splice]
    edges += [(ex, x, v), (ey, y, v), (ez, z, v)]
    g2 = MultiGraph(g.n + 1, edges)
    if splice in tp.S:
        return TreePair(g2, (tp.S - {splice}) | {ex, ey}, tp.T | {ez})
    return TreePair(g2, tp.S | {ez}, (tp.T - {splice}) | {ex, ey})


@dataclass(frozen=True)
class Deg3Reduction:
    """The three reductions of an atomic bispanning graph at a degree-3
    vertex v with incident edges e_x, e_y, e_z to neighbors x, y, z.

    Each reduced graph drops v and its three edges and adds one fresh split
    edge joining two of the neighbors; ids of surviving edges are shared
    with the original graph.
    """

    pivot: int
    neighbors: tuple[int, int, int]          # x, y, z
    incident: tuple[int, int, int]           # e_x, e_y, e_z
    graphs: tuple[MultiGraph, MultiGraph, MultiGraph]   # G_xy, G_xz, G_yz
    split_edges: tuple[int, int, int]        # fresh id of {x,y}, {x,z}, {y,z}
    # per reduced graph: (kept incident-edge pair, deleted incident edge)
    replaced: tuple[tuple[tuple[int, int], int], ...] = field(default=())


def _drop_vertex(g: MultiGraph, v: int, extra: tuple[int, int, int]):
    """Graph minus vertex v (and its edges) plus one extra edge (id,a,b)."""
    vmap = {u: (u if u < v else u - 1) for u in range(g.n) if u != v}
    edges = [(e, vmap[a], vmap[b]) for e, a, b in g.edges if v not in (a, b)]
    eid, a, b = extra
    edges.append((eid, vmap[a], vmap[b]))
    return MultiGraph(g.n - 1, edges)


def reduce_deg3(g: MultiGraph, v: int) -> Deg3Reduction:
    """Build the three reduction graphs at the degree-3 vertex v."""
    if g.degree(v) != 3:
        raise WrongDegree(f"vertex {v} has degree {g.degree(v)}, need 3")
    if not is_atomic(g):
        raise NotAtomic("degree-3 reduction requires an atomic graph")
    inc = sorted(g.adj()[v])            # [(e_x, x), (e_y, y), (e_z, z)]
    (ex, x), (ey, y), (ez, z) = inc
    fresh = _next_id(g)
    g_xy = _drop_vertex(g, v, (fresh, x, y))
    g_xz = _drop_vertex(g, v, (fresh, x, z))
    g_yz = _drop_vertex(g, v, (fresh, y, z))
    return Deg3Reduction(
        pivot=v,
        neighbors=(x, y, z),
        incident=(ex, ey, ez),
        graphs=(g_xy, g_xz, g_yz),
        split_edges=(fresh, fresh, fresh),
        replaced=(((ex, ey), ez), ((ex, ez), ey), ((ey, ez), ex)),
    )


def contract_delete(g: MultiGraph, e: int, f: int) -> MultiGraph:
    """G/e - f. For atomic inputs the result is again bispanning."""
    if e == f:
        raise SameEdge("contract_delete needs two distinct edges")
    if not is_atomic(g):
        raise NotAtomic("contract_delete guarantee requires an atomic graph")
    u, v = g.endpoints(e)
    h, _, _ = contract(g, {u, v})
    if h.has_edge(f):
        h = MultiGraph(h.n, [t for t in h.edges if t[0] != f])
    return h


def clique2_sum(g1: MultiGraph, d1: int, g2: MultiGraph, d2: int,
                orientation: int = 0) -> MultiGraph:
    """2-clique sum: glue g1 and g2 along edges d1 and d2 (identifying their
    endpoints, flipped when orientation=1) and delete both join edges.

    Edge ids of g1 survive unchanged; ids of g2 are shifted by
    max(g1 ids)+1. Result: |V|=n1+n2-2, |E|=m1+m2-2.
    """
    if not g1.has_edge(d1) or not g2.has_edge(d2):
        raise NoSuchEdge("join edges must exist")
    x1, y1 = g1.endpoints(d1)
    x2, y2 = g2.endpoints(d2)
    if orientation:
        x2, y2 = y2, x2
    off = max(g1.edge_ids()) + 1
    vmap = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == x2:
            vmap[v] = x1
        elif v == y2:
            vmap[v] = y1
        else:
            vmap[v] = nxt
            nxt += 1
    edges = [t for t in g1.edges if t[0] != d1]
    edges += [(e + off, vmap[u], vmap[v]) for e, u, v in g2.edges if e != d2]
    return MultiGraph(nxt, edges)


def decompose_2vconn(g: MultiGraph) -> Optional[tuple[MultiGraph, int, MultiGraph, int]]:
    """Split an atomic bispanning graph with vertex connectivity 2 at its
    lexicographically least 2-vertex cut {x,y} into two simple bispanning
    parts, each with a fresh join edge {x,y} added, such that clique2_sum
    reproduces g up to isomorphism. Returns (G1, d1, G2, d2)."""
    import itertools

    from .core import components

    if find_two_trees(g) is None:
        raise NotBispanning("input must be bispanning")
    if not is_atomic(g):
        raise NotApplicable("decomposition defined for atomic graphs")
    cut = None
    for x, y in itertools.combinations(range(g.n), 2):
        cnt, _ = components(g, skip_vertices=(x, y))
        if cnt > 1:
            cut = (x, y)
            break
    if cut is None:
        raise NotApplicable("vertex connectivity is not 2")
    x, y = cut
    _, labels = components(g, skip_vertices=(x, y))
    side0 = {v for v in range(g.n) if labels[v] == 0}
    side1 = {v for v in range(g.n) if v not in (x, y) and labels[v] not in (None, 0)}
    parts = []
    fresh = _next_id(g)
    for side in (side0, side1):
        sub, vmap = induced_subgraph(g, side | {x, y})
        part = MultiGraph(sub.n, list(sub.edges) + [(fresh, vmap[x], vmap[y])])
        parts.append((part, fresh))
        fresh += 1
    (g1, d1), (g2, d2) = parts
    return g1, d1, g2, d2
