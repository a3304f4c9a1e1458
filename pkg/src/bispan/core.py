"""Undirected multigraph model: contraction, spanning-tree predicates,
fundamental cycles and cuts, connectivity, and canonical forms.

Vertices are integers 0..n-1. Edges carry stable integer ids; parallel edges
are distinct ids, loops are forbidden. Edge subsets are plain frozensets of
edge ids.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Optional, Sequence

from .errors import (
    Disconnected,
    EdgeInTree,
    EdgeNotInTree,
    LoopEdge,
    NotATree,
    TooLarge,
    VertexOutOfRange,
)


class UnionFind:
    """Disjoint-set forest with path compression and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int = 0):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)


class MultiGraph:
    """Immutable undirected multigraph with stable edge ids.

    edges: tuple of (eid, u, v) triples. Edge ids are unique but need not be
    contiguous (contraction and deletion preserve surviving ids).
    """

    __slots__ = ("n", "edges", "_ends", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]]):
        self.n = n
        self.edges = tuple((int(e), int(u), int(v)) for e, u, v in edges)
        ends = {}
        for e, u, v in self.edges:
            if u == v:
                raise LoopEdge(f"edge {e} is a loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge {e} endpoints ({u},{v}) not < {n}")
            if e in ends:
                raise ValueError(f"duplicate edge id {e}")
            ends[e] = (u, v)
        self._ends = ends
        self._adj = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> frozenset[int]:
        return frozenset(self._ends)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._ends[e]

    def has_edge(self, e: int) -> bool:
        return e in self._ends

    def adj(self) -> list[list[tuple[int, int]]]:
        """Adjacency lists: adj[v] = [(edge id, other endpoint), ...]."""
        if self._adj is None:
            a = [[] for _ in range(self.n)]
            for e, u, v in self.edges:
                a[u].append((e, v))
                a[v].append((e, u))
            self._adj = a
        return self._adj

    def degree(self, v: int) -> int:
        return len(self.adj()[v])

    def other_end(self, e: int, v: int) -> int:
        u, w = self._ends[e]
        return w if v == u else u

    def is_simple(self) -> bool:
        seen = set()
        for _, u, v in self.edges:
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def endpoint_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) if u < v else (v, u) for _, u, v in self.edges]

    def __repr__(self):
        return f"MultiGraph(n={self.n}, edges={list(self.edges)!r})"

    def __eq__(self, other):
        return (
            isinstance(other, MultiGraph)
            and self.n == other.n
            and sorted(self.edges) == sorted(other.edges)
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.edges))))


def build_graph(n: int, endpoint_list: Sequence[tuple[int, int]]) -> MultiGraph:
    """Build a multigraph; edge ids are assigned 0..m-1 in list order."""
    return MultiGraph(n, [(i, u, v) for i, (u, v) in enumerate(endpoint_list)])


def delete_edges(g: MultiGraph, eids: Iterable[int]) -> MultiGraph:
    drop = set(eids)
    return MultiGraph(g.n, [t for t in g.edges if t[0] not in drop])


def contract(g: MultiGraph, xs: Iterable[int]):
    """Contract the vertex set xs into a single new vertex.

    Edges with both ends inside xs are removed; surviving edges keep their
    ids. Returns (graph, removed edge ids, vertex map old->new). The merged
    vertex takes the lowest new id among xs' positions after renumbering.
    """
    xs = set(xs)
    if not xs:
        raise ValueError("empty contraction set")
    keep = [v for v in range(g.n) if v not in xs]
    merged = g.n - len(xs)  # new id of the contracted vertex
    vmap = {}
    for i, v in enumerate(keep):
        vmap[v] = i
    for v in xs:
        vmap[v] = merged
    removed = []
    edges = []
    for e, u, v in g.edges:
        nu, nv = vmap[u], vmap[v]
        if nu == nv:
            removed.append(e)
        else:
            edges.append((e, nu, nv))
    return MultiGraph(merged + 1, edges), frozenset(removed), vmap


def components(g: MultiGraph, skip_vertices: Iterable[int] = (),
               skip_edges: Iterable[int] = ()) -> tuple[int, list[Optional[int]]]:
    """Connected components; optionally ignoring some vertices/edges.

    Returns (count, labels) where labels[v] is the component index or None
    for skipped vertices.
    """
    skip_v = set(skip_vertices)
    skip_e = set(skip_edges)
    labels: list[Optional[int]] = [None] * g.n
    adj = g.adj()
    count = 0
    for start in range(g.n):
        if start in skip_v or labels[start] is not None:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for e, w in adj[v]:
                if e in skip_e or w in skip_v or labels[w] is not None:
                    continue
                labels[w] = count
                queue.append(w)
        count += 1
    return count, labels


def is_connected(g: MultiGraph) -> bool:
    return g.n <= 1 or components(g)[0] == 1


def is_spanning_tree(g: MultiGraph, t: frozenset[int]) -> bool:
    """True iff the edge set t spans all vertices, is connected, and has
    exactly n-1 edges. K1 with t = {} counts as a spanning tree."""
    if len(t) != g.n - 1:
        return False
    if g.n <= 1:
        return True
    uf = UnionFind(g.n)
    parts = g.n
    for e in t:
        u, v = g.endpoints(e)
        if not uf.union(u, v):
            return False
        parts -= 1
    return parts == 1


class RootedTree:
    """BFS structure of a spanning tree: parent pointers, depths, and
    entry/exit times for O(1) subtree tests."""

    __slots__ = ("root", "parent_edge", "parent_vertex", "depth", "tin", "tout")

    def __init__(self, g: MultiGraph, t: frozenset[int], root: int = 0):
        n = g.n
        self.root = root
        self.parent_edge = [-1] * n
        self.parent_vertex = [-1] * n
        self.depth = [0] * n
        tadj = [[] for _ in range(n)]
        for e in t:
            u, v = g.endpoints(e)
            tadj[u].append((e, v))
            tadj[v].append((e, u))
        order = [root]
        seen = [False] * n
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e, w in tadj[v]:
                if not seen[w]:
                    seen[w] = True
                    self.parent_edge[w] = e
                    self.parent_vertex[w] = v
                    self.depth[w] = self.depth[v] + 1
                    queue.append(w)
                    order.append(w)
        if len(order) != n:
            raise NotATree("edge set does not span the graph")
        # Euler intervals from a DFS over the same tree
        self.tin = [0] * n
        self.tout = [0] * n
        clock = 0
        stack = [(root, False)]
        visited = [False] * n
        while stack:
            v, done = stack.pop()
            if done:
                self.tout[v] = clock
                clock += 1
                continue
            visited[v] = True
            self.tin[v] = clock
            clock += 1
            stack.append((v, True))
            for e, w in tadj[v]:
                if not visited[w]:
                    stack.append((w, False))

    def in_subtree(self, v: int, top: int) -> bool:
        """Is v inside the subtree rooted at top?"""
        return self.tin[top] <= self.tin[v] and self.tout[v] <= self.tout[top]

    def path_edges(self, u: int, v: int) -> list[int]:
        """Tree edges on the unique u-v path."""
        out = []
        du, dv = self.depth[u], self.depth[v]
        while du > dv:
            out.append(self.parent_edge[u])
            u = self.parent_vertex[u]
            du -= 1
        while dv > du:
            out.append(self.parent_edge[v])
            v = self.parent_vertex[v]
            dv -= 1
        while u != v:
            out.append(self.parent_edge[u])
            out.append(self.parent_edge[v])
            u = self.parent_vertex[u]
            v = self.parent_vertex[v]
        return out


def fundamental_cycle(g: MultiGraph, t: frozenset[int], e: int,
                      rt: Optional[RootedTree] = None) -> frozenset[int]:
    """Edge set of the unique cycle in the spanning tree t closed by e."""
    if e in t:
        raise EdgeInTree(f"edge {e} is in the tree")
    if rt is None:
        rt = RootedTree(g, t)
    u, v = g.endpoints(e)
    return frozenset(rt.path_edges(u, v)) | {e}


def fundamental_cut(g: MultiGraph, t: frozenset[int], e: int,
                    rt: Optional[RootedTree] = None) -> frozenset[int]:
    """Edge set of the cut opened by removing tree edge e: all edges (e
    included, other tree edges excluded) that cross between the two
    components of the tree minus e."""
    if e not in t:
        raise EdgeNotInTree(f"edge {e} is not in the tree")
    if rt is None:
        rt = RootedTree(g, t)
    u, v = g.endpoints(e)
    # deeper endpoint's subtree is one side of the cut
    top = u if rt.depth[u] > rt.depth[v] else v
    cut = [e]
    for f, a, b in g.edges:
        if f == e or f in t:
            continue
        if rt.in_subtree(a, top) != rt.in_subtree(b, top):
            cut.append(f)
    return frozenset(cut)


def check_duality(g: MultiGraph, t: frozenset[int]) -> bool:
    """Self-test: e in C(T,f) iff f in D(T,e) for all e in t, f not in t."""
    rt = RootedTree(g, t)
    cotree = [f for f in g.edge_ids() if f not in t]
    cycles = {f: fundamental_cycle(g, t, f, rt) for f in cotree}
    cuts = {e: fundamental_cut(g, t, e, rt) for e in t}
    for e in t:
        for f in cotree:
            if (e in cycles[f]) != (f in cuts[e]):
                return False
    return True


CONNECTIVITY_CAP = 4  # bispanning graphs never exceed 3; 4 means ">= 4"


def connectivity(g: MultiGraph) -> tuple[int, int]:
    """Exact (vertex, edge) connectivity, brute force over deletion sets of
    size <= 3. Values of 4 mean ">= 4"."""
    if g.n < 2 or not is_connected(g):
        raise Disconnected("connectivity needs a connected graph on >= 2 vertices")
    eids = sorted(g.edge_ids())
    econn = CONNECTIVITY_CAP
    for k in range(1, CONNECTIVITY_CAP):
        if any(components(g, skip_edges=cut)[0] > 1
               for cut in itertools.combinations(eids, k)):
            econn = k
            break
    vconn = min(CONNECTIVITY_CAP, g.n - 1)
    for k in range(1, min(CONNECTIVITY_CAP, g.n - 1)):
        found = False
        for cut in itertools.combinations(range(g.n), k):
            cnt, _ = components(g, skip_vertices=cut)
            if cnt > 1:
                found = True
                break
        if found:
            vconn = k
            break
    return vconn, econn


# ---------------------------------------------------------------------------
# canonical form


def _refine_invariants(n: int, pairs: list[tuple[int, int]]) -> list[int]:
    """Iterated neighborhood refinement. Returns a stable integer class id
    per vertex; isomorphic vertices always share a class."""
    adj = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    inv = [len(adj[v]) for v in range(n)]
    classes = len(set(inv))
    while True:
        sig = [(inv[v], tuple(sorted(inv[w] for w in adj[v]))) for v in range(n)]
        order = sorted(set(sig))
        remap = {s: i for i, s in enumerate(order)}
        new = [remap[sig[v]] for v in range(n)]
        new_classes = len(order)
        if new_classes == classes:
            return new
        inv, classes = new, new_classes


def canonical_code(g: MultiGraph) -> bytes:
    """Byte string equal for two multigraphs iff they are isomorphic.

    Minimizes the sorted endpoint-pair encoding over all vertex permutations
    consistent with the refined degree partition. Exact (any isomorphism
    maps refinement classes onto each other). Desk scale only.
    """
    if g.n > 12:
        raise TooLarge("canonical_code supports n <= 12")
    n = g.n
    pairs = g.endpoint_pairs()
    if n == 0:
        return b"0|"
    inv = _refine_invariants(n, pairs)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(inv[v], []).append(v)
    cell_list = [cells[k] for k in sorted(cells)]
    # positions are assigned to cells in invariant order
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in cell_list)):
        pos = {}
        i = 0
        for perm in perms:
            for v in perm:
                pos[v] = i
                i += 1
        enc = sorted(
            (pos[u], pos[v]) if pos[u] < pos[v] else (pos[v], pos[u])
            for u, v in pairs
        )
        if best is None or enc < best:
            best = enc
    body = ",".join(f"{u}-{v}" for u, v in best)
    return f"{n}|{body}".encode()


# ---------------------------------------------------------------------------
# edge-list interchange format and DOT export

COLOR_LETTER = {"blue": "b", "red": "r", "black": "-"}
LETTER_COLOR = {"b": "blue", "r": "red", "-": "black"}


def parse_edge_list(text: str) -> tuple[MultiGraph, dict[int, str]]:
    """Parse the interchange format: first line `n m`, then m lines
    `u v [c]` with optional color c in {b, r}; `-` or missing means black.
    Edge ids are the zero-based data line indices."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    pairs = []
    colors = {}
    for i, ln in enumerate(lines[1:]):
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        pairs.append((u, v))
        c = parts[2] if len(parts) == 3 else "-"
        if c not in LETTER_COLOR:
            raise ValueError(f"bad color {c!r} on line {ln!r}")
        colors[i] = LETTER_COLOR[c]
    return build_graph(n, pairs), colors


def format_edge_list(g: MultiGraph, colors: Optional[dict[int, str]] = None) -> str:
    out = [f"{g.n} {g.m}"]
    for e, u, v in g.edges:
        c = COLOR_LETTER[(colors or {}).get(e, "black")]
        out.append(f"{u} {v} {c}" if c != "-" else f"{u} {v}")
    return "\n".join(out) + "\n"


def to_dot(g: MultiGraph, colors: Optional[dict[int, str]] = None,
           name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for e, u, v in g.edges:
        c = (colors or {}).get(e, "black")
        lines.append(f'  {u} -- {v} [label="{e}", color={c}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
