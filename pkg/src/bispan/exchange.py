"""Symmetric edge exchanges and exchange graphs.

An exchange swaps an edge pair (e, f) between the two spanning trees of a
tree pair. Exchange graphs have one vertex per tree pair of a host graph:

* tau2: arcs for every valid exchange,
* tau3: arcs only for unique exchanges (the swap partner is forced),
* tau4: unique S-exchanges only.

Each variant comes in directed, undirected (one arc per twin pair, kept on
the side whose sorted S edge-id list is lexicographically smaller), and
simple (parallel transitions merged) form. Also computes the difficulty
measure nu: the minimum over tree pairs of the number of inversion paths of
length |E|/2 through tau3.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

import numpy as np

from .core import MultiGraph, RootedTree, UnionFind, is_spanning_tree
from .errors import InvalidExchange, InvalidInput, NotBispanning, TooLarge
from .bispanning import TreePair, find_two_trees

PairKey = tuple  # sorted tuple of S edge ids; T is the complement

S_EXCHANGE = "S"
T_EXCHANGE = "T"

VARIANTS = ("tau2", "tau3", "tau4")
FORMS = ("directed", "undirected", "simple")


class ExchangeArc(NamedTuple):
    e: int
    f: int
    source: PairKey
    kind: str  # S_EXCHANGE or T_EXCHANGE
    target: PairKey


def pair_key(S: Iterable[int]) -> PairKey:
    return tuple(sorted(S))


def _scan_pair(g: MultiGraph, S: frozenset[int]) -> dict[int, tuple[str, frozenset[int]]]:
    """For every edge e, the set of swap partners D(X,e) & C(Y,e) - e, where
    X is e's own tree and Y the other one. One rooted-tree pass per tree."""
    T = g.edge_ids() - S
    rtS = RootedTree(g, S)
    rtT = RootedTree(g, T)
    # fundamental cycles keyed by the non-tree edge
    cyc_in_T = {}   # for e in S: cycle of e in T
    cyc_in_S = {}
    for e, u, v in g.edges:
        if e in S:
            cyc_in_T[e] = frozenset(rtT.path_edges(u, v)) | {e}
        else:
            cyc_in_S[e] = frozenset(rtS.path_edges(u, v)) | {e}
    out = {}
    for e, u, v in g.edges:
        if e in S:
            rt, tree, kind, cyc = rtS, S, S_EXCHANGE, cyc_in_T[e]
        else:
            rt, tree, kind, cyc = rtT, T, T_EXCHANGE, cyc_in_S[e]
        top = u if rt.depth[u] > rt.depth[v] else v
        cut = {e}
        for f, a, b in g.edges:
            if f == e or f in tree:
                continue
            if rt.in_subtree(a, top) != rt.in_subtree(b, top):
                cut.add(f)
        out[e] = (kind, frozenset(cut & cyc) - {e})
    return out


def exchange_candidates(tp: TreePair, e: int) -> frozenset[int]:
    """Swap partners for e: the cut/cycle intersection minus e itself."""
    return _scan_pair(tp.g, tp.S)[e][1]


def unique_exchange(tp: TreePair, e: int) -> Optional[int]:
    """The forced partner of e, or None when the exchange is not unique."""
    cands = exchange_candidates(tp, e)
    if len(cands) == 1:
        return next(iter(cands))
    return None


def apply_exchange(tp: TreePair, e: int, f: int) -> TreePair:
    """Swap e and f between the trees; both results must be spanning trees."""
    if (e in tp.S) == (f in tp.S):
        raise InvalidExchange(f"edges {e} and {f} are in the same tree")
    S2 = tp.S ^ {e, f}
    T2 = tp.T ^ {e, f}
    if not is_spanning_tree(tp.g, S2) or not is_spanning_tree(tp.g, T2):
        raise InvalidExchange(f"swap ({e},{f}) does not preserve the trees")
    return TreePair(tp.g, S2, T2)


def leaf_unique_exchanges(tp: TreePair) -> list[ExchangeArc]:
    """One forced exchange per (tree, leaf vertex): the leaf edge of a tree
    always has a unique swap partner."""
    g = tp.g
    scan = _scan_pair(g, tp.S)
    key = pair_key(tp.S)
    arcs = []
    for tree in (tp.S, tp.T):
        deg = [0] * g.n
        leaf_edge = [None] * g.n
        for e in tree:
            u, v = g.endpoints(e)
            deg[u] += 1
            deg[v] += 1
        for e in tree:
            u, v = g.endpoints(e)
            if deg[u] == 1:
                leaf_edge[u] = e
            if deg[v] == 1:
                leaf_edge[v] = e
        for v in range(g.n):
            e = leaf_edge[v]
            if e is None:
                continue
            kind, cands = scan[e]
            assert len(cands) == 1, "leaf edge exchange must be forced"
            f = next(iter(cands))
            arcs.append(ExchangeArc(e, f, key, kind, pair_key(tp.S ^ {e, f})))
    return arcs


# ---------------------------------------------------------------------------
# exchange graphs


@dataclass
class ExchangeGraph:
    host: MultiGraph
    variant: str
    form: str
    vertices: list[PairKey]
    arcs: list[ExchangeArc]                  # directed / undirected forms
    simple_edges: list[tuple[PairKey, PairKey]]  # simple form only

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.simple_edges) if self.form == "simple" else len(self.arcs)

    def degrees(self) -> dict[PairKey, int]:
        deg = {v: 0 for v in self.vertices}
        if self.form == "simple":
            for a, b in self.simple_edges:
                deg[a] += 1
                deg[b] += 1
        elif self.form == "undirected":
            for arc in self.arcs:
                deg[arc.source] += 1
                deg[arc.target] += 1
        else:
            for arc in self.arcs:
                deg[arc.source] += 1
        return deg

    def endpoint_pairs(self) -> list[tuple[PairKey, PairKey]]:
        if self.form == "simple":
            return list(self.simple_edges)
        return [(a.source, a.target) for a in self.arcs]

    def to_json_dict(self) -> dict:
        return {
            "variant": self.variant,
            "form": self.form,
            "vertices": [list(v) for v in self.vertices],
            "arcs": (
                [{"from": list(a), "to": list(b)} for a, b in self.simple_edges]
                if self.form == "simple"
                else [
                    {"e": a.e, "f": a.f, "from": list(a.source), "kind": a.kind}
                    for a in self.arcs
                ]
            ),
        }

    def to_dot(self, name: str = "tau") -> str:
        kind = "digraph" if self.form == "directed" else "graph"
        sep = "->" if self.form == "directed" else "--"
        idx = {v: i for i, v in enumerate(self.vertices)}
        lines = [f"{kind} {name} {{"]
        for v in self.vertices:
            label = "{" + ",".join(map(str, v)) + "}"
            lines.append(f'  p{idx[v]} [label="{label}"];')
        if self.form == "simple":
            for a, b in self.simple_edges:
                lines.append(f"  p{idx[a]} {sep} p{idx[b]};")
        else:
            merged: dict[tuple, list[ExchangeArc]] = {}
            for a in self.arcs:
                merged.setdefault((a.source, a.target), []).append(a)
            for (src, dst), group in merged.items():
                lab = " ".join("{%d,%d}" % (a.e, a.f) for a in group)
                color = "blue" if group[0].kind == S_EXCHANGE else "red"
                lines.append(f'  p{idx[src]} {sep} p{idx[dst]} [label="{lab}", color={color}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def enumerate_tree_pairs(g: MultiGraph) -> set[PairKey]:
    """All tree pairs of g, discovered breadth-first from one found pair by
    closing under unrestricted exchanges (the unrestricted exchange graph is
    connected)."""
    seed = find_two_trees(g)
    if seed is None:
        raise NotBispanning("host graph is not bispanning")
    start = frozenset(seed.S)
    seen = {start}
    queue = deque([start])
    while queue:
        S = queue.popleft()
        scan = _scan_pair(g, S)
        for e, (_kind, cands) in scan.items():
            for f in cands:
                S2 = S ^ {e, f}
                if S2 not in seen:
                    seen.add(S2)
                    queue.append(S2)
    return {pair_key(S) for S in seen}


MAX_TAU_VERTICES = 100_000


def build_tau(g: MultiGraph, variant: str = "tau3",
              form: str = "directed") -> ExchangeGraph:
    """Build an exchange graph of g. Pair discovery runs over unrestricted
    exchanges from one found tree pair regardless of variant."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}")
    seed = find_two_trees(g)
    if seed is None:
        raise NotBispanning("host graph is not bispanning")
    start = frozenset(seed.S)
    seen = {start}
    queue = deque([start])
    arcs: list[ExchangeArc] = []
    while queue:
        S = queue.popleft()
        if len(seen) > MAX_TAU_VERTICES:
            raise TooLarge("exchange graph exceeds the desk-scale cap")
        key = pair_key(S)
        scan = _scan_pair(g, S)
        for e, (kind, cands) in scan.items():
            for f in cands:
                S2 = S ^ {e, f}
                if S2 not in seen:
                    seen.add(S2)
                    queue.append(S2)
                keep = (
                    variant == "tau2"
                    or (len(cands) == 1
                        and (variant == "tau3" or kind == S_EXCHANGE))
                )
                if keep:
                    arcs.append(ExchangeArc(e, f, key, kind, pair_key(S2)))
    vertices = sorted(pair_key(S) for S in seen)
    if form == "directed":
        return ExchangeGraph(g, variant, form, vertices, arcs, [])
    if form == "undirected":
        half = [a for a in arcs if a.source < a.target]
        return ExchangeGraph(g, variant, form, vertices, half, [])
    simple = sorted({(a.source, a.target) for a in arcs if a.source < a.target})
    return ExchangeGraph(g, variant, form, vertices, [], simple)


def tau_connected(x: ExchangeGraph) -> bool:
    idx = {v: i for i, v in enumerate(x.vertices)}
    uf = UnionFind(len(x.vertices))
    parts = len(x.vertices)
    for a, b in x.endpoint_pairs():
        if uf.union(idx[a], idx[b]):
            parts -= 1
    return parts <= 1


def leaf_restricted_tau3(g: MultiGraph) -> ExchangeGraph:
    """tau3 with only the leaf-edge forced exchanges kept: arcs (e, f) where
    e is a leaf edge of its own tree at one of its endpoints."""
    full = build_tau(g, "tau3", "directed")
    kept = []
    by_key: dict[PairKey, set[tuple[int, int]]] = {}
    all_ids = g.edge_ids()
    for key in full.vertices:
        S = frozenset(key)
        tp = TreePair(g, S, all_ids - S)
        by_key[key] = {(a.e, a.f) for a in leaf_unique_exchanges(tp)}
    for arc in full.arcs:
        if (arc.e, arc.f) in by_key[arc.source]:
            kept.append(arc)
    return ExchangeGraph(g, "tau3", "directed", full.vertices, kept, [])


# ---------------------------------------------------------------------------
# difficulty measure


def nu(g: MultiGraph, pair: PairKey | None = None) -> tuple[int, PairKey]:
    """Difficulty measure: the number of inversion paths of a tree pair,
    where an inversion path is a directed path of length |E|/2 from (S,T)
    to (T,S) in tau3. Each such path swaps every edge exactly once, so the
    paths are automatically simple.

    Counting convention: a transition realizable by both an S-exchange and
    a T-exchange is counted once (paths are counted in the collapsed
    directed tau3). This is the convention that reproduces the reference
    values of the named catalog at their stored colorings; counting the
    two realizations separately does not (44 instead of 24 on the wheel
    with five vertices).

    With pair=None the minimum over all tree pairs is returned together
    with a minimizing pair; otherwise the count at the given pair.
    """
    steps = g.m // 2
    if steps > 12:
        raise TooLarge("nu supports |E|/2 <= 12")
    tau = build_tau(g, "tau3", "directed")
    all_ids = g.edge_ids()
    adj: dict[PairKey, set[PairKey]] = {v: set() for v in tau.vertices}
    for arc in tau.arcs:
        adj[arc.source].add(arc.target)  # collapsed parallels
    if pair is not None:
        if pair not in adj:
            raise InvalidInput("pair is not a tree pair of this graph")
        # single-source: exact integer front propagation
        front: dict[PairKey, int] = {pair: 1}
        for _ in range(steps):
            nxt: dict[PairKey, int] = {}
            for v, cnt in front.items():
                for w in adj[v]:
                    nxt[w] = nxt.get(w, 0) + cnt
            front = nxt
        return front.get(pair_key(all_ids - set(pair)), 0), pair
    size = len(tau.vertices)
    if size > 4000:
        raise TooLarge("nu minimum supported up to 4000 tree pairs")
    idx = {v: i for i, v in enumerate(tau.vertices)}
    A = np.zeros((size, size), dtype=np.int64)
    for v, outs in adj.items():
        for w in outs:
            A[idx[v], idx[w]] = 1
    P = np.linalg.matrix_power(A, steps)
    best = None
    best_key = None
    for key in tau.vertices:
        inv = pair_key(all_ids - set(key))
        cnt = int(P[idx[key], idx[inv]])
        if best is None or cnt < best:
            best, best_key = cnt, key
    return best, best_key
