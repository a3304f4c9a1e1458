"""Cyclic base orderings and unique exchange cyclic base orderings.

A cyclic base ordering (CBO) of a bispanning graph arranges all 2m edges in
a cycle <s_1..s_m | t_1..t_m> so that every m cyclically consecutive edges
form a spanning tree. A unique exchange CBO (UECBO) is the stricter object:
a swap sequence <(e_1,f_1),...,(e_m,f_m)> in which every step is a unique
exchange, i.e. a length-m path in directed tau3 from (S,T) to (T,S).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import MultiGraph, fundamental_cycle, is_spanning_tree
from .bispanning import TreePair
from .errors import (
    InvalidInput,
    LengthMismatch,
    NotBispanning,
    SeamMismatch,
    TooLarge,
)
from .exchange import apply_exchange, unique_exchange


@dataclass(frozen=True)
class SwapSequence:
    """An edge swap sequence: start pair plus ordered (e_i, f_i) swaps.

    Each swap moves e_i out of its tree and f_i in. For a CBO or UECBO the
    length is |E|/2 and the final pair is the color inversion of the start.
    """

    host: MultiGraph
    start: TreePair
    swaps: tuple[tuple[int, int], ...] = field(default=())

    def __len__(self) -> int:
        return len(self.swaps)

    def edge_ordering(self) -> list[int]:
        """The induced cyclic edge ordering <s_1..s_m, t_1..t_m>.

        Swap i contributes its start-S member as s_i and its start-T
        member as t_i.
        """
        s_row, t_row = [], []
        for e, f in self.swaps:
            if e in self.start.S:
                s_row.append(e)
                t_row.append(f)
            else:
                s_row.append(f)
                t_row.append(e)
        return s_row + t_row

    def to_json_dict(self) -> dict:
        return {
            "start_S": sorted(self.start.S),
            "swaps": [[e, f] for e, f in self.swaps],
        }

    def pretty(self) -> str:
        inner = ",".join(f"({e},{f})" for e, f in self.swaps)
        return f"<{inner}>"


def _drop_vertex(g: MultiGraph, v: int, extra=None):
    """g minus vertex v, optionally plus one extra edge (id, a, b)."""
    vmap = {u: (u if u < v else u - 1) for u in range(g.n) if u != v}
    edges = [(e, vmap[a], vmap[b]) for e, a, b in g.edges if v not in (a, b)]
    if extra is not None:
        eid, a, b = extra
        edges.append((eid, vmap[a], vmap[b]))
    return MultiGraph(g.n - 1, edges)


def _cbo_rows(tp: TreePair) -> tuple[list[int], list[int]]:
    """Recursive CBO construction; returns the (s_row, t_row) edge lists."""
    g = tp.g
    if g.n == 1:
        return [], []
    if g.n == 2:
        (s,) = tp.S
        (t,) = tp.T
        return [s], [t]

    # prefer a degree-2 reduction at the lowest vertex id
    deg2 = [v for v in range(g.n) if g.degree(v) == 2]
    if deg2:
        v = deg2[0]
        (ex, _), (ey, _) = sorted(g.adj()[v])
        if ex not in tp.S:
            ex, ey = ey, ex  # keep ex on the S side
        g2 = _drop_vertex(g, v)
        sub = TreePair(g2, tp.S - {ex}, tp.T - {ey})
        s_row, t_row = _cbo_rows(sub)
        # a cut-off degree-2 vertex is a leaf of both trees: append at the end
        return s_row + [ex], t_row + [ey]

    deg3 = [v for v in range(g.n) if g.degree(v) == 3]
    if not deg3:
        raise NotBispanning("no degree-2 or degree-3 vertex to reduce at")
    v = deg3[0]
    (e1, n1), (e2, n2), (e3, n3) = sorted(g.adj()[v])
    same_s = [p for p in ((e1, n1), (e2, n2), (e3, n3)) if p[0] in tp.S]
    if len(same_s) == 2:
        (ex, x), (ey, y) = same_s
        ((ez, _),) = [p for p in ((e1, n1), (e2, n2), (e3, n3)) if p[0] in tp.T]
        split_in_s = True
    else:
        pairs = ((e1, n1), (e2, n2), (e3, n3))
        (ex, x), (ey, y) = [p for p in pairs if p[0] in tp.T]
        ((ez, _),) = same_s
        split_in_s = False

    bar = max(g.edge_ids()) + 1  # fresh id for the split edge
    g2 = _drop_vertex(g, v, (bar, x, y))
    if split_in_s:
        sub = TreePair(g2, tp.S - {ex, ey} | {bar}, tp.T - {ez})
    else:
        sub = TreePair(g2, tp.S - {ez}, tp.T - {ex, ey} | {bar})
    s_row, t_row = _cbo_rows(sub)
    own, other = (s_row, t_row) if split_in_s else (t_row, s_row)

    i = own.index(bar)
    m = len(own) + 1
    # expand with the order <e_z, t'_i>; the second of <e_x, e_y> must be
    # the edge missing from the fundamental cycle that e_z closes in the
    # window tree {e_x, e_y, own[i+1:], other[:i]}
    window = frozenset([ex, ey] + own[i + 1:] + other[:i])
    cycle = fundamental_cycle(g, window, ez)
    first, second = (ey, ex) if ex not in cycle else (ex, ey)
    own = own[:i] + [first, second] + own[i + 1:]
    other = other[:i] + [ez] + other[i:]
    assert len(own) == len(other) == m
    return (own, other) if split_in_s else (other, own)


def build_cbo(tp: TreePair) -> SwapSequence:
    """Construct a cyclic base ordering by degree-2/degree-3 reduction.

    Deterministic: always reduces at the lowest-id vertex of degree two,
    falling back to degree three. The output is a CBO, generally not a
    UECBO.
    """
    s_row, t_row = _cbo_rows(tp)
    return SwapSequence(tp.g, tp, tuple(zip(s_row, t_row)))


def verify_cbo(seq: SwapSequence) -> bool:
    """Check all 2m cyclic windows of m consecutive edges for treeness."""
    g = seq.host
    m = g.m // 2
    if len(seq.swaps) != m:
        raise LengthMismatch(f"need {m} swaps, got {len(seq.swaps)}")
    order = seq.edge_ordering()
    if len(set(order)) != 2 * m or set(order) != g.edge_ids():
        return False
    doubled = order + order
    return all(
        is_spanning_tree(g, frozenset(doubled[i:i + m])) for i in range(2 * m)
    )


def find_uecbo(tp: TreePair, target_s: frozenset[int] | None = None,
               length: int | None = None) -> SwapSequence | None:
    """Depth-first search for a UECBO: a length-|E|/2 path in directed tau3
    from (S,T) to (T,S). Steps are explored S-exchanges first, lowest edge
    id first, so witnesses are reproducible. Memoizes failed (depth, pair)
    states.

    A different destination S tree and path length may be given to search
    for partial all-forced walks instead of a full color inversion.
    """
    g = tp.g
    m = g.m // 2 if length is None else length
    if m > 12:
        raise TooLarge("find_uecbo supports |E|/2 <= 12")
    target = frozenset(tp.T) if target_s is None else frozenset(target_s)
    dead: set[tuple[int, frozenset[int]]] = set()
    path: list[tuple[int, int]] = []

    def steps(cur: TreePair):
        got = []
        for e in sorted(cur.S) + sorted(cur.T):
            f = unique_exchange(cur, e)
            if f is not None:
                got.append((e, f))
        return got

    def dfs(cur: TreePair, depth: int) -> bool:
        if depth == m:
            return cur.S == target
        key = (depth, cur.S)
        if key in dead:
            return False
        for e, f in steps(cur):
            path.append((e, f))
            if dfs(apply_exchange(cur, e, f), depth + 1):
                return True
            path.pop()
        dead.add(key)
        return False

    if dfs(tp, 0):
        return SwapSequence(g, tp, tuple(path))
    return None


def verify_uecbo(seq: SwapSequence) -> bool:
    """Check every swap is the unique exchange for its first edge and the
    sequence ends at the color inversion of the start pair."""
    cur = seq.start
    for e, f in seq.swaps:
        if e not in cur.S | cur.T:
            return False
        if unique_exchange(cur, e) != f:
            return False
        cur = apply_exchange(cur, e, f)
    return cur.S == seq.start.T and cur.T == seq.start.S


def reverse_uecbo(seq: SwapSequence) -> SwapSequence:
    """The reversal <(f_m,e_m),...,(f_1,e_1)>, a UECBO of the same pair."""
    if not verify_uecbo(seq):
        raise InvalidInput("input is not a unique exchange cyclic base ordering")
    return SwapSequence(
        seq.host, seq.start, tuple((f, e) for e, f in reversed(seq.swaps))
    )


def _locate(seq: SwapSequence, d: int) -> tuple[int, int]:
    """(index, side) of the swap containing edge d; side 0 = first slot."""
    hits = [
        (i, pair.index(d))
        for i, pair in enumerate(seq.swaps)
        if d in pair
    ]
    if len(hits) != 1:
        raise SeamMismatch(f"edge {d} must appear in exactly one swap")
    return hits[0]


def join_uecbo_2sum(
    g: MultiGraph,
    seq_a: SwapSequence,
    seq_b: SwapSequence,
    d1: int,
    d2: int,
    schedule=None,
) -> SwapSequence:
    """Join two UECBOs across a 2-clique sum with seam edges d1, d2.

    g is the summed host: its edge ids are those of both parts minus the
    seam edges. The swaps touching d1 and d2 fuse into a single unique
    exchange; all earlier swaps of either part come before it and all
    later ones after. schedule, if given, is a binary string/list choosing
    which part's prefix (and suffix) elements are emitted next ('a'/'b');
    the default exhausts part A's prefix, then B's, fuses, then A's
    suffix, then B's suffix.
    """
    if not verify_uecbo(seq_a) or not verify_uecbo(seq_b):
        raise SeamMismatch("inputs must be unique exchange cyclic base orderings")
    i, side_a = _locate(seq_a, d1)
    j, side_b = _locate(seq_b, d2)
    if side_a == side_b:
        seq_b = reverse_uecbo(seq_b)
        j, side_b = _locate(seq_b, d2)
    # orient so that part A's swap is (a, d1) and part B's is (d2, b)
    if side_a == 0:
        seq_a, seq_b = seq_b, seq_a
        d1, d2 = d2, d1
        (i, side_a), (j, side_b) = (j, side_b), (i, side_a)
    fused = (seq_a.swaps[i][0], seq_b.swaps[j][1])

    prefix_a, suffix_a = list(seq_a.swaps[:i]), list(seq_a.swaps[i + 1:])
    prefix_b, suffix_b = list(seq_b.swaps[:j]), list(seq_b.swaps[j + 1:])
    if schedule is None:
        swaps = prefix_a + prefix_b + [fused] + suffix_a + suffix_b
    else:
        swaps = []
        pre = {"a": prefix_a, "b": prefix_b}
        post = {"a": suffix_a, "b": suffix_b}
        it = iter(schedule)
        for pool in (pre, post):
            need = len(pool["a"]) + len(pool["b"])
            while need:
                c = next(it)
                if not pool[c]:
                    raise InvalidInput("schedule exhausts one part too early")
                swaps.append(pool[c].pop(0))
                need -= 1
            if pool is pre:
                swaps.append(fused)

    s = (seq_a.start.S | seq_b.start.S) - {d1, d2}
    t = (seq_a.start.T | seq_b.start.T) - {d1, d2}
    start = TreePair(g, frozenset(s), frozenset(t))
    out = SwapSequence(g, start, tuple(swaps))
    if not verify_uecbo(out):
        raise SeamMismatch("joined sequence is not a UECBO of the summed graph")
    return out
