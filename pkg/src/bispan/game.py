"""The two-player edge recoloring game.

Alice flips the color of one edge, which opens a cycle in one tree and a
cut in the other; Bob must recolor a different edge from the resulting
candidate set to restore two disjoint spanning trees. Alice wins when all
edges carry the opposite of their initial color.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .bispanning import TreePair
from .core import MultiGraph, fundamental_cut, fundamental_cycle
from .errors import (
    EmptyHistory,
    IllegalFix,
    InvalidInput,
    NotBispanning,
    UnknownEdge,
    WrongPhase,
)
from .exchange import pair_key
from .ordering import find_uecbo

ALICE_TURN = "alice-turn"
BOB_MUST_FIX = "bob-must-fix"
WON = "won"

POLICIES = ("adversarial", "random", "manual")


@dataclass(frozen=True)
class Pending:
    """Alice's open flip: the cycle and cut it induced and what Bob may fix."""

    edge: int
    cycle: frozenset[int]
    cut: frozenset[int]
    candidates: frozenset[int]

    @property
    def forced(self) -> bool:
        return len(self.candidates) == 1


@dataclass(frozen=True)
class GameState:
    g: MultiGraph
    initial: TreePair
    current: TreePair
    phase: str
    pending: Optional[Pending]
    history: tuple[tuple[int, int], ...]
    policy: str
    seed: int
    rng_uses: int = 0

    @property
    def target(self) -> TreePair:
        return self.initial.swapped()

    @property
    def won(self) -> bool:
        return self.phase == WON

    @property
    def target_distance(self) -> int:
        return len(self.current.S ^ self.target.S)

    @property
    def moves(self) -> int:
        return len(self.history)


def new_game(g: MultiGraph, tp: TreePair, policy: str = "adversarial",
             seed: int = 0) -> GameState:
    if tp.g != g:
        raise NotBispanning("tree pair does not belong to this graph")
    if policy not in POLICIES:
        raise InvalidInput(f"policy must be one of {POLICIES}")
    return GameState(g, tp, tp, ALICE_TURN, None, (), policy, seed)


def alice_flip(s: GameState, e: int) -> GameState:
    if s.phase != ALICE_TURN:
        raise WrongPhase(f"cannot flip in phase {s.phase}")
    if not s.g.has_edge(e):
        raise UnknownEdge(f"no edge {e}")
    cur = s.current
    # flipping e out of tree X opens a cut in X and closes a cycle in Y
    if e in cur.S:
        cut = fundamental_cut(s.g, cur.S, e)
        cycle = fundamental_cycle(s.g, cur.T, e)
    else:
        cut = fundamental_cut(s.g, cur.T, e)
        cycle = fundamental_cycle(s.g, cur.S, e)
    candidates = (cut & cycle) - {e}
    pending = Pending(e, cycle, cut, candidates)
    return GameState(s.g, s.initial, cur, BOB_MUST_FIX, pending,
                     s.history, s.policy, s.seed, s.rng_uses)


def bob_fix(s: GameState, f: int) -> GameState:
    if s.phase != BOB_MUST_FIX or s.pending is None:
        raise WrongPhase(f"cannot fix in phase {s.phase}")
    if f not in s.pending.candidates:
        raise IllegalFix(f"edge {f} is not a legal fix")
    e = s.pending.edge
    cur = s.current
    new_s = cur.S ^ {e, f}
    pair = TreePair(s.g, frozenset(new_s), s.g.edge_ids() - new_s)
    history = s.history + ((e, f),)
    phase = WON if pair.S == s.initial.T else ALICE_TURN
    return GameState(s.g, s.initial, pair, phase, None, history,
                     s.policy, s.seed, s.rng_uses)


def _adversarial_pick(s: GameState) -> int:
    # undo Alice's progress: keep as many edges as possible at their
    # initial color, ties broken by lowest edge id
    e = s.pending.edge
    best, best_score = None, -1
    for f in sorted(s.pending.candidates):
        new_s = s.current.S ^ {e, f}
        score = s.g.m - len(new_s ^ s.initial.S)
        if score > best_score:
            best, best_score = f, score
    return best


def bob_auto(s: GameState) -> tuple[int, GameState]:
    if s.phase != BOB_MUST_FIX or s.pending is None:
        raise WrongPhase(f"cannot auto-fix in phase {s.phase}")
    cands = sorted(s.pending.candidates)
    if len(cands) == 1:
        f = cands[0]
    elif s.policy == "random":
        rng = random.Random(s.seed)
        for _ in range(s.rng_uses):
            rng.random()
        f = rng.choice(cands)
        s = GameState(s.g, s.initial, s.current, s.phase, s.pending,
                      s.history, s.policy, s.seed, s.rng_uses + 1)
    else:
        f = _adversarial_pick(s)
    return f, bob_fix(s, f)


def hint(s: GameState) -> Optional[int]:
    """First flip of a shortest all-forced winning continuation from the
    current pair, if one exists within the remaining swap budget."""
    if s.phase != ALICE_TURN:
        return None
    remaining = s.target_distance // 2
    if remaining == 0:
        return None
    seq = find_uecbo(s.current, target_s=s.target.S, length=remaining)
    if seq is None:
        return None
    return seq.swaps[0][0]


def undo(s: GameState) -> GameState:
    """Pop one half-move (an open flip) or one full round."""
    if s.pending is not None:
        return GameState(s.g, s.initial, s.current, ALICE_TURN, None,
                         s.history, s.policy, s.seed, s.rng_uses)
    if not s.history:
        raise EmptyHistory("nothing to undo")
    e, f = s.history[-1]
    prev_s = s.current.S ^ {e, f}
    pair = TreePair(s.g, frozenset(prev_s), s.g.edge_ids() - prev_s)
    return GameState(s.g, s.initial, pair, ALICE_TURN, None,
                     s.history[:-1], s.policy, s.seed, s.rng_uses)
