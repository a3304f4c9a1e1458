"""Edge recoloring game mechanics."""

import pytest

from bispan.catalog import named_graph
from bispan.errors import (
    EmptyHistory,
    IllegalFix,
    InvalidInput,
    UnknownEdge,
    WrongPhase,
)
from bispan.game import (
    ALICE_TURN,
    BOB_MUST_FIX,
    WON,
    alice_flip,
    bob_auto,
    bob_fix,
    hint,
    new_game,
    undo,
)


W5_REPLAY = ((0, 7), (1, 3), (2, 4), (6, 5))


def fresh(name="W5", **kw):
    g, tp = named_graph(name)
    return new_game(g, tp, **kw)


def test_new_game_validation(w5):
    g, tp = w5
    with pytest.raises(InvalidInput):
        new_game(g, tp, policy="cruel")
    s = new_game(g, tp)
    assert s.phase == ALICE_TURN and not s.won
    assert s.target.S == tp.T
    assert s.target_distance == g.m


def test_flip_opens_cut_and_cycle():
    s = fresh()
    s2 = alice_flip(s, 0)
    assert s2.phase == BOB_MUST_FIX
    p = s2.pending
    assert p.edge == 0
    assert p.candidates == (p.cut & p.cycle) - {0}
    assert 0 in p.cut and 0 in p.cycle
    with pytest.raises(WrongPhase):
        alice_flip(s2, 1)
    with pytest.raises(UnknownEdge):
        alice_flip(s, 99)


def test_fix_swaps_colors():
    s = alice_flip(fresh(), 0)
    f = min(s.pending.candidates)
    s2 = bob_fix(s, f)
    assert s2.phase == ALICE_TURN
    assert s2.current.S == s.current.S ^ {0, f}
    assert s2.history == ((0, f),)
    bad = next(iter(s.g.edge_ids() - s.pending.candidates - {0}))
    with pytest.raises(IllegalFix):
        bob_fix(s, bad)
    with pytest.raises(WrongPhase):
        bob_fix(s2, f)


def test_replay_wins_in_four_rounds():
    s = fresh()
    for e, f in W5_REPLAY:
        s = alice_flip(s, e)
        assert s.pending.forced
        assert s.pending.candidates == {f}
        f_got, s = bob_auto(s)
        assert f_got == f
    assert s.won and s.phase == WON
    assert s.moves == 4 and s.target_distance == 0


def test_forced_sequence_immune_to_policy():
    for policy in ("adversarial", "random", "manual"):
        s = fresh(policy=policy, seed=7)
        for e, _ in W5_REPLAY:
            _, s = bob_auto(alice_flip(s, e))
        assert s.won


def test_adversarial_bob_resists():
    # a non-forced flip: adversarial Bob restores the initial color count
    s = fresh()
    s1 = alice_flip(s, 3)
    assert not s1.pending.forced
    f, s2 = bob_auto(s1)
    back = s2.g.m - len(s2.current.S ^ s.initial.S)
    for other in s1.pending.candidates:
        alt = bob_fix(s1, other)
        assert s2.g.m - len(alt.current.S ^ s.initial.S) <= back


def test_random_bob_is_reproducible():
    def run(seed):
        s = fresh(policy="random", seed=seed)
        picks = []
        for _ in range(3):
            e = min(s.current.S)
            f, s = bob_auto(alice_flip(s, e))
            picks.append(f)
            if s.won:
                break
        return picks

    assert run(5) == run(5)


def test_following_hints_wins():
    s = fresh()
    for _ in range(4):
        e = hint(s)
        assert e is not None
        s1 = alice_flip(s, e)
        assert s1.pending.forced
        _, s = bob_auto(s1)
    assert s.won
    assert hint(s) is None
    assert hint(alice_flip(fresh(), 0)) is None


def test_undo():
    s = fresh()
    with pytest.raises(EmptyHistory):
        undo(s)
    s1 = alice_flip(s, 0)
    assert undo(s1).current.S == s.current.S
    assert undo(s1).phase == ALICE_TURN
    _, s2 = bob_auto(s1)
    s3 = undo(s2)
    assert s3.current.S == s.current.S and s3.history == ()
