"""Constructive closure enumeration against frozen reference counts."""

import pytest

from bispan.bispanning import find_two_trees, is_atomic
from bispan.core import canonical_code
from bispan.enumeration import count_bispanning, enumerate_bispanning
from bispan.errors import InvalidInput, TooLarge


@pytest.mark.parametrize("n,want", [(1, 1), (2, 1), (3, 2), (4, 9), (5, 46)])
def test_general_counts(n, want):
    assert count_bispanning(n, "general") == want


@pytest.mark.parametrize("n,want", [(4, 1), (5, 2), (6, 12)])
def test_simple_counts(n, want):
    assert count_bispanning(n, "simple") == want


@pytest.mark.parametrize("n,want", [(5, 1), (6, 4), (7, 15)])
def test_atomic_counts(n, want):
    assert count_bispanning(n, "atomic") == want


def test_every_output_is_bispanning():
    for g in enumerate_bispanning(5, "general"):
        assert g.m == 2 * g.n - 2
        assert find_two_trees(g) is not None


def test_outputs_pairwise_non_isomorphic():
    codes = [canonical_code(g) for g in enumerate_bispanning(5, "general")]
    assert len(codes) == len(set(codes))


def test_atomic_outputs_are_simple_and_atomic():
    for g in enumerate_bispanning(6, "atomic"):
        assert g.is_simple() and is_atomic(g)


def test_smallest_triangle_free_has_seven_vertices():
    def triangle_free(g):
        adj = [set() for _ in range(g.n)]
        for _, u, v in g.edges:
            adj[u].add(v)
            adj[v].add(u)
        return not any(
            adj[u] & adj[v] for _, u, v in g.edges
        )

    assert not any(triangle_free(g)
                   for n in (4, 5, 6)
                   for g in enumerate_bispanning(n, "simple"))
    assert any(triangle_free(g) for g in enumerate_bispanning(7, "simple"))


def test_argument_validation():
    with pytest.raises(InvalidInput):
        enumerate_bispanning(4, "weird")
    with pytest.raises(TooLarge):
        enumerate_bispanning(9, "atomic")
