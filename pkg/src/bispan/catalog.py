"""Built-in catalog of named bispanning graphs with stored tree pairs.

Each entry records an edge list with a blue/red coloring that splits the
edges into the two stored spanning trees. Edge ids are the zero-based
positions in the listed order.
"""

from __future__ import annotations

from .bispanning import TreePair, pair_from_coloring, BLUE, RED
from .core import MultiGraph
from .errors import UnknownName

# (n, 1-based?, [(u, v, 'b'|'r'), ...])
_RAW: dict[str, tuple[int, bool, list[tuple[int, int, str]]]] = {
    "B2": (2, True, [(1, 2, "b"), (1, 2, "r")]),
    "B3_1": (3, True, [(1, 2, "b"), (1, 2, "r"), (2, 3, "b"), (2, 3, "r")]),
    "B3_2": (3, True, [(1, 3, "b"), (1, 3, "r"), (1, 2, "b"), (2, 3, "r")]),
    "K4": (4, True, [
        (1, 2, "r"), (1, 3, "b"), (2, 3, "b"),
        (1, 4, "b"), (2, 4, "r"), (3, 4, "r"),
    ]),
    "B4_2": (4, True, [(1, 3, "b"), (1, 3, "r"), (1, 4, "b"), (1, 2, "r"),
                       (3, 4, "r"), (2, 4, "b")]),
    "B4_3": (4, True, [(1, 3, "b"), (1, 3, "r"), (2, 1, "b"), (2, 3, "r"),
                       (4, 1, "b"), (4, 3, "r")]),
    "B4_4": (4, True, [(1, 3, "b"), (1, 3, "r"), (3, 4, "b"), (3, 4, "r"),
                       (1, 2, "b"), (2, 4, "r")]),
    "B4_5": (4, True, [(1, 2, "b"), (1, 2, "r"), (3, 4, "b"), (3, 4, "r"),
                       (1, 3, "b"), (2, 4, "r")]),
    "B4_6": (4, True, [(1, 3, "b"), (1, 3, "r"), (3, 4, "b"), (3, 4, "r"),
                       (1, 2, "b"), (3, 2, "r")]),
    "B4_7": (4, True, [(1, 3, "b"), (1, 3, "r"), (2, 4, "b"), (2, 4, "r"),
                       (3, 4, "b"), (1, 4, "r")]),
    "B4_8": (4, True, [(1, 3, "b"), (1, 3, "r"), (4, 3, "b"), (4, 3, "r"),
                       (2, 4, "b"), (2, 4, "r")]),
    "B4_9": (4, True, [(1, 4, "b"), (1, 4, "r"), (2, 4, "b"), (2, 4, "r"),
                       (3, 4, "b"), (3, 4, "r")]),
    # four-spoke wheel: hub 0, rim 1..4; spokes and rim alternate trees
    "W5": (5, False, [
        (0, 1, "r"), (1, 2, "b"), (0, 2, "r"), (2, 3, "r"),
        (0, 3, "b"), (3, 4, "r"), (0, 4, "b"), (4, 1, "b"),
    ]),
    "B5_2": (5, True, [(1, 2, "b"), (1, 3, "r"), (1, 4, "r"), (2, 5, "r"),
                       (2, 3, "b"), (2, 4, "r"), (3, 4, "b"), (3, 5, "b")]),
    "B6_1": (6, True, [(1, 2, "r"), (1, 3, "b"), (1, 4, "b"), (2, 3, "b"),
                       (2, 4, "r"), (3, 4, "r"), (3, 5, "b"), (3, 6, "b"),
                       (4, 6, "r"), (5, 6, "r")]),
    "B6_2": (6, True, [(1, 2, "r"), (1, 3, "b"), (1, 4, "b"), (2, 3, "b"),
                       (2, 4, "r"), (3, 4, "r"), (3, 5, "b"), (3, 6, "b"),
                       (4, 6, "r"), (4, 5, "r")]),
    "B6_3": (6, True, [(1, 2, "r"), (1, 3, "b"), (1, 4, "b"), (2, 3, "b"),
                       (2, 4, "r"), (5, 6, "r"), (3, 5, "r"), (3, 6, "b"),
                       (4, 6, "r"), (4, 5, "b")]),
    "B6_4": (6, True, [(1, 2, "r"), (1, 3, "b"), (1, 4, "b"), (2, 3, "b"),
                       (2, 4, "r"), (3, 4, "r"), (3, 5, "b"), (1, 6, "b"),
                       (2, 6, "r"), (4, 5, "r")]),
    "B6_5": (6, True, [(1, 2, "r"), (1, 3, "b"), (1, 4, "b"), (2, 3, "b"),
                       (2, 4, "r"), (3, 4, "r"), (3, 5, "b"), (1, 6, "b"),
                       (4, 6, "r"), (4, 5, "r")]),
    "B6_6": (6, True, [(1, 2, "r"), (1, 3, "b"), (1, 4, "b"), (2, 3, "b"),
                       (2, 4, "r"), (3, 4, "r"), (3, 5, "b"), (1, 6, "b"),
                       (5, 6, "r"), (4, 5, "r")]),
    "B6_7": (6, True, [(1, 2, "r"), (2, 3, "b"), (1, 3, "r"), (3, 4, "b"),
                       (1, 4, "r"), (4, 5, "r"), (1, 5, "b"), (5, 2, "b"),
                       (3, 6, "r"), (4, 6, "b")]),
    "B6_8": (6, True, [(1, 2, "r"), (2, 3, "b"), (1, 3, "r"), (3, 4, "b"),
                       (1, 4, "r"), (4, 5, "r"), (1, 5, "b"), (5, 2, "b"),
                       (3, 6, "r"), (1, 6, "b")]),
    "B6_9": (6, True, [(1, 2, "r"), (2, 3, "b"), (1, 3, "r"), (3, 4, "b"),
                       (1, 4, "r"), (4, 5, "r"), (1, 5, "b"), (5, 2, "b"),
                       (2, 6, "r"), (4, 6, "b")]),
    "B6_10": (6, True, [(1, 2, "r"), (2, 3, "b"), (1, 3, "r"), (3, 6, "b"),
                        (1, 4, "r"), (4, 5, "r"), (1, 5, "b"), (5, 2, "b"),
                        (2, 6, "r"), (4, 6, "b")]),
    "W6": (6, True, [(1, 2, "r"), (2, 3, "b"), (1, 3, "r"), (3, 4, "b"),
                     (1, 4, "r"), (4, 5, "r"), (1, 5, "b"), (2, 6, "b"),
                     (1, 6, "r"), (5, 6, "b")]),
    "B6_12": (6, False, [(0, 3, "r"), (1, 3, "b"), (2, 3, "b"), (0, 4, "b"),
                         (1, 4, "r"), (2, 4, "r"), (0, 5, "b"), (1, 5, "r"),
                         (2, 5, "b"), (3, 5, "r")]),
    "B7_1": (7, False, [
        (0, 3, "b"), (0, 4, "b"), (1, 4, "b"), (5, 2, "b"), (6, 2, "b"),
        (6, 3, "b"), (0, 2, "r"), (1, 2, "r"), (1, 3, "r"), (5, 3, "r"),
        (5, 4, "r"), (6, 4, "r"),
    ]),
    "B8_1": (8, False, [
        (0, 4, "b"), (1, 4, "r"), (2, 4, "b"), (0, 5, "b"), (1, 5, "r"),
        (3, 5, "r"), (0, 6, "r"), (1, 6, "b"), (2, 6, "r"), (3, 6, "b"),
        (0, 7, "r"), (1, 7, "b"), (2, 7, "b"), (3, 7, "r"),
    ]),
    "B9_1": (9, False, [
        (0, 4, "b"), (1, 4, "b"), (0, 5, "r"), (2, 5, "r"), (3, 5, "b"),
        (0, 6, "r"), (2, 6, "b"), (3, 6, "r"), (1, 7, "b"), (2, 7, "b"),
        (3, 7, "r"), (4, 7, "r"), (0, 8, "b"), (1, 8, "r"), (2, 8, "r"),
        (3, 8, "b"),
    ]),
    "B9_2": (9, False, [
        (0, 1, "b"), (0, 4, "r"), (0, 3, "r"), (1, 2, "r"), (1, 3, "r"),
        (1, 5, "b"), (2, 4, "b"), (2, 5, "b"), (3, 6, "b"), (3, 7, "b"),
        (4, 6, "b"), (4, 8, "r"), (5, 7, "r"), (5, 8, "r"), (6, 7, "r"),
        (7, 8, "b"),
    ]),
    "B10_1": (10, False, [
        (0, 4, "b"), (1, 4, "r"), (0, 5, "r"), (2, 5, "b"), (2, 6, "r"),
        (3, 6, "b"), (4, 6, "r"), (1, 7, "b"), (3, 7, "r"), (5, 7, "b"),
        (0, 8, "b"), (1, 8, "r"), (2, 8, "b"), (3, 8, "r"), (0, 9, "r"),
        (1, 9, "b"), (2, 9, "r"), (3, 9, "b"),
    ]),
    "B10_2": (10, False, [
        (0, 4, "r"), (1, 4, "b"), (2, 5, "r"), (3, 5, "b"), (2, 6, "b"),
        (3, 6, "r"), (4, 6, "b"), (0, 7, "b"), (1, 7, "r"), (5, 7, "r"),
        (0, 8, "b"), (1, 8, "b"), (2, 8, "r"), (3, 8, "r"), (0, 9, "r"),
        (1, 9, "r"), (2, 9, "b"), (3, 9, "b"),
    ]),
    "B11_1": (11, False, [
        (0, 5, "b"), (1, 5, "r"), (0, 6, "r"), (2, 6, "r"), (3, 6, "b"),
        (1, 7, "b"), (2, 7, "b"), (4, 7, "r"), (2, 8, "r"), (3, 8, "b"),
        (4, 8, "b"), (5, 8, "r"), (0, 9, "r"), (1, 9, "b"), (3, 9, "r"),
        (4, 9, "b"), (2, 10, "b"), (3, 10, "r"), (4, 10, "r"), (5, 10, "b"),
    ]),
    "B11_2": (11, False, [
        (0, 4, "b"), (1, 5, "r"), (0, 6, "r"), (2, 6, "b"), (4, 6, "r"),
        (1, 7, "b"), (3, 7, "r"), (5, 7, "b"), (0, 8, "r"), (1, 8, "b"),
        (2, 8, "b"), (3, 8, "r"), (2, 9, "r"), (3, 9, "b"), (4, 9, "r"),
        (5, 9, "b"), (0, 10, "b"), (1, 10, "r"), (2, 10, "r"), (3, 10, "b"),
    ]),
    "B12_1": (12, False, [
        (0, 5, "b"), (1, 5, "r"), (0, 6, "r"), (2, 6, "b"), (1, 7, "b"),
        (3, 7, "r"), (1, 8, "b"), (2, 8, "r"), (4, 8, "b"), (6, 8, "r"),
        (0, 9, "r"), (3, 9, "b"), (4, 9, "r"), (7, 9, "b"), (2, 10, "b"),
        (3, 10, "b"), (4, 10, "r"), (5, 10, "r"), (2, 11, "r"), (3, 11, "r"),
        (4, 11, "b"), (5, 11, "b"),
    ]),
    "B12_2": (12, False, [
        (0, 5, "b"), (1, 5, "r"), (0, 6, "b"), (2, 6, "b"), (1, 7, "r"),
        (2, 7, "r"), (2, 8, "b"), (3, 8, "b"), (4, 8, "r"), (5, 8, "r"),
        (1, 9, "b"), (3, 9, "b"), (4, 9, "r"), (6, 9, "r"), (0, 10, "r"),
        (3, 10, "r"), (4, 10, "b"), (7, 10, "b"), (2, 11, "r"), (3, 11, "r"),
        (4, 11, "b"), (5, 11, "b"),
    ]),
    "B12_3": (12, False, [
        (0, 4, "r"), (1, 5, "b"), (0, 6, "b"), (2, 6, "r"), (1, 7, "r"),
        (3, 7, "b"), (2, 8, "b"), (3, 8, "r"), (4, 8, "r"), (5, 8, "b"),
        (0, 9, "b"), (1, 9, "r"), (4, 9, "b"), (5, 9, "r"), (2, 10, "b"),
        (3, 10, "r"), (6, 10, "b"), (7, 10, "r"), (2, 11, "r"), (3, 11, "b"),
        (4, 11, "b"), (5, 11, "r"),
    ]),
    "B12_4": (12, False, [
        (0, 5, "b"), (1, 5, "r"), (2, 6, "b"), (3, 6, "r"), (0, 7, "r"),
        (4, 7, "b"), (5, 7, "r"), (1, 8, "b"), (2, 8, "r"), (6, 8, "b"),
        (0, 9, "b"), (1, 9, "r"), (3, 9, "b"), (4, 9, "r"), (1, 10, "b"),
        (2, 10, "r"), (3, 10, "b"), (4, 10, "r"), (0, 11, "r"), (2, 11, "b"),
        (3, 11, "r"), (4, 11, "b"),
    ]),
    "B18_1": (18, False, [
        (0, 6, "b"), (1, 7, "b"), (2, 8, "b"), (3, 9, "b"), (4, 9, "b"),
        (3, 10, "b"), (5, 10, "b"), (0, 11, "b"), (4, 11, "b"), (5, 11, "r"),
        (0, 12, "r"), (1, 12, "b"), (2, 12, "b"), (9, 12, "r"), (5, 13, "b"),
        (6, 13, "r"), (7, 13, "r"), (9, 13, "r"), (0, 14, "b"), (7, 14, "r"),
        (8, 14, "r"), (10, 14, "r"), (2, 15, "r"), (4, 15, "r"), (6, 15, "r"),
        (10, 15, "b"), (1, 16, "r"), (3, 16, "r"), (6, 16, "r"), (8, 16, "b"),
        (2, 17, "r"), (3, 17, "b"), (7, 17, "b"), (11, 17, "r"),
    ]),
}

ALIASES = {"B4_1": "K4", "B5_1": "W5", "B6_11": "W6"}


def catalog_names() -> list[str]:
    return sorted(_RAW, key=lambda s: (len(s), s))


def _normalize(name: str) -> str:
    key = name.strip().replace(",", "_").replace("-", "_").upper()
    return ALIASES.get(key, key)


def named_graph(name: str) -> tuple[MultiGraph, TreePair]:
    """Look up a catalog graph by name (e.g. "K4", "W5", "B7_1"; a comma
    may stand in for the underscore). Returns the graph together with its
    stored tree pair."""
    key = _normalize(name)
    if key not in _RAW:
        raise UnknownName(f"no catalog graph named {name!r}")
    n, one_based, rows = _RAW[key]
    off = 1 if one_based else 0
    g = MultiGraph(n, [(i, u - off, v - off) for i, (u, v, _) in enumerate(rows)])
    coloring = {i: BLUE if c == "b" else RED for i, (_, _, c) in enumerate(rows)}
    return g, pair_from_coloring(g, coloring)


# reference values of the difficulty number, evaluated at specific tree
# pairs; two entries are known data errata (see package tests)
CATALOG_NU = {
    "K4": 8, "W5": 24, "B6_12": 8, "B7_1": 84, "B8_1": 178, "B9_1": 284,
    "B9_2": 288, "B10_1": 122, "B10_2": 124, "B11_1": 224, "B11_2": 496,
    "B12_1": 24, "B12_2": 80, "B12_3": 160, "B12_4": 168,
}

# tree pairs (S edge ids) at which the reference values are evaluated;
# defaults to the stored pair except where the catalog stores a
# different, game-oriented coloring
NU_PAIRS: dict[str, tuple[int, ...]] = {"W5": (1, 3, 6, 7)}


def nu_reference_pair(name: str) -> tuple[int, ...]:
    key = _normalize(name)
    if key in NU_PAIRS:
        return NU_PAIRS[key]
    _, tp = named_graph(key)
    return tuple(sorted(tp.S))
