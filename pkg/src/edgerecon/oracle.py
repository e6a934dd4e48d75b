"""Slow independent checks used to validate the fast paths.

Nothing here touches canonical labeling, so these functions can serve as
ground truth for it.
"""

from __future__ import annotations

import itertools
import random

from edgerecon.errors import InputError
from edgerecon.graph import Graph

PERMUTATION_LIMIT = 8


def isomorphic_by_permutations(g: Graph, h: Graph) -> bool:
    """Try every bijection; only for graphs on at most 8 vertices."""
    if g.n != h.n:
        return False
    if g.n > PERMUTATION_LIMIT:
        raise InputError(f"all-permutations oracle limited to {PERMUTATION_LIMIT} vertices")
    if len(g.edges) != len(h.edges):
        return False
    target = h.edges
    for perm in itertools.permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in target for u, v in g.edges):
            return True
    return False


def isomorphic_by_backtracking(g: Graph, h: Graph) -> bool:
    """Exhaustive search over bijections, abandoning a partial map as soon as
    it breaks adjacency or degree."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return False
    order = sorted(range(g.n), key=lambda v: -dg[v])
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in range(h.n):
            if w in used or dh[w] != dg[v]:
                continue
            if all(g.has_edge(v, x) == h.has_edge(w, y) for x, y in mapping.items()):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def edge_switch(rng: random.Random, g: Graph) -> Graph:
    """Degree-preserving double edge swap (ab, cd -> ac, bd) when one exists.

    Produces look-alike graphs with the same degree sequence that are often,
    but not always, non-isomorphic to ``g``.
    """
    edges = g.sorted_edges()
    for _ in range(20):
        if len(edges) < 2:
            break
        (a, b), (c, d) = rng.sample(edges, 2)
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4 or g.has_edge(a, c) or g.has_edge(b, d):
            continue
        new = (g.edges - {(min(a, b), max(a, b)), (min(c, d), max(c, d))}) | {
            (min(a, c), max(a, c)),
            (min(b, d), max(b, d)),
        }
        return Graph(g.n, frozenset(new))
    return g
