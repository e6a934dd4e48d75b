"""Canonical labeling by partition refinement and backtracking.

The search individualizes one vertex of the first smallest non-singleton cell,
refines to an equitable partition and recurses.  Each discrete leaf gives a
labeling; the canonical one is the leaf whose upper-triangular adjacency
bitstring is lexicographically least.  Branches are pruned when they are images
of an already explored branch under a known automorphism: twin transpositions
are known up front, and further automorphisms are collected whenever two leaves
produce the same bitstring.
"""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from edgerecon.graph import Graph

# length-prefixed (4 bytes, big endian) upper-triangular bitstring, left aligned
CanonicalCode = bytes


def refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until it is equitable.

    Every cell is split by the number of neighbours its vertices have in each
    splitter cell; fragments are inserted in place, ordered by that count.
    """
    n = len(adj)
    while len(cells) < n:
        changed = False
        i = 0
        while i < len(cells) and len(cells) < n:
            w = 0
            for x in cells[i]:
                w |= 1 << x
            out: list[list[int]] = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for x in cell:
                    groups.setdefault((adj[x] & w).bit_count(), []).append(x)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    out.extend(groups[c] for c in sorted(groups))
                    split = True
            if split:
                cells = out
                changed = True
            i += 1
        if not changed:
            break
    return cells


def _twin_keys(adj: tuple[int, ...]) -> list[object]:
    # false twins (same open neighbourhood) and true twins (same closed
    # neighbourhood) never overlap, so one key per vertex suffices
    n = len(adj)
    open_count: dict[int, int] = {}
    for row in adj:
        open_count[row] = open_count.get(row, 0) + 1
    keys: list[object] = []
    for v in range(n):
        if open_count[adj[v]] > 1:
            keys.append(("o", adj[v]))
        else:
            keys.append(("c", adj[v] | 1 << v))
    return keys


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> int:
    n = len(order)
    code = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (row >> order[j] & 1)
    return code


def _encode(n: int, bits: int) -> CanonicalCode:
    length = n * (n - 1) // 2
    nbytes = (length + 7) // 8
    pad = nbytes * 8 - length
    return n.to_bytes(4, "big") + (bits << pad).to_bytes(nbytes, "big")


class _Search:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.twins = _twin_keys(adj)
        self.best_code: int | None = None
        self.best_order: list[int] | None = None
        self.first_code: int | None = None
        self.first_order: list[int] | None = None
        self.autos: list[list[int]] = []

    def _record_auto(self, a: list[int], b: list[int]) -> None:
        perm = [0] * self.n
        for x, y in zip(a, b):
            perm[x] = y
        if any(perm[v] != v for v in range(self.n)):
            self.autos.append(perm)

    def leaf(self, cells: list[list[int]]) -> None:
        order = [c[0] for c in cells]
        code = _leaf_code(self.adj, order)
        if self.first_code is None:
            self.first_code, self.first_order = code, order
        elif code == self.first_code:
            self._record_auto(self.first_order, order)
            return
        if self.best_code is None or code < self.best_code:
            self.best_code, self.best_order = code, order
        elif code == self.best_code:
            self._record_auto(self.best_order, order)

    def _pruned(self, v: int, tried: list[int], fixed: list[int]) -> bool:
        gens = [p for p in self.autos if all(p[x] == x for x in fixed)]
        if not gens:
            return False
        targets = set(tried)
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for p in gens:
                y = p[x]
                if y in targets:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def search(self, cells: list[list[int]], fixed: list[int]) -> None:
        if len(cells) == self.n:
            self.leaf(cells)
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
        target = cells[idx]
        tried: list[int] = []
        tried_twins: set[object] = set()
        for v in target:
            if self.twins[v] in tried_twins:
                continue
            if tried and self._pruned(v, tried, fixed):
                continue
            tried_twins.add(self.twins[v])
            tried.append(v)
            rest = [x for x in target if x != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1 :]
            self.search(refine(self.adj, child), fixed + [v])


def _labeling(adj: tuple[int, ...]) -> tuple[int, list[int]]:
    n = len(adj)
    if n == 0:
        return 0, []
    s = _Search(adj)
    s.search(refine(adj, [list(range(n))]), [])
    return s.best_code, s.best_order


@lru_cache(maxsize=1 << 18)
def canonical_labeling(g: Graph) -> tuple[CanonicalCode, tuple[int, ...]]:
    """Return ``(code, order)`` where ``order[i]`` is the vertex labeled ``i``."""
    bits, order = _labeling(g.adj)
    return _encode(g.n, bits), tuple(order)


def canonical_form(g: Graph) -> CanonicalCode:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of ``g``'s isomorphism class."""
    from edgerecon.graph import Graph as _G

    _, order = canonical_labeling(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return _G(g.n, frozenset((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)
