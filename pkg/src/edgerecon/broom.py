"""Strong double brooms: spec parsing, construction and edge/vertex roles.

``B(n1,n2,m1Pk1+m2Pk2+...)`` has hubs ``u`` and ``v`` joined by ``m_i``
internally disjoint paths on ``k_i`` vertices, with ``n1`` leaves hung on
``u`` and ``n2`` on ``v``.  Built graphs are labeled hub ``u`` = 0, hub
``v`` = 1, then the leaves of ``u``, the leaves of ``v`` and finally the path
interiors in spec order, each path listed from the ``u`` end.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache

from edgerecon.errors import InputError
from edgerecon.graph import Graph

MIN_VERTICES = 5


class VertexRole(enum.Enum):
    LEAF = "Leaf"
    HUB = "Hub"
    MIDDLE = "Middle"


@dataclass(frozen=True, order=True)
class BroomSpec:
    n1: int
    n2: int
    paths: tuple[tuple[int, int], ...]  # (multiplicity, order), orders strictly increasing

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", tuple((int(m), int(k)) for m, k in self.paths))
        _validate(self)

    @classmethod
    def make(cls, n1: int, n2: int, paths) -> BroomSpec:
        """Normalize (drop zero multiplicities, sort by order) then validate."""
        terms = [(int(m), int(k)) for m, k in paths]
        if any(m < 0 for m, _ in terms):
            raise InputError("negative path multiplicity")
        terms = sorted(((m, k) for m, k in terms if m > 0), key=lambda t: t[1])
        return cls(int(n1), int(n2), tuple(terms))

    @property
    def m(self) -> int:
        return sum(m for m, _ in self.paths)

    @property
    def t(self) -> int:
        return len(self.paths)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.paths)

    @property
    def vertex_count(self) -> int:
        return self.n1 + self.n2 + 2 + sum(m * (k - 2) for m, k in self.paths)

    @property
    def edge_count(self) -> int:
        return self.n1 + self.n2 + sum(m * (k - 1) for m, k in self.paths)

    def swapped(self) -> BroomSpec:
        return BroomSpec(self.n2, self.n1, self.paths)

    def render(self) -> str:
        terms = "+".join(f"{m}P{k}" for m, k in self.paths)
        return f"B({self.n1},{self.n2},{terms})"

    def __str__(self) -> str:
        return self.render()


def _validate(spec: BroomSpec) -> None:
    if spec.n1 < 1 or spec.n2 < 1:
        raise InputError(f"each hub needs at least one leaf, got n1={spec.n1}, n2={spec.n2}")
    if not spec.paths:
        raise InputError("no paths")
    ks = [k for _, k in spec.paths]
    if len(set(ks)) != len(ks):
        raise InputError(f"path order repeated in {ks}; merge the multiplicities")
    if ks != sorted(ks):
        raise InputError(f"path orders must be increasing, got {ks}")
    for m, k in spec.paths:
        if m < 1:
            raise InputError(f"multiplicity {m} for P{k}; zero terms must be normalized away")
        if k < 2:
            raise InputError(f"path order {k} < 2")
    if spec.paths[0][1] == 2 and spec.paths[0][0] > 1:
        raise InputError(
            f"{spec.paths[0][0]}P2 would join the hubs by parallel edges; the graph must be simple"
        )
    if spec.m < 2:
        raise InputError("a strong double broom needs at least two (u,v)-paths")
    if spec.vertex_count < MIN_VERTICES:
        raise InputError(f"{spec.vertex_count} vertices; at least {MIN_VERTICES} required")


_SPEC_RE = re.compile(r"^B\((\d+),(\d+),(\d+P\d+(?:\+\d+P\d+)*)\)$")


def parse_spec(text: str) -> BroomSpec:
    """Parse ``B(<n1>,<n2>,<m>P<k>[+<m>P<k>]*)``; whitespace is ignored."""
    compact = "".join(text.split())
    match = _SPEC_RE.match(compact)
    if not match:
        raise InputError(f"cannot parse broom spec {text!r}")
    n1, n2, body = match.groups()
    terms = [tuple(map(int, term.split("P"))) for term in body.split("+")]
    ks = [k for m, k in terms if m > 0]
    if len(set(ks)) != len(ks):
        raise InputError(f"path order repeated in {text!r}")
    return BroomSpec.make(int(n1), int(n2), terms)


@dataclass(frozen=True)
class _Layout:
    leaves_u: range
    leaves_v: range
    # per path: (order k, interior vertices listed from the u end)
    paths: tuple[tuple[int, tuple[int, ...]], ...]


@lru_cache(maxsize=None)
def _layout(spec: BroomSpec) -> _Layout:
    leaves_u = range(2, 2 + spec.n1)
    leaves_v = range(2 + spec.n1, 2 + spec.n1 + spec.n2)
    nxt = 2 + spec.n1 + spec.n2
    paths = []
    for m, k in spec.paths:
        for _ in range(m):
            paths.append((k, tuple(range(nxt, nxt + k - 2))))
            nxt += k - 2
    return _Layout(leaves_u, leaves_v, tuple(paths))


@lru_cache(maxsize=None)
def build(spec: BroomSpec) -> Graph:
    lay = _layout(spec)
    edges = [(0, x) for x in lay.leaves_u] + [(1, x) for x in lay.leaves_v]
    for _, interior in lay.paths:
        chain = (0, *interior, 1)
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(spec.vertex_count, edges)


def classify_vertex(spec: BroomSpec, v: int) -> VertexRole:
    if not 0 <= v < spec.vertex_count:
        raise InputError(f"vertex {v} out of range for {spec}")
    if v < 2:
        return VertexRole.HUB
    if v < 2 + spec.n1 + spec.n2:
        return VertexRole.LEAF
    return VertexRole.MIDDLE


def classify_edge(spec: BroomSpec, e: tuple[int, int]) -> str:
    """Card label of edge ``e``: ``"L"``, ``"K"`` or ``"M<i>"``.

    ``M<i>`` joins middle vertices at distances ``i-1`` and ``i`` from the
    nearer hub, so ``2 <= i <= k // 2``.
    """
    u, v = sorted(e)
    g = build(spec)
    if not (0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)):
        raise InputError(f"{e} is not an edge of {spec}")
    ru, rv = classify_vertex(spec, u), classify_vertex(spec, v)
    if VertexRole.LEAF in (ru, rv):
        return "L"
    if VertexRole.HUB in (ru, rv):
        return "K"
    for k, interior in _layout(spec).paths:
        if u in interior:
            p = interior.index(u) + 1  # distance of u from hub 0
            return f"M{min(p + 1, k - 1 - p)}"
    raise AssertionError("unreachable: middle edge not on any path")


def edge_labels(spec: BroomSpec) -> dict[tuple[int, int], str]:
    return {e: classify_edge(spec, e) for e in build(spec).sorted_edges()}
