"""Immutable simple graphs on a dense vertex set ``0..n-1``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from edgerecon.errors import InputError

MAX_VERTICES = 1 << 16

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Labeled simple undirected graph.

    Vertices are ``range(n)``; isolated vertices are part of the graph, so
    deleting an edge never shrinks the vertex set.  Equality is labeled
    equality; use :func:`is_isomorphic` for the unlabeled notion.
    """

    n: int
    edges: frozenset[Edge]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise InputError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        adj = [0] * self.n
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InputError(f"edge ({u}, {v}) is not a normalized pair below {self.n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at {u}")
            e = _norm(u, v)
            if e in seen:
                raise InputError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def size(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> list[int]:
        row = self.adj[v]
        return [u for u in range(self.n) if row >> u & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adj[u] >> v & 1)

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees()))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InputError("relabeling is not a permutation of the vertex set")
        return Graph(self.n, frozenset(_norm(perm[u], perm[v]) for u, v in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, obj: dict) -> Graph:
        try:
            n = int(obj["n"])
            edges = [(int(u), int(v)) for u, v in obj["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed graph JSON: {exc}") from None
        return cls.from_edges(n, edges)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range for graph on {g.n} vertices")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adj[v].bit_count()


def _check_edge(g: Graph, e: tuple[int, int]) -> Edge:
    u, v = e
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge")
    return _norm(u, v)


def edge_degree(g: Graph, e: tuple[int, int]) -> int:
    """Number of edges sharing an endpoint with ``e``."""
    u, v = _check_edge(g, e)
    return g.adj[u].bit_count() + g.adj[v].bit_count() - 2


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    e = _check_edge(g, e)
    return Graph(g.n, g.edges - {e})


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise InputError(f"self-loop at {u}")
    if g.has_edge(u, v):
        raise InputError(f"({u}, {v}) already adjacent")
    return Graph(g.n, g.edges | {_norm(u, v)})


# re-exported here so that graph_core is importable from one place
from edgerecon.canon import CanonicalCode, canonical_form, canonical_labeling, is_isomorphic  # noqa: E402

__all__ = [
    "CanonicalCode",
    "Edge",
    "Graph",
    "add_edge",
    "canonical_form",
    "canonical_labeling",
    "degree",
    "delete_edge",
    "edge_degree",
    "is_isomorphic",
]
