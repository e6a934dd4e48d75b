"""Exhaustive computation of dern and adern.

A collection ``S`` of da-ecards is handled as a multiplicity vector over the
classes of ``G``'s da-edeck; whether ``S`` determines ``G`` depends only on that
vector.  Any graph ``H`` whose deck contains ``S`` has a card equal to each
class in ``S`` and is therefore an extension of each of them, so the candidates
are the extensions of a single class of ``S``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from edgerecon.deck import CardKey, ClassifiedDeck, da_edeck, deck_contains, extensions
from edgerecon.errors import Inconclusive, InputError, NotReconstructible
from edgerecon.graph import Graph, canonical_form, delete_edge

DEFAULT_MAX_VECTORS = 2_000_000

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    determines: bool
    witness: Graph | None = None


class Engine:
    """Per-graph search state: class extensions, candidate profiles and verdicts.

    ``base`` selects the class whose extensions are scanned: ``"min"`` takes
    the class with the fewest extensions, ``"max"`` the most (used only to
    cross-check that verdicts do not depend on the choice).
    """

    def __init__(self, g: Graph, budget: float | None = None, base: str = "min"):
        if base not in ("min", "max"):
            raise InputError(f"unknown base policy {base!r}")
        self.g = g
        self.code = canonical_form(g)
        self.deck = da_edeck(g)
        self.keys: list[CardKey] = [c.key for c, _ in self.deck]
        self.index = {k: i for i, k in enumerate(self.keys)}
        self.mults: Vector = self.deck.multiplicities
        self.base = base
        self.deadline = None if budget is None else time.monotonic() + budget
        # cheap prefilter before canonicalizing a candidate's card
        self._sigs = {(c.d, c.card.degree_sequence()) for c, _ in self.deck}
        self._ext: dict[int, list[Graph]] = {}
        self._profiles: dict[bytes, Vector] = {}
        self._memo: dict[Vector, Verdict] = {}

    def check_time(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise Inconclusive("wall-clock budget exhausted")

    def candidates(self, j: int) -> list[Graph]:
        """Extensions of class ``j`` that are not isomorphic to ``G``."""
        if j not in self._ext:
            card = self.deck.classes[j][0]
            self._ext[j] = [h for h in extensions(card) if canonical_form(h) != self.code]
            self.check_time()
        return self._ext[j]

    def profile(self, h: Graph) -> Vector:
        """How many of ``h``'s da-ecards fall in each class of ``G``'s deck."""
        code = canonical_form(h)
        if code not in self._profiles:
            counts = [0] * len(self.keys)
            deg = h.degrees()
            for u, v in h.sorted_edges():
                d = deg[u] + deg[v] - 2
                card = delete_edge(h, (u, v))
                if (d, card.degree_sequence()) not in self._sigs:
                    continue
                j = self.index.get((d, canonical_form(card)))
                if j is not None:
                    counts[j] += 1
            self._profiles[code] = tuple(counts)
        return self._profiles[code]

    def _base_class(self, vec: Vector) -> int:
        present = [j for j, c in enumerate(vec) if c]
        size = {j: len(self.candidates(j)) for j in present}
        if self.base == "min":
            return min(present, key=lambda j: (size[j], j))
        return max(present, key=lambda j: (size[j], -j))

    def verdict(self, vec: Vector) -> Verdict:
        if vec not in self._memo:
            if not any(vec):
                raise InputError("the empty collection never determines a graph")
            if any(not 0 <= c <= m for c, m in zip(vec, self.mults)):
                raise InputError("collection is not contained in the da-edeck")
            result = Verdict(True)
            for h in self.candidates(self._base_class(vec)):
                self.check_time()
                prof = self.profile(h)
                if all(p >= c for p, c in zip(prof, vec)):
                    result = Verdict(False, h)
                    break
            self._memo[vec] = result
        return self._memo[vec]

    def vectors_of_size(self, s: int) -> Iterator[Vector]:
        """Sub-multiset vectors with ``sum == s`` in lexicographic order."""

        def rec(j: int, left: int) -> Iterator[Vector]:
            if j == len(self.mults):
                if left == 0:
                    yield ()
                return
            rest = sum(self.mults[j + 1 :])
            for c in range(max(0, left - rest), min(self.mults[j], left) + 1):
                for tail in rec(j + 1, left - c):
                    yield (c, *tail)

        return rec(0, s)

    def guard(self, max_vectors: int) -> None:
        space = math.prod(m + 1 for m in self.mults)
        if space > max_vectors:
            raise Inconclusive(f"{space} sub-multisets exceed the configured cap {max_vectors}")

    def require_reconstructible(self) -> None:
        full = self.verdict(self.mults)
        if not full.determines:
            raise NotReconstructible(
                f"not da-edeck reconstructible: {full.witness} shares the whole da-edeck"
            )

    def dern(self, max_vectors: int = DEFAULT_MAX_VECTORS) -> tuple[int, Vector]:
        self.guard(max_vectors)
        self.require_reconstructible()
        for s in range(1, sum(self.mults) + 1):
            for vec in self.vectors_of_size(s):
                if self.verdict(vec).determines:
                    return s, vec
        raise AssertionError("unreachable: the full deck determines G")

    def adern(self, max_vectors: int = DEFAULT_MAX_VECTORS) -> tuple[int, Vector]:
        """Return ``(adern, largest bad vector)``; the empty vector is bad by convention.

        Among bad vectors of the largest size the one spreading over the most
        classes is reported, ties going to the lexicographically first.
        """
        self.guard(max_vectors)
        self.require_reconstructible()
        for s in range(sum(self.mults) - 1, 0, -1):
            bad = self.bad_vectors(s)
            if bad:
                return s + 1, max(bad, key=lambda v: sum(1 for c in v if c))
        return 1, (0,) * len(self.mults)

    def bad_vectors(self, s: int) -> list[Vector]:
        """All size-``s`` vectors that some other graph's deck contains."""
        return [vec for vec in self.vectors_of_size(s) if not self.verdict(vec).determines]


@lru_cache(maxsize=64)
def _engine(g: Graph) -> Engine:
    return Engine(g)


def _vector(S: ClassifiedDeck, eng: Engine) -> Vector:
    if not S.classes:
        raise InputError("the empty collection never determines a graph")
    if not deck_contains(eng.deck, S):
        raise InputError("collection is not contained in the da-edeck of G")
    return S.vector_in(eng.deck)


def determines(S: ClassifiedDeck, G: Graph) -> Verdict:
    eng = _engine(G)
    return eng.verdict(_vector(S, eng))


def counterexample(S: ClassifiedDeck, G: Graph) -> Graph | None:
    return determines(S, G).witness


def dern_brute(G: Graph, budget: float | None = None) -> tuple[int, ClassifiedDeck]:
    if not G.edges:
        raise InputError("dern needs a graph with at least one edge")
    eng = _engine(G) if budget is None else Engine(G, budget)
    value, vec = eng.dern()
    return value, eng.deck.sub(vec)


def adern_brute(G: Graph, budget: float | None = None) -> tuple[int, ClassifiedDeck]:
    if not G.edges:
        raise InputError("adern needs a graph with at least one edge")
    eng = _engine(G) if budget is None else Engine(G, budget)
    value, vec = eng.adern()
    return value, eng.deck.sub(vec)


@dataclass
class ReconReport:
    spec: str
    dern: int | None = None
    adern: int | None = None
    bad_max: ClassifiedDeck | None = None
    dern_set: ClassifiedDeck | None = None
    elapsed: float = 0.0
    method: str = "brute"
    status: str = "ok"
    formula: dict = field(default_factory=dict)
    agree: bool | None = None
    note: str = ""

    def to_json(self, timing: bool = True) -> dict:
        def deck(d: ClassifiedDeck | None):
            return None if d is None else d.to_json()

        return {
            "spec": self.spec,
            "method": self.method,
            "status": self.status,
            "dern": self.dern,
            "adern": self.adern,
            "bad_max": deck(self.bad_max),
            "dern_set": deck(self.dern_set),
            "formula": self.formula,
            "agree": self.agree,
            "note": self.note,
            "elapsed": round(self.elapsed, 6) if timing else 0.0,
        }
