"""Degree-associated edge cards, classified decks and card extensions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from edgerecon.errors import InputError
from edgerecon.graph import CanonicalCode, Graph, add_edge, canonical_form, delete_edge, edge_degree

CardKey = tuple[int, CanonicalCode]


@dataclass(frozen=True, eq=False)
class DaCard:
    """``(d, card)``: a card ``G - e`` tagged with the degree of the deleted edge.

    Two cards are equal when the degrees match and the card graphs are
    isomorphic; the labeled card is kept only as a representative.
    """

    d: int
    card: Graph

    @cached_property
    def key(self) -> CardKey:
        return (self.d, canonical_form(self.card))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DaCard):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: DaCard) -> bool:
        return self.key < other.key

    def qualifying_pairs(self) -> list[tuple[int, int]]:
        """Non-adjacent pairs whose degree sum in the card equals ``d``."""
        g = self.card
        deg = g.degrees()
        return [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if deg[u] + deg[v] == self.d and not g.has_edge(u, v)
        ]

    def to_json(self) -> dict:
        return {"d": self.d, "card": self.card.to_json()}


@dataclass(frozen=True)
class ClassifiedDeck:
    """A multiset of da-ecards stored as ``(representative, multiplicity)`` classes."""

    classes: tuple[tuple[DaCard, int], ...]

    def __post_init__(self) -> None:
        keys = [c.key for c, _ in self.classes]
        if len(set(keys)) != len(keys):
            raise InputError("deck classes must be pairwise distinct")
        if any(m < 1 for _, m in self.classes):
            raise InputError("class multiplicities must be positive")
        object.__setattr__(self, "classes", tuple(sorted(self.classes, key=lambda cm: cm[0].key)))

    @classmethod
    def from_cards(cls, cards: Iterable[DaCard]) -> ClassifiedDeck:
        reps: dict[CardKey, DaCard] = {}
        counts: Counter[CardKey] = Counter()
        for c in cards:
            reps.setdefault(c.key, c)
            counts[c.key] += 1
        return cls(tuple((reps[k], counts[k]) for k in reps))

    @property
    def total(self) -> int:
        return sum(m for _, m in self.classes)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.classes)

    def counts(self) -> dict[CardKey, int]:
        return {c.key: m for c, m in self.classes}

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def sub(self, vector: Iterable[int]) -> ClassifiedDeck:
        """Sub-multiset taking ``vector[j]`` copies of class ``j``."""
        vector = tuple(vector)
        if len(vector) != len(self.classes):
            raise InputError("multiplicity vector length does not match the deck")
        out = []
        for (card, mult), c in zip(self.classes, vector):
            if not 0 <= c <= mult:
                raise InputError(f"multiplicity {c} outside [0, {mult}]")
            if c:
                out.append((card, c))
        return ClassifiedDeck(tuple(out))

    def vector_in(self, deck: ClassifiedDeck) -> tuple[int, ...]:
        """Express this collection as a multiplicity vector over ``deck``'s classes."""
        counts = self.counts()
        vec = tuple(counts.pop(c.key, 0) for c, _ in deck.classes)
        if counts:
            raise InputError("collection has a class that is not in the deck")
        return vec

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "classes": [{"d": c.d, "mult": m, "card": c.card.to_json()} for c, m in self.classes],
        }

    @classmethod
    def from_json(cls, obj: dict) -> ClassifiedDeck:
        try:
            classes = tuple(
                (DaCard(int(c["d"]), Graph.from_json(c["card"])), int(c["mult"]))
                for c in obj["classes"]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed deck JSON: {exc}") from None
        deck = cls(classes)
        if "total" in obj and int(obj["total"]) != deck.total:
            raise InputError("deck JSON total does not match its classes")
        return deck


def da_ecard(g: Graph, e: tuple[int, int]) -> DaCard:
    return DaCard(edge_degree(g, e), delete_edge(g, e))


def da_edeck(g: Graph) -> ClassifiedDeck:
    return ClassifiedDeck.from_cards(da_ecard(g, e) for e in g.sorted_edges())


def extensions(c: DaCard) -> list[Graph]:
    """All graphs obtained by restoring one qualifying edge, one per isomorphism class.

    Returned in canonical-code order, labeled like ``c.card``.
    """
    found: dict[CanonicalCode, Graph] = {}
    for u, v in c.qualifying_pairs():
        h = add_edge(c.card, u, v)
        found.setdefault(canonical_form(h), h)
    return [found[k] for k in sorted(found)]


def deck_contains(deck: ClassifiedDeck, sub: ClassifiedDeck) -> bool:
    have = deck.counts()
    return all(have.get(c.key, 0) >= m for c, m in sub.classes)
