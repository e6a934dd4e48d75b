"""Text renderings of decks and witnesses: DOT, CSV, graph6, collection descriptors."""

from __future__ import annotations

import csv
import io

from edgerecon.broom import BroomSpec, build, edge_labels
from edgerecon.deck import ClassifiedDeck, DaCard, da_ecard, da_edeck
from edgerecon.errors import InputError
from edgerecon.graph import Graph, canonical_labeling
from edgerecon.graph6 import to_graph6

DECK_CSV_COLUMNS = ("class", "label", "d", "mult", "n", "edges", "graph6")


def class_names(spec: BroomSpec) -> list[str]:
    """One name per class of the broom's deck, in deck order.

    A class is named by the card labels of its edges (``L``, ``K``, ``M2`` ...);
    names that would collide get a ``#i`` suffix counting from 1.
    """
    g = build(spec)
    deck = da_edeck(g)
    labels: list[set[str]] = [set() for _ in deck.classes]
    index = {c.key: j for j, (c, _) in enumerate(deck.classes)}
    for e, lab in edge_labels(spec).items():
        labels[index[da_ecard(g, e).key]].add(lab)
    base = ["/".join(sorted(ls, key=lambda s: (len(s), s))) for ls in labels]
    names = []
    for j, b in enumerate(base):
        if base.count(b) == 1:
            names.append(b)
        else:
            names.append(f"{b}#{base[:j].count(b) + 1}")
    return names


def parse_collection(spec: BroomSpec, text: str) -> ClassifiedDeck:
    """Turn ``"L:2,K:2"`` into a sub-collection of the broom's deck."""
    deck = da_edeck(build(spec))
    names = class_names(spec)
    counts = [0] * len(names)
    for token in filter(None, (t.strip() for t in text.split(","))):
        name, _, num = token.partition(":")
        name = name.strip()
        try:
            c = int(num) if num else 1
        except ValueError:
            raise InputError(f"bad count in {token!r}") from None
        if name in names:
            j = names.index(name)
        else:
            options = [x for x in names if x.split("#")[0] == name]
            if not options:
                raise InputError(f"no card class {name!r}; classes are {names}")
            raise InputError(f"{name!r} is ambiguous; pick one of {options}")
        counts[j] += c
    for j, (c, (_, mult)) in enumerate(zip(counts, deck.classes)):
        if c > mult:
            raise InputError(f"collection asks for {c} x {names[j]} but the deck has {mult}")
    if not any(counts):
        raise InputError("empty collection")
    return deck.sub(counts)


def deck_csv(deck: ClassifiedDeck, names: list[str] | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(DECK_CSV_COLUMNS)
    for j, (card, mult) in enumerate(deck.classes):
        g = card.card
        edges = " ".join(f"{u}-{v}" for u, v in g.sorted_edges())
        w.writerow([j + 1, names[j] if names else "", card.d, mult, g.n, edges, to_graph6(g)])
    return buf.getvalue()


def deck_graph6(deck: ClassifiedDeck) -> str:
    return "".join(f"{c.d} {m} {to_graph6(c.card)}\n" for c, m in deck.classes)


def _dot_body(g: Graph, prefix: str, dashed: set[tuple[int, int]] = frozenset(), indent: str = "  ") -> list[str]:
    _, order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    lines = [f'{indent}{prefix}{pos[v]} [label="{pos[v]}"];' for v in order]
    for u, v in sorted(g.edges, key=lambda e: tuple(sorted((pos[e[0]], pos[e[1]])))):
        a, b = sorted((pos[u], pos[v]))
        style = " [style=dashed]" if (u, v) in dashed else ""
        lines.append(f"{indent}{prefix}{a} -- {prefix}{b}{style};")
    return lines


def deck_dot(deck: ClassifiedDeck, names: list[str] | None = None, title: str = "deck") -> str:
    """One cluster per class, vertices numbered by the card's canonical labeling."""
    lines = [f'graph "{title}" {{', "  node [shape=circle, width=0.3, fontsize=9];"]
    for j, (card, mult) in enumerate(deck.classes):
        name = f"{names[j]} " if names else ""
        lines.append(f"  subgraph cluster_{j} {{")
        lines.append(f'    label="{name}d={card.d} x{mult}";')
        lines.extend(_dot_body(card.card, f"c{j}_", indent="    "))
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def witness_dot(h: Graph, shared: ClassifiedDeck, title: str = "witness") -> str:
    """The witness with dashed edges wherever deleting the edge gives a shared card."""
    keys = {c.key for c, _ in shared.classes}
    dashed = {e for e in h.edges if da_ecard(h, e).key in keys}
    lines = [f'graph "{title}" {{', "  node [shape=circle, width=0.3, fontsize=9];"]
    lines.extend(_dot_body(h, "v", dashed))
    lines.append("}")
    return "\n".join(lines) + "\n"


def shared_cards(h: Graph, collection: ClassifiedDeck) -> list[tuple[DaCard, int, int]]:
    """``(class, asked, present in h)`` for each class of the collection."""
    have = da_edeck(h).counts()
    return [(c, m, have.get(c.key, 0)) for c, m in collection.classes]
