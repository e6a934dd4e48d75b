"""graph6 encoding (upper-triangular adjacency, column-major, 6 bits per byte)."""

from __future__ import annotations

from edgerecon.errors import InputError
from edgerecon.graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise InputError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) > 1 and data[1] == 126:
        chunk, rest = data[2:8], data[8:]
    else:
        chunk, rest = data[1:4], data[4:]
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, rest


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[i : i + 6])), 2) for i in range(0, len(bits), 6)
    )
    out = (_encode_n(g.n) + body).decode("ascii")
    return HEADER + out if header else out


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER) :]
    n, body = _decode_n(data)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need or any(not 63 <= c <= 126 for c in body):
        raise InputError(f"graph6 body has wrong length or bad characters for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)
