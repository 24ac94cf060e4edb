"""graph6 and DOT serialization, plus conversion to and from networkx."""

from __future__ import annotations

import networkx as nx

from ..models.errors import Graph6ParseError
from ..models.graph import Graph

HEADER = ">>graph6<<"


def to_networkx(g: Graph) -> nx.Graph:
    """networkx copy of g with nodes 0..n-1 inserted in order."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Graph on 0..n-1, numbering h's nodes in iteration order."""
    index = {v: i for i, v in enumerate(h.nodes)}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in h.edges()))


def encode_graph6(g: Graph) -> str:
    """Encode a graph in graph6 format (no header, no newline)."""
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").rstrip("\n")


def decode_graph6(text: str) -> Graph:
    """
    Decode graph6 text; the optional header and trailing whitespace are accepted.

    Raises:
        Graph6ParseError: with the byte offset of the first bad character, or
            the end of the text when the vertex count or bit vector is short
    """
    base = len(HEADER) if text.startswith(HEADER) else 0
    body = text[base:].rstrip("\r\n ")
    if not body:
        raise Graph6ParseError("missing vertex count", base)
    for offset, char in enumerate(body):
        if not 63 <= ord(char) <= 126:
            raise Graph6ParseError(f"character {char!r} outside graph6 range", base + offset)
    try:
        h = nx.from_graph6_bytes(body.encode("ascii"))
    except IndexError as e:
        raise Graph6ParseError("truncated vertex count", base + len(body)) from e
    except (ValueError, nx.NetworkXError) as e:
        raise Graph6ParseError(str(e), base + len(body)) from e
    return from_networkx(h)


def to_dot(g: Graph, name: str = "G") -> str:
    """Undirected DOT listing every vertex, then every edge."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
