"""Canonical strings: equal exactly for isomorphic graphs."""

from __future__ import annotations

from typing import Dict, List

import networkx as nx
import pynauty

from ..models.errors import ResourceLimitError
from ..models.graph import Graph, iter_bits
from .graph_codec import to_networkx

GENERAL_MAX_N = 64


# ----------------------------------------------------------------------
# Trees: centre-rooted parenthesis encoding
# ----------------------------------------------------------------------

def tree_centers(g: Graph) -> List[int]:
    """One or two centres, found by repeatedly stripping leaves."""
    degree = g.degrees()
    remaining = g.n
    layer = [v for v in range(g.n) if degree[v] <= 1]
    removed = set()
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed.add(v)
            for u in iter_bits(g.rows[v]):
                if u not in removed:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(v for v in range(g.n) if v not in removed)


def rooted_tree_code(g: Graph, root: int) -> str:
    """Sorted-children parenthesis code of the tree rooted at root."""
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in iter_bits(g.rows[v]):
            if u not in parent:
                parent[u] = v
                order.append(u)
    codes: Dict[int, List[str]] = {v: [] for v in order}
    result = ""
    for v in reversed(order):
        code = "(" + "".join(sorted(codes[v])) + ")"
        if parent[v] >= 0:
            codes[parent[v]].append(code)
        else:
            result = code
    return result


def tree_canonical_form(g: Graph) -> str:
    return "T" + min(rooted_tree_code(g, c) for c in tree_centers(g))


# ----------------------------------------------------------------------
# General graphs: nauty certificates
# ----------------------------------------------------------------------

def general_canonical_form(g: Graph) -> str:
    """'G', the order, then the hex nauty certificate (canonical adjacency rows)."""
    if g.n > GENERAL_MAX_N:
        raise ResourceLimitError(f"general canonical form limited to n <= {GENERAL_MAX_N}")
    if g.n == 0:
        return "G0:"
    nauty_graph = pynauty.Graph(g.n, directed=False, adjacency_dict=dict(enumerate(g.adjacency_lists())))
    return f"G{g.n}:{pynauty.certificate(nauty_graph).hex()}"


def canonical_form(g: Graph) -> str:
    """Trees get a tree code; other graphs a nauty certificate."""
    if g.is_tree():
        return tree_canonical_form(g)
    return general_canonical_form(g)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Tree codes for trees, networkx VF2 matching for everything else."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.is_tree() or h.is_tree():
        return g.is_tree() and h.is_tree() and tree_canonical_form(g) == tree_canonical_form(h)
    return nx.is_isomorphic(to_networkx(g), to_networkx(h))
