"""Graph enumeration: labeled connected graphs and free trees."""

from __future__ import annotations

from typing import Iterator, List, Sequence, Tuple

import networkx as nx

from ..models.errors import ResourceLimitError
from ..models.graph import Graph

LABELED_MAX_N = 7
TREES_MAX_N = 24


def vertex_pairs(n: int) -> List[Tuple[int, int]]:
    """Pairs (i, j), i < j, in the bit order used by edge masks."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def rows_from_mask(pairs: Sequence[Tuple[int, int]], n: int, mask: int) -> List[int]:
    rows = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask >>= 1
        k += 1
    return rows


def rows_connected(rows: Sequence[int]) -> bool:
    n = len(rows)
    if n == 0:
        return False
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        v_mask = frontier
        while v_mask:
            low = v_mask & -v_mask
            reach |= rows[low.bit_length() - 1]
            v_mask ^= low
        frontier = reach & ~seen
        seen |= frontier
    return seen == full


def labeled_connected_range(n: int, start: int, stop: int) -> Iterator[Graph]:
    """Connected graphs whose edge masks lie in [start, stop)."""
    pairs = vertex_pairs(n)
    for mask in range(start, stop):
        rows = rows_from_mask(pairs, n, mask)
        if rows_connected(rows):
            yield Graph(n, tuple(rows))


def enumerate_labeled_connected(n: int) -> Iterator[Graph]:
    """Every labeled connected simple graph on vertices 0..n-1, once each."""
    if n > LABELED_MAX_N:
        raise ResourceLimitError(f"labeled enumeration limited to n <= {LABELED_MAX_N}")
    if n < 1:
        return iter(())
    return labeled_connected_range(n, 0, 1 << (n * (n - 1) // 2))


# ----------------------------------------------------------------------
# Free trees
# ----------------------------------------------------------------------

def free_tree_edge_lists(n: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """Edge lists of the free trees on n vertices, one per isomorphism class."""
    if n > TREES_MAX_N:
        raise ResourceLimitError(f"free-tree enumeration limited to n <= {TREES_MAX_N}")
    return _edge_lists(n)


def _edge_lists(n: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    if n < 1:
        return
    if n == 1:
        yield ()
        return
    for tree in nx.nonisomorphic_trees(n):
        yield tuple(tree.edges())


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on n <= 24 vertices."""
    return (Graph.from_edges(n, edges) for edges in free_tree_edge_lists(n))
