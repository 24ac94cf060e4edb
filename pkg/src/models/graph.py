"""Immutable simple undirected graph on dense vertex ids 0..n-1.

Adjacency is stored as one neighbour bit mask per vertex. Python integers
are unbounded, so the same representation serves every order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from .errors import InvalidEdgeError, InvalidParameterError, VertexIndexError
from .types import FamilySpec


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bit-set adjacency rows."""

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError(f"vertex count must be >= 0, got {self.n}")
        if len(self.rows) != self.n:
            raise InvalidParameterError(
                f"expected {self.n} adjacency rows, got {len(self.rows)}"
            )
        limit = 1 << self.n
        for u, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise VertexIndexError(f"row {u} references a vertex outside 0..{self.n - 1}")
            if (row >> u) & 1:
                raise InvalidEdgeError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not (self.rows[v] >> u) & 1:
                    raise InvalidEdgeError(f"adjacency is not symmetric at ({u}, {v})")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges are rejected."""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexIndexError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise InvalidEdgeError(f"self-loop at vertex {u}")
            if (rows[u] >> v) & 1:
                raise InvalidEdgeError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexIndexError(f"vertex {v} outside 0..{self.n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> List[int]:
        self._check_vertex(v)
        return list(iter_bits(self.rows[v]))

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency_lists(self) -> List[List[int]]:
        return [list(iter_bits(row)) for row in self.rows]

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            matrix[u, v] = 1
            matrix[v, u] = 1
        return matrix

    def component_of(self, v: int, allowed: int | None = None) -> int:
        """Bit mask of the component containing v inside the allowed vertex mask."""
        self._check_vertex(v)
        if allowed is None:
            allowed = (1 << self.n) - 1
        seen = 1 << v
        queue = deque([v])
        while queue:
            u = queue.popleft()
            fresh = self.rows[u] & allowed & ~seen
            seen |= fresh
            queue.extend(iter_bits(fresh))
        return seen

    def components(self, allowed: int | None = None) -> List[int]:
        """Component masks of the subgraph induced by the allowed mask."""
        if allowed is None:
            allowed = (1 << self.n) - 1
        remaining = allowed
        found = []
        while remaining:
            v = (remaining & -remaining).bit_length() - 1
            comp = self.component_of(v, allowed)
            found.append(comp)
            remaining &= ~comp
        return found

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return self.component_of(0) == (1 << self.n) - 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.num_edges == self.n - 1 and self.is_connected()

    # ------------------------------------------------------------------
    # Transformations (each returns a new graph)
    # ------------------------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise InvalidEdgeError(f"edge ({u}, {v}) already present")
        if u == v:
            raise InvalidEdgeError(f"self-loop at vertex {u}")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise InvalidEdgeError(f"edge ({u}, {v}) not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def delete_vertex(self, v: int) -> "Graph":
        """Remove v; vertices above v shift down by one."""
        self._check_vertex(v)
        return self.induced_subgraph([u for u in range(self.n) if u != v])

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by the given vertices, renumbered in ascending order."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(mask_of(index[u] for u in iter_bits(self.rows[v]) if u in index))
        return Graph(len(keep), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidParameterError("relabelling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for u, row in enumerate(self.rows):
            rows[perm[u]] = mask_of(perm[v] for v in iter_bits(row))
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class FamilyGraph:
    """A realized family graph together with its vertex roles.

    Vertex roles are kept beside the graph: ``anchors`` are the three
    attachment vertices, ``spine`` the remaining base vertices in base order,
    ``leaves[i]`` the pendant vertices of anchor i and ``paths[i]`` the
    (near, far) vertex pairs of its pendant 2-paths.
    """

    graph: Graph
    spec: FamilySpec
    anchors: Tuple[int, int, int]
    spine: Tuple[int, ...]
    leaves: Tuple[Tuple[int, ...], ...] = field(default=((), (), ()))
    paths: Tuple[Tuple[Tuple[int, int], ...], ...] = field(default=((), (), ()))

    @property
    def n(self) -> int:
        return self.graph.n
