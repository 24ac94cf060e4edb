"""Seeded random graphs and family specs for the property suites."""

from __future__ import annotations

import heapq
import random
from typing import List

from ..models.graph import Graph
from ..models.types import FamilySpec, FamilyType


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree on n vertices from a random Pruefer sequence."""
    if n <= 1:
        return Graph.empty(max(n, 0))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, rng: random.Random, extra_edge_prob: float = 0.3) -> Graph:
    """A random spanning tree plus each remaining pair with the given probability."""
    tree = random_tree(n, rng)
    edges = set(tree.edges())
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_dissociation_graph(n: int, rng: random.Random, removed: int = 3,
                              edge_prob: float = 0.4) -> Graph:
    """
    Random connected graph in which deleting vertices 0..removed-1 leaves
    maximum degree at most 1, so its dissociation number is at least n - removed.
    """
    rest = list(range(removed, n))
    while True:
        rng.shuffle(rest)
        edges = set()
        for u, v in zip(rest[::2], rest[1::2]):
            if rng.random() < 0.5:
                edges.add((min(u, v), max(u, v)))
        for s in range(removed):
            for v in range(s + 1, n):
                if rng.random() < edge_prob:
                    edges.add((s, v))
        g = Graph.from_edges(n, sorted(edges))
        if g.is_connected():
            return g


def random_graph(n: int, rng: random.Random, edge_prob: float = 0.4) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob]
    return Graph.from_edges(n, edges)


def random_family_spec(rng: random.Random, family: FamilyType, n_min: int, n_max: int) -> FamilySpec:
    """Uniformly drawn spec whose order lies in [n_min, n_max]; H-type specs have q >= 1."""
    base = 7 if family == FamilyType.G_TYPE else 5
    while True:
        leaves: List[int] = [rng.randint(0, 2) for _ in range(3)]
        slack = n_max - base - sum(leaves)
        if slack < 2:
            continue
        paths = [rng.randint(0, slack // 2) for _ in range(3)]
        if family == FamilyType.H_TYPE and paths[1] == 0:
            paths[1] = 1
        spec = FamilySpec(family=family, a=leaves[0], b=leaves[1], c=leaves[2],
                          p=paths[0], q=paths[1], r=paths[2])
        if n_min <= spec.n <= n_max:
            return spec
