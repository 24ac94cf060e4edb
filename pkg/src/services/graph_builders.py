"""Named graphs, the two attachment families and elementary transformations."""

from __future__ import annotations

from typing import List, Optional, Sequence

from ..models.errors import InvalidEdgeError, InvalidParameterError, UnsupportedError, VertexIndexError
from ..models.graph import FamilyGraph, Graph
from ..models.types import FamilySpec, FamilyType, SmithKind


def path(n: int) -> Graph:
    """Path on n >= 1 vertices, 0 - 1 - ... - (n-1)."""
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(t: int) -> Graph:
    """Star with centre 0 and t leaves."""
    if t < 0:
        raise InvalidParameterError(f"star needs t >= 0, got {t}")
    return Graph.from_edges(t + 1, ((0, i) for i in range(1, t + 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with parts 0..s-1 and s..s+t-1."""
    if s < 1 or t < 1:
        raise InvalidParameterError("both parts need at least one vertex")
    return Graph.from_edges(s + t, ((u, s + v) for u in range(s) for v in range(t)))


def cone(g: Graph) -> Graph:
    """Join g with a new vertex n adjacent to everything."""
    edges = g.edges() + [(v, g.n) for v in range(g.n)]
    return Graph.from_edges(g.n + 1, edges)


def wheel(n: int) -> Graph:
    """Cycle on n - 1 vertices joined with a hub; wheel(5) is C4 v K1."""
    if n < 4:
        raise InvalidParameterError(f"wheel needs n >= 4, got {n}")
    return cone(cycle(n - 1))


def spider(legs: Sequence[int]) -> Graph:
    """Centre 0 with pendant paths of the given lengths."""
    edges = []
    nxt = 1
    for length in legs:
        if length < 0:
            raise InvalidParameterError("leg lengths must be >= 0")
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


_FIXED_SMITH = {
    SmithKind.E6: (1, 2, 2),
    SmithKind.E7: (1, 2, 3),
    SmithKind.E8: (1, 2, 4),
    SmithKind.E6_TILDE: (2, 2, 2),
    SmithKind.E7_TILDE: (1, 3, 3),
    SmithKind.E8_TILDE: (1, 2, 5),
}


def smith_graph(kind: SmithKind, n: Optional[int] = None) -> Graph:
    """
    Connected graph with spectral radius below 2 (W, E6-E8) or equal to 2
    (W~, E6~-E8~).

    Args:
        kind: graph kind
        n: vertex count; required for W (n >= 4) and W~ (n >= 6)

    Returns:
        The graph; W(n) is a path on n-1 vertices with a pendant at its second
        vertex, W~(n) a path on n-2 vertices with pendants at the second vertex
        from each end.
    """
    kind = SmithKind(kind)
    if kind in _FIXED_SMITH:
        g = spider(_FIXED_SMITH[kind])
        if n is not None and n != g.n:
            raise InvalidParameterError(f"{kind.value} has exactly {g.n} vertices")
        return g
    if kind == SmithKind.W:
        if n is None or n < 4:
            raise InvalidParameterError(f"W(n) needs n >= 4, got {n}")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 2)] + [(1, n - 1)])
    if n is None or n < 6:
        raise InvalidParameterError(f"W~(n) needs n >= 6, got {n}")
    core = n - 2
    edges = [(i, i + 1) for i in range(core - 1)] + [(1, core), (core - 2, core + 1)]
    return Graph.from_edges(n, edges)


def k33_minus_edge() -> Graph:
    return complete_bipartite(3, 3).delete_edge(0, 3)


# ----------------------------------------------------------------------
# Attachment families
# ----------------------------------------------------------------------

def build_family(spec: FamilySpec) -> FamilyGraph:
    """
    Realize G(a,b,c;p,q,r) or H(a,b,c;p,q,r).

    G-type: spine path 0..6 with anchors 0, 3, 6. H-type: W5 on anchors 0, 1, 2,
    centre 3 (adjacent to 0, 1 and 4) and vertex 4 (adjacent to 3 and 2).
    Attachments follow, anchor by anchor: the leaves, then each pendant 2-path
    as a (near, far) pair.
    """
    if spec.family == FamilyType.G_TYPE:
        edges = [(i, i + 1) for i in range(6)]
        anchors = (0, 3, 6)
        spine = (1, 2, 4, 5)
        nxt = 7
    else:
        edges = [(0, 3), (1, 3), (3, 4), (2, 4)]
        anchors = (0, 1, 2)
        spine = (3, 4)
        nxt = 5

    leaves: List[tuple] = []
    paths: List[tuple] = []
    for anchor, k, m in zip(anchors, spec.leaves, spec.two_paths):
        own_leaves = tuple(range(nxt, nxt + k))
        edges.extend((anchor, leaf) for leaf in own_leaves)
        nxt += k
        own_paths = []
        for _ in range(m):
            near, far = nxt, nxt + 1
            edges.append((anchor, near))
            edges.append((near, far))
            own_paths.append((near, far))
            nxt += 2
        leaves.append(own_leaves)
        paths.append(tuple(own_paths))

    graph = Graph.from_edges(nxt, edges)
    return FamilyGraph(
        graph=graph, spec=spec, anchors=anchors, spine=spine,
        leaves=tuple(leaves), paths=tuple(paths),
    )


# Residue l -> (a, b, c, dp, dq, dr) with (p, q, r) = (m + dp, m + dq, m + dr)
_THEOREM1_TABLE = {
    0: (1, 0, 0, -1, -2, -1),
    1: (1, 0, 1, -1, -2, -1),
    2: (1, 0, 0, -1, -2, 0),
    3: (0, 0, 0, 0, -2, 0),
    4: (0, 1, 0, 0, -2, 0),
    5: (0, 0, 0, 0, -1, 0),
}


def theorem1_extremal(n: int) -> FamilySpec:
    """Extremal spec G_{m,l} for n = 6m + l >= 12."""
    if n < 12:
        raise UnsupportedError(f"the six-case extremal table starts at n = 12, got {n}")
    m, l = divmod(n, 6)
    a, b, c, dp, dq, dr = _THEOREM1_TABLE[l]
    spec = FamilySpec.g(a, b, c, m + dp, m + dq, m + dr)
    assert spec.n == n
    return spec


# ----------------------------------------------------------------------
# Transformations
# ----------------------------------------------------------------------

def subdivide(g: Graph, u: int, v: int) -> Graph:
    """Replace edge uv by u - w - v with the new vertex w = n."""
    if not g.has_edge(u, v):
        raise InvalidEdgeError(f"({u}, {v}) is not an edge")
    w = g.n
    edges = [e for e in g.edges() if e != (min(u, v), max(u, v))]
    edges += [(u, w), (w, v)]
    return Graph.from_edges(g.n + 1, edges)


def attach_two_paths(g: Graph, v: int, k: int, m: int) -> Graph:
    """G^{k,m}: hang pendant paths of k and m new vertices at v."""
    if not 0 <= v < g.n:
        raise VertexIndexError(f"vertex {v} outside 0..{g.n - 1}")
    if k < 0 or m < 0:
        raise InvalidParameterError("path lengths must be >= 0")
    edges = g.edges()
    nxt = g.n
    for length in (k, m):
        prev = v
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def is_internal_path(g: Graph, seq: Sequence[int]) -> bool:
    """
    True iff seq = v1..vl is an internal path: consecutive vertices adjacent,
    distinct (v1 = vl allowed for l > 2), d(v1), d(vl) >= 3 and interior degrees 2.
    """
    if len(seq) < 2 or any(not 0 <= v < g.n for v in seq):
        return False
    body = list(seq[:-1]) if seq[0] == seq[-1] and len(seq) > 2 else list(seq)
    if len(set(body)) != len(body):
        return False
    if any(not g.has_edge(x, y) for x, y in zip(seq, seq[1:])):
        return False
    if g.degree(seq[0]) < 3 or g.degree(seq[-1]) < 3:
        return False
    return all(g.degree(v) == 2 for v in seq[1:-1])


def internal_paths(g: Graph) -> List[List[int]]:
    """All maximal internal paths, each listed once in its smaller orientation."""
    found = []
    degrees = g.degrees()
    for u in range(g.n):
        if degrees[u] < 3:
            continue
        for start in g.neighbors(u):
            seq = [u, start]
            prev, cur = u, start
            while degrees[cur] == 2:
                nxt = next(w for w in g.neighbors(cur) if w != prev)
                seq.append(nxt)
                prev, cur = cur, nxt
            if degrees[cur] >= 3 and tuple(seq) <= tuple(reversed(seq)):
                found.append(seq)
    return found
