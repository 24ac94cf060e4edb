"""Dissociation sets: exact search, tree DP and the derived structures."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from ..models.errors import InvalidParameterError, ResourceLimitError
from ..models.graph import Graph, iter_bits, mask_of
from ..models.types import DissociationCertificate, Hypergraph

EXACT_MAX_N = 40
BRUTE_FORCE_MAX_N = 20


def induced_max_degree(g: Graph, vertices: Iterable[int]) -> int:
    mask = mask_of(vertices)
    return max((((g.rows[v] & mask).bit_count()) for v in iter_bits(mask)), default=0)


def is_dissociation_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff the vertices induce a subgraph of maximum degree <= 1."""
    return induced_max_degree(g, vertices) <= 1


def certificate(g: Graph, vertices: Iterable[int]) -> DissociationCertificate:
    members = sorted(set(vertices))
    return DissociationCertificate(
        vertices=members, size=len(members), max_induced_degree=induced_max_degree(g, members)
    )


class _Search:
    """Depth-first search over include/exclude decisions.

    A vertex can join the current set S when it has at most one neighbour in
    S and that neighbour has none. Vertices that cannot join now never can,
    so the addable vertices still ahead bound the reachable size.
    """

    def __init__(self, g: Graph, order: Sequence[int]):
        self.rows = g.rows
        self.order = list(order)
        self.n = g.n

    def addable(self, v: int, chosen: int) -> bool:
        inside = self.rows[v] & chosen
        if inside == 0:
            return True
        if inside & (inside - 1):
            return False
        u = inside.bit_length() - 1
        return (self.rows[u] & chosen) == 0

    def bound(self, depth: int, chosen: int, size: int) -> int:
        return size + sum(1 for v in self.order[depth:] if self.addable(v, chosen))

    def best_size(self, start: int) -> int:
        best = start
        stack = [(0, 0, 0)]
        while stack:
            depth, chosen, size = stack.pop()
            if size > best:
                best = size
            if depth == len(self.order) or self.bound(depth, chosen, size) <= best:
                continue
            v = self.order[depth]
            stack.append((depth + 1, chosen, size))
            if self.addable(v, chosen):
                stack.append((depth + 1, chosen | (1 << v), size + 1))
        return best

    def sets_of_size(self, target: int, first_only: bool) -> List[int]:
        """Masks of dissociation sets of the target size, include-first order."""
        found = []
        stack = [(0, 0, 0)]
        while stack:
            depth, chosen, size = stack.pop()
            if size == target:
                found.append(chosen)
                if first_only:
                    break
                continue
            if depth == len(self.order) or self.bound(depth, chosen, size) < target:
                continue
            v = self.order[depth]
            stack.append((depth + 1, chosen, size))
            if self.addable(v, chosen):
                stack.append((depth + 1, chosen | (1 << v), size + 1))
        return found


def _greedy_size(g: Graph, order: Sequence[int]) -> int:
    search = _Search(g, order)
    chosen = 0
    for v in order:
        if search.addable(v, chosen):
            chosen |= 1 << v
    return chosen.bit_count()


def diss_exact(g: Graph) -> Tuple[int, DissociationCertificate]:
    """
    Dissociation number with the lexicographically smallest maximum witness.

    The optimum is found by branch and bound over vertices in descending
    degree order, seeded by a greedy set. The witness then comes from a second
    search in vertex-id order that includes before excluding, whose first
    hit of the optimal size is the lexicographically smallest.
    """
    if g.n > EXACT_MAX_N:
        raise ResourceLimitError(f"exact dissociation search limited to n <= {EXACT_MAX_N}")
    if g.n == 0:
        return 0, certificate(g, [])
    by_degree = sorted(range(g.n), key=lambda v: (-g.rows[v].bit_count(), v))
    best = _Search(g, by_degree).best_size(_greedy_size(g, range(g.n)))
    witness = _Search(g, range(g.n)).sets_of_size(best, first_only=True)[0]
    return best, certificate(g, iter_bits(witness))


def all_maximum_dissociation_sets(g: Graph) -> List[List[int]]:
    """Every maximum dissociation set, sorted lexicographically."""
    size, _ = diss_exact(g)
    masks = _Search(g, range(g.n)).sets_of_size(size, first_only=False)
    return sorted(list(iter_bits(m)) for m in masks)


def diss_brute_force(g: Graph) -> int:
    """Largest dissociation set over all subsets; reference oracle for small n."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise ResourceLimitError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}")
    best = 0
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size > best and all((g.rows[v] & mask).bit_count() <= 1 for v in iter_bits(mask)):
            best = size
    return best


# ----------------------------------------------------------------------
# Trees
# ----------------------------------------------------------------------

def _tree_order(g: Graph) -> Tuple[List[int], List[int]]:
    if not g.is_tree():
        raise InvalidParameterError("input is not a tree")
    parent = [-1] * g.n
    order = [0]
    seen = 1
    for v in order:
        for u in iter_bits(g.rows[v] & ~seen):
            parent[u] = v
            seen |= 1 << u
            order.append(u)
    return order, parent


def tree_dp_tables(order: Sequence[int], parent: Sequence[int]):
    """
    Three-state DP over a rooted tree given in preorder.

    out[v]: v not chosen; alone[v]: v chosen with no chosen child;
    paired[v]: v chosen together with exactly one chosen child, which has no
    other chosen neighbour. Returns the three tables and the best child
    used by ``paired``.
    """
    n = len(order)
    out = [0] * n
    alone = [1] * n
    gain = [None] * n
    best_child = [-1] * n
    for v in reversed(order):
        p = parent[v]
        if p < 0:
            continue
        out[p] += max(out[v], alone[v], (alone[v] + gain[v]) if gain[v] is not None else 0)
        alone[p] += out[v]
        delta = alone[v] - out[v]
        if gain[p] is None or delta > gain[p]:
            gain[p] = delta
            best_child[p] = v
    paired = [alone[v] + gain[v] if gain[v] is not None else -1 for v in range(n)]
    return out, alone, paired, best_child


def diss_tree_dp(t: Graph) -> int:
    """Dissociation number of a tree in linear time."""
    order, parent = _tree_order(t)
    out, alone, paired, _ = tree_dp_tables(order, parent)
    root = order[0]
    return max(out[root], alone[root], paired[root])


def tree_dissociation_certificate(t: Graph) -> DissociationCertificate:
    """A maximum dissociation set of a tree, recovered from the DP tables."""
    order, parent = _tree_order(t)
    out, alone, paired, best_child = tree_dp_tables(order, parent)
    children: List[List[int]] = [[] for _ in range(t.n)]
    for v in order[1:]:
        children[parent[v]].append(v)

    def best_state(v: int) -> str:
        options = [("out", out[v]), ("alone", alone[v]), ("paired", paired[v])]
        return max(options, key=lambda item: item[1])[0]

    chosen = []
    stack = [(order[0], best_state(order[0]))]
    while stack:
        v, state = stack.pop()
        if state == "out":
            stack.extend((c, best_state(c)) for c in children[v])
            continue
        chosen.append(v)
        partner = best_child[v] if state == "paired" else -1
        for c in children[v]:
            stack.append((c, "alone" if c == partner else "out"))
    return certificate(t, chosen)


# ----------------------------------------------------------------------
# Derived structures
# ----------------------------------------------------------------------

def generated_hypergraph(g: Graph, dissociation_set: Iterable[int]) -> Hypergraph:
    """
    Hypergraph on V minus D with edges of three kinds, in this order:
    graph edges inside V minus D, then N(u) restricted to V minus D for each
    isolated u of G[D], then N({u1, u2}) restricted to V minus D for each edge
    of G[D]. Kinds 2 and 3 need at least two vertices; equal vertex sets from
    different components stay separate edges.
    """
    d_mask = mask_of(dissociation_set)
    if d_mask >> g.n:
        raise InvalidParameterError("dissociation set references vertices outside the graph")
    if induced_max_degree(g, iter_bits(d_mask)) > 1:
        raise InvalidParameterError("vertex set is not a dissociation set")
    rest = ((1 << g.n) - 1) & ~d_mask
    vertices = list(iter_bits(rest))

    edges: List[Tuple[int, ...]] = []
    kinds: List[int] = []
    for u in vertices:
        for v in iter_bits(g.rows[u] & rest):
            if u < v:
                edges.append((u, v))
                kinds.append(1)

    isolated, paired = [], []
    for u in iter_bits(d_mask):
        partner = g.rows[u] & d_mask
        if partner == 0:
            isolated.append(u)
        elif u < partner.bit_length() - 1:
            paired.append((u, partner.bit_length() - 1))
    for u in isolated:
        hood = g.rows[u] & rest
        if hood.bit_count() >= 2:
            edges.append(tuple(iter_bits(hood)))
            kinds.append(2)
    for u, v in paired:
        hood = (g.rows[u] | g.rows[v]) & rest
        if hood.bit_count() >= 2:
            edges.append(tuple(iter_bits(hood)))
            kinds.append(3)
    return Hypergraph(vertices=vertices, edges=edges, kinds=kinds)


def hypergraph_is_connected(h: Hypergraph) -> bool:
    if not h.vertices:
        return False
    reached = {h.vertices[0]}
    changed = True
    while changed:
        changed = False
        for edge in h.edges:
            if reached.intersection(edge) and not reached.issuperset(edge):
                reached.update(edge)
                changed = True
    return reached == set(h.vertices)


def claim1_check(h: Hypergraph) -> bool:
    """Every two hyperedges share at most one vertex."""
    return all(len(set(e) & set(f)) <= 1 for e, f in combinations(h.edges, 2))


def claim2_check(h: Hypergraph) -> bool:
    """False exactly when h is the triangle: three 2-edges on three vertices."""
    if len(h.vertices) != 3 or len(h.edges) != 3:
        return True
    if any(len(e) != 2 for e in h.edges):
        return True
    return len({frozenset(e) for e in h.edges}) != 3


def skeleton(g: Graph, anchors: Iterable[int]) -> Graph:
    """Delete every component of g - anchors that touches exactly one anchor."""
    anchor_mask = mask_of(anchors)
    if anchor_mask >> g.n:
        raise InvalidParameterError("anchor outside the graph")
    rest = ((1 << g.n) - 1) & ~anchor_mask
    removed = 0
    for comp in g.components(rest):
        touched = 0
        for v in iter_bits(comp):
            touched |= g.rows[v] & anchor_mask
        if touched.bit_count() == 1:
            removed |= comp
    keep = ((1 << g.n) - 1) & ~removed
    return g.induced_subgraph(iter_bits(keep))
