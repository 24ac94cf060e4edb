"""Graph sources and the per-chunk scan used by minimum spectral radius searches."""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from itertools import islice
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

from ..models.errors import ResourceLimitError
from ..models.graph import Graph
from ..models.reports import SearchRecord
from .canonical_service import canonical_form
from .dissociation_service import diss_exact, diss_tree_dp
from .enumeration_service import (
    LABELED_MAX_N,
    free_tree_edge_lists,
    labeled_connected_range,
)
from .graph_codec import decode_graph6, encode_graph6
from .spectral_service import dense_spectral_radius

DEFAULT_CHUNK_SIZE = 10_000


@dataclass(frozen=True)
class ChunkTask:
    """A self-contained slice of a source, picklable for worker processes."""
    index: int
    kind: str
    n: int
    psi: int
    window: float
    start: int = 0
    stop: int = 0
    items: Tuple = ()


@dataclass
class ChunkOutcome:
    index: int
    scanned: int
    records: List[SearchRecord] = field(default_factory=list)


class GraphSource(ABC):
    """Stream of graphs of one order, split into chunks."""

    name: str = "graphs"
    n: int = 0
    notes: Tuple[str, ...] = ()

    @abstractmethod
    def tasks(self, chunk_size: int, psi: int, window: float) -> Iterator[ChunkTask]:
        ...

    def identity(self) -> str:
        return f"{self.name}-n{self.n}"


class LabeledConnectedSource(GraphSource):
    """All labeled connected graphs, split into ranges of edge masks."""

    name = "labeled-connected"

    def __init__(self, n: int):
        if n > LABELED_MAX_N:
            raise ResourceLimitError(f"labeled enumeration limited to n <= {LABELED_MAX_N}")
        self.n = n

    def tasks(self, chunk_size: int, psi: int, window: float) -> Iterator[ChunkTask]:
        total = 1 << (self.n * (self.n - 1) // 2)
        for index, start in enumerate(range(0, total, chunk_size)):
            yield ChunkTask(index=index, kind="labeled", n=self.n, psi=psi, window=window,
                            start=start, stop=min(total, start + chunk_size))


class FreeTreeSource(GraphSource):
    """One tree per isomorphism class, shipped to workers as edge lists."""

    name = "free-trees"
    notes = (
        "Only trees are searched: for psi > ceil(2n/3) every minimizer of the "
        "spectral radius is a tree. This is relied on, not re-proved.",
    )

    def __init__(self, n: int):
        self.n = n
        free_tree_edge_lists(n)

    def tasks(self, chunk_size: int, psi: int, window: float) -> Iterator[ChunkTask]:
        trees = free_tree_edge_lists(self.n)
        index = 0
        while True:
            batch = tuple(islice(trees, chunk_size))
            if not batch:
                return
            yield ChunkTask(index=index, kind="trees", n=self.n, psi=psi, window=window, items=batch)
            index += 1


class GraphListSource(GraphSource):
    """An explicit collection of graphs, shipped to workers as graph6."""

    def __init__(self, graphs: Iterable[Graph], n: int, name: str = "graph-list"):
        self.graphs = graphs
        self.n = n
        self.name = name

    def tasks(self, chunk_size: int, psi: int, window: float) -> Iterator[ChunkTask]:
        encoded = (encode_graph6(g) for g in self.graphs)
        index = 0
        while True:
            batch = tuple(islice(encoded, chunk_size))
            if not batch:
                return
            yield ChunkTask(index=index, kind="graph6", n=self.n, psi=psi, window=window, items=batch)
            index += 1


def lower_bound_rho(g: Graph) -> float:
    """max(sqrt(max degree), average degree) never exceeds the spectral radius."""
    if g.n == 0:
        return 0.0
    return max(math.sqrt(g.max_degree()), 2.0 * g.num_edges / g.n)


def make_record(g: Graph, diss: int, rho: float) -> SearchRecord:
    return SearchRecord(graph6=encode_graph6(g), n=g.n, diss=diss, rho=rho, canonical=canonical_form(g))


def _graph_diss(g: Graph) -> int:
    if g.is_tree():
        return diss_tree_dp(g)
    return diss_exact(g)[0]


def _candidates(task: ChunkTask) -> Iterator[Tuple[Graph, float, Optional[Callable[[Graph], int]]]]:
    """(graph, lower bound, dissociation solver or None) for every graph of the chunk."""
    if task.kind == "labeled":
        for g in labeled_connected_range(task.n, task.start, task.stop):
            yield g, lower_bound_rho(g), None
    elif task.kind == "trees":
        for edges in task.items:
            g = Graph.from_edges(task.n, edges)
            yield g, math.sqrt(g.max_degree()), diss_tree_dp
    elif task.kind == "graph6":
        for text in task.items:
            g = decode_graph6(text)
            yield g, lower_bound_rho(g), None
    else:
        raise ValueError(f"unknown chunk kind {task.kind!r}")


def scan_chunk(task: ChunkTask) -> ChunkOutcome:
    """
    Keep the chunk's graphs with diss = psi whose spectral radius lies within
    the window of the chunk minimum.

    Graphs whose lower bound already exceeds the running minimum plus the
    window are skipped before any dissociation work; they cannot reach the
    global window either.
    """
    best = math.inf
    kept: List[Tuple[float, int, Graph]] = []
    scanned = 0
    for g, bound, tree_diss in _candidates(task):
        scanned += 1
        if bound > best + task.window:
            continue
        diss = tree_diss(g) if tree_diss is not None else _graph_diss(g)
        if diss != task.psi:
            continue
        rho = dense_spectral_radius(g)
        if rho > best + task.window:
            continue
        best = min(best, rho)
        kept.append((rho, diss, g))
    records = [make_record(g, diss, rho) for rho, diss, g in kept if rho <= best + task.window]
    return ChunkOutcome(index=task.index, scanned=scanned, records=records)
