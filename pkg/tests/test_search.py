"""
Tests for the minimum spectral radius searches, checkpoints and the family search.

Run with: pytest tests/test_search.py -v
"""

import json

import pytest

from src.models.errors import InvalidParameterError, NoCandidatesError
from src.models.types import FamilyType
from src.services.canonical_service import is_isomorphic
from src.services.checkpoint_service import CheckpointStore
from src.services.graph_builders import (
    build_family,
    cycle,
    k33_minus_edge,
    path,
    star,
    theorem1_extremal,
    wheel,
)
from src.services.graph_codec import decode_graph6
from src.services.search_service import (
    FreeTreeSource,
    GraphListSource,
    LabeledConnectedSource,
    lower_bound_rho,
    make_record,
    scan_chunk,
)
from src.services.spectral_service import EXACT_WINDOW, dense_spectral_radius
from src.workflows.search_workflow import (
    family_search,
    family_specs,
    min_rho_search,
    reduce_records,
    verify_theorem_pattern,
)


def _winner(result):
    return decode_graph6(result.winner.graph6)


def test_lower_bound_never_exceeds_radius():
    for g in (star(7), path(9), wheel(6), k33_minus_edge()):
        assert lower_bound_rho(g) <= dense_spectral_radius(g) + 1e-12


def test_small_order_extremal_graphs():
    result = min_rho_search(LabeledConnectedSource(5), 2, chunk_size=256)
    assert is_isomorphic(_winner(result), wheel(5))
    assert result.candidates_examined == 728

    result = min_rho_search(LabeledConnectedSource(6), 3, chunk_size=4096)
    assert is_isomorphic(_winner(result), k33_minus_edge())
    assert result.winner.diss == 3


def test_tree_search_returns_the_path():
    result = min_rho_search(FreeTreeSource(10), 7, chunk_size=20)
    assert is_isomorphic(_winner(result), path(10))
    assert result.candidates_examined == 106
    assert result.ties == []
    assert result.notes


def test_no_tree_on_eight_vertices_has_diss_five():
    with pytest.raises(NoCandidatesError):
        min_rho_search(FreeTreeSource(8), 5)


def test_graph_list_source():
    # diss: star(3) 3, path(4) 3, cycle(4) 2
    graphs = [star(3), path(4), cycle(4)]
    result = min_rho_search(GraphListSource(graphs, 4), 3, chunk_size=2)
    assert is_isomorphic(_winner(result), path(4))
    assert result.candidates_examined == 3


def test_parallel_search_matches_sequential():
    sequential = min_rho_search(FreeTreeSource(11), 8, chunk_size=15)
    parallel = min_rho_search(FreeTreeSource(11), 8, workers=2, chunk_size=15)
    assert parallel.winner.canonical == sequential.winner.canonical
    assert parallel.candidates_examined == sequential.candidates_examined


def test_search_argument_checks():
    with pytest.raises(InvalidParameterError):
        min_rho_search(FreeTreeSource(8), 6, workers=0)
    with pytest.raises(InvalidParameterError):
        min_rho_search(FreeTreeSource(8), 6, chunk_size=0)


def test_reduce_records_breaks_exact_ties_by_canonical_form():
    with pytest.raises(NoCandidatesError):
        reduce_records([])
    # C4 and K_{1,4} both have radius 2 but are not isomorphic
    a = make_record(cycle(4), 2, 2.0)
    b = make_record(star(4), 4, 2.0)
    winner, ties, comparisons = reduce_records([b, a])
    assert winner.canonical == min(a.canonical, b.canonical)
    assert len(ties) == 1
    assert comparisons >= 1
    assert winner.rho_exact_rank == 0 and ties[0].rho_exact_rank == 0


# ----------------------------------------------------------------------
# Checkpoints
# ----------------------------------------------------------------------

def _identity(source, psi, chunk_size):
    return {"source": source.identity(), "psi": psi, "chunk_size": chunk_size, "window": EXACT_WINDOW}


def test_interrupted_search_resumes_with_the_same_result(tmp_path):
    source = FreeTreeSource(10)
    full = min_rho_search(source, 7, chunk_size=20)

    store = CheckpointStore(tmp_path, _identity(source, 7, 20))
    store.load()
    scanned = 0
    for task in list(source.tasks(20, 7, EXACT_WINDOW))[:2]:
        outcome = scan_chunk(task)
        scanned += outcome.scanned
        store.commit(task.index + 1, scanned, outcome.records)
    # a torn write after the last commit is discarded on load
    with open(tmp_path / "records.jsonl", "a", encoding="utf-8") as f:
        f.write('{"g6": "I??')

    resumed = min_rho_search(FreeTreeSource(10), 7, chunk_size=20, checkpoint_dir=tmp_path)
    assert resumed.resumed_from_chunk == 2
    assert resumed.winner.graph6 == full.winner.graph6
    assert resumed.candidates_examined == full.candidates_examined


def test_checkpoint_round_trip_and_identity_mismatch(tmp_path):
    store = CheckpointStore(tmp_path, {"source": "free-trees-n10", "psi": 7})
    assert store.load() == (0, 0, [])
    record = make_record(path(10), 7, dense_spectral_radius(path(10)))
    store.commit(1, 106, [record])

    next_chunk, scanned, records = CheckpointStore(tmp_path, {"source": "free-trees-n10", "psi": 7}).load()
    assert (next_chunk, scanned) == (1, 106)
    assert records == [record]
    line = (tmp_path / "records.jsonl").read_text(encoding="utf-8").splitlines()[0]
    assert set(json.loads(line)) == {"g6", "n", "diss", "rho", "canon"}

    assert CheckpointStore(tmp_path, {"source": "free-trees-n10", "psi": 6}).load() == (0, 0, [])


# ----------------------------------------------------------------------
# Family search
# ----------------------------------------------------------------------

def test_family_specs_have_the_requested_order():
    for n in (20, 39, 50):
        specs = family_specs(n)
        assert specs
        assert all(s.n == n for s in specs)
        assert all(s.q >= 1 for s in specs if s.family == FamilyType.H_TYPE)


def test_family_search_matches_extremal_table():
    for n in list(range(39, 45)) + [120]:
        result = family_search(n)
        assert result.winner_spec == theorem1_extremal(n)
        assert result.winner.diss == n - 3
        assert is_isomorphic(_winner(result), build_family(theorem1_extremal(n)).graph)
    with pytest.raises(InvalidParameterError):
        family_search(13)


def test_pattern_range_is_checked():
    with pytest.raises(InvalidParameterError):
        verify_theorem_pattern(11, 14)
    with pytest.raises(InvalidParameterError):
        verify_theorem_pattern(20, 23)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
