"""
Tests for the three-anchor reduction, the Perron reconstruction and the
case polynomial table.

Run with: pytest tests/test_reduced_model.py -v
"""

import random

import numpy as np
import pytest

from src.models.errors import DomainError, InvalidParameterError, UnsupportedError
from src.models.types import CheckStatus, FamilySpec, FamilyType
from src.services.case_table import case_table, entries_for_case, entry
from src.services.graph_builders import build_family, theorem1_extremal
from src.services.reduced_model_service import (
    a_matrix,
    anchor_eigenvector,
    b1_matrix,
    b2_matrix,
    case_winner,
    f_cubic,
    minimum_by_rho,
    perron_residual,
    reconstruct_perron,
    reduced_char_poly,
    solve_rho_reduced,
    verify_case_poly,
)
from src.services.root_isolation import largest_real_root
from src.services.spectral_service import dense_spectral_radius
from src.utils.random_graphs import random_family_spec


def test_matrices_at_a_sample_point():
    assert f_cubic(2.0) == 6.0
    np.testing.assert_allclose(
        b2_matrix(2.0, FamilySpec.h(0, 0, 0, 0, 1, 0)),
        [[2.0, 2.0, 1.0], [2.0, 4.0, 1.0], [1.0, 1.0, 2.0]],
    )
    np.testing.assert_allclose(
        b1_matrix(2.0, FamilySpec.g(0, 0, 0, 0, 0, 0)),
        [[2.0, 1.0, 0.0], [1.0, 4.0, 1.0], [0.0, 1.0, 2.0]],
    )


def test_matrix_argument_checks():
    with pytest.raises(InvalidParameterError):
        b1_matrix(2.0, FamilySpec.h(0, 0, 0, 0, 1, 0))
    with pytest.raises(InvalidParameterError):
        b2_matrix(2.0, FamilySpec.g(0, 0, 0, 0, 1, 0))
    with pytest.raises(DomainError):
        b1_matrix(1.0, FamilySpec.g(0, 0, 0, 0, 1, 0))
    with pytest.raises(DomainError):
        a_matrix(0, 0, 0, 0, 0, 0, 0.0)


def test_a_matrix_is_b1_without_the_scalar_shift():
    for a, b, c, m1, m2, m3 in [(1, 0, 0, -1, -2, -1), (0, 1, 0, 0, -2, 0), (1, 1, 1, -2, -2, -1)]:
        for m in (4, 7):
            spec = FamilySpec.g(a, b, c, m + m1, m + m2, m + m3)
            for t in (1.5, 2.2, 3.0):
                shifted = b1_matrix(t, spec) - t * (m + 1) * np.eye(3)
                np.testing.assert_allclose(shifted, a_matrix(a, b, c, m1, m2, m3, t), atol=1e-12)


def test_reduced_solver_matches_eigensolver():
    spec = FamilySpec.g(0, 0, 0, 2, 1, 2)
    assert spec.n == 17
    assert solve_rho_reduced(spec) == pytest.approx(dense_spectral_radius(build_family(spec).graph), abs=1e-9)

    rng = random.Random(14)
    for family, count in ((FamilyType.G_TYPE, 12), (FamilyType.H_TYPE, 6)):
        for _ in range(count):
            spec = random_family_spec(rng, family, 14, 60)
            direct = dense_spectral_radius(build_family(spec).graph)
            assert solve_rho_reduced(spec) == pytest.approx(direct, abs=1e-9)


def test_reduced_solver_refuses_small_graphs():
    with pytest.raises(UnsupportedError):
        solve_rho_reduced(FamilySpec.g(1, 0, 0, 1, 0, 1))


def test_reduced_char_poly_has_the_spectral_radius_as_largest_root():
    for spec in (FamilySpec.g(1, 0, 0, 6, 5, 6), FamilySpec.h(0, 1, 0, 3, 4, 3)):
        assert largest_real_root(reduced_char_poly(spec)) == pytest.approx(solve_rho_reduced(spec), abs=1e-9)


def test_perron_reconstruction():
    for spec in (FamilySpec.g(1, 0, 1, 3, 2, 3), FamilySpec.h(1, 0, 0, 2, 3, 2)):
        rho = solve_rho_reduced(spec)
        extension = reconstruct_perron(spec, rho, anchor_eigenvector(spec, rho))
        assert len(extension.vector) == spec.n
        assert min(extension.vector) > 0
        assert perron_residual(spec, extension) < 1e-8


def test_h_type_anchor_vector_is_the_fixed_point():
    rng = random.Random(17)
    specs = [FamilySpec.h(1, 0, 0, 2, 3, 2)]
    specs += [random_family_spec(rng, FamilyType.H_TYPE, 14, 60) for _ in range(6)]
    for spec in specs:
        rho = solve_rho_reduced(spec)
        anchors = anchor_eigenvector(spec, rho)
        assert min(anchors) > 0
        assert np.linalg.norm(anchors) == pytest.approx(1.0)
        # B(rho) x = f(rho) x
        np.testing.assert_allclose(b2_matrix(rho, spec) @ anchors, f_cubic(rho) * anchors, atol=1e-7)
        X = np.asarray(reconstruct_perron(spec, rho, anchors).vector)
        A = build_family(spec).graph.adjacency_matrix()
        np.testing.assert_allclose(A @ X, rho * X, atol=1e-8 * np.max(X))
        assert rho == pytest.approx(dense_spectral_radius(build_family(spec).graph), abs=1e-9)


def test_minimum_by_rho():
    specs = [FamilySpec.g(0, 0, 0, 2, 1, 2), FamilySpec.g(0, 0, 0, 1, 3, 1)]
    best, rho, _, ties = minimum_by_rho(specs)
    expected = min(specs, key=lambda s: dense_spectral_radius(build_family(s).graph))
    assert best == expected
    assert rho == pytest.approx(solve_rho_reduced(expected), abs=1e-12)
    assert ties == []
    with pytest.raises(InvalidParameterError):
        minimum_by_rho([])


# ----------------------------------------------------------------------
# Case polynomials
# ----------------------------------------------------------------------

def test_case_table_shape():
    table = case_table()
    assert len(table) == 33
    assert [len(entries_for_case(k)) for k in range(1, 7)] == [7, 6, 6, 4, 4, 6]
    for k in range(1, 7):
        assert sum(1 for e in entries_for_case(k) if e.winner) == 1
    assert entry("f_1").params == (1, 0, 0, -1, -2, -1)


def test_every_case_polynomial_matches_its_determinant():
    for e in case_table():
        report = verify_case_poly(e, samples=400)
        assert report.status == CheckStatus.PASS, (e.label, report.failure)


def test_corrupted_case_polynomial_fails():
    good = entry("f_1")
    bad = good.model_copy(update={"closed_form": (*good.closed_form[:3], {-1: -2})})
    report = verify_case_poly(bad, samples=100)
    assert report.status == CheckStatus.FAIL
    assert report.failure is not None


def test_case_winner_matches_extremal_table():
    for n in range(39, 45):
        assert case_winner(n) == theorem1_extremal(n)
    with pytest.raises(UnsupportedError):
        case_winner(38)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
