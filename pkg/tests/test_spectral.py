"""
Tests for the eigensolver, exact characteristic polynomials and lambda1 of
3x3 symmetric matrices.

Run with: pytest tests/test_spectral.py -v
"""

import math
import random

import numpy as np
import pytest

from src.models.errors import ConvergenceError, InvalidParameterError
from src.models.graph import Graph
from src.models.polynomial import IntPolynomial
from src.models.types import Ordering
from src.services.graph_builders import complete, cycle, path, star, wheel
from src.services.root_isolation import largest_real_root
from src.services.spectral_service import (
    char_poly_exact,
    compare_spectral_radii,
    dense_spectral_radius,
    lambda1_sym3,
    spectral_radius,
)
from src.services.enumeration_service import enumerate_labeled_connected
from src.utils.random_graphs import random_connected_graph


def test_star_radius_is_square_root_of_leaves():
    for t in (1, 4, 9, 12):
        assert spectral_radius(star(t)).rho == pytest.approx(math.sqrt(t), abs=1e-10)


def test_cycle_and_path_radii():
    assert spectral_radius(cycle(12)).rho == pytest.approx(2.0, abs=1e-10)
    golden = (1 + math.sqrt(5)) / 2
    assert spectral_radius(path(4)).rho == pytest.approx(golden, abs=1e-10)
    assert spectral_radius(complete(5)).rho == pytest.approx(4.0, abs=1e-10)


def test_perron_vector_is_positive_and_unit():
    spectrum = spectral_radius(wheel(7))
    x = np.asarray(spectrum.perron)
    assert x.min() > 0
    assert np.linalg.norm(x) == pytest.approx(1.0, abs=1e-12)
    assert spectrum.residual <= 1e-11 * max(1.0, spectrum.rho)


def test_single_vertex_and_disconnected_inputs():
    assert spectral_radius(path(1)).rho == 0.0
    with pytest.raises(InvalidParameterError):
        spectral_radius(Graph.empty(2))
    with pytest.raises(InvalidParameterError):
        spectral_radius(Graph.empty(0))


def test_power_iteration_agrees_with_dense_solver():
    rng = random.Random(21)
    for _ in range(25):
        g = random_connected_graph(rng.randint(2, 14), rng)
        assert spectral_radius(g).rho == pytest.approx(dense_spectral_radius(g), abs=1e-9)


def test_power_iteration_cap_raises_with_best_iterate():
    g = path(30)
    with pytest.raises(ConvergenceError) as exc:
        spectral_radius(g, tol=1e-14, max_iter=3)
    rho, vector = exc.value.best
    assert len(vector) == 30
    assert 0.0 < rho <= dense_spectral_radius(g) + 1e-12


def test_more_edges_than_vertices_forces_radius_above_two():
    for n in (4, 5, 6):
        denser = [g for g in enumerate_labeled_connected(n) if g.num_edges > n]
        assert denser
        assert all(dense_spectral_radius(g) >= 2 * g.num_edges / n - 1e-9 > 2.0 for g in denser)


# ----------------------------------------------------------------------
# Characteristic polynomials
# ----------------------------------------------------------------------

def test_char_poly_small_graphs():
    assert char_poly_exact(path(2)) == IntPolynomial([-1, 0, 1])
    assert char_poly_exact(star(4)) == IntPolynomial([0, 0, 0, -4, 0, 1])
    assert char_poly_exact(cycle(3)) == IntPolynomial([-2, -3, 0, 1])
    assert char_poly_exact(path(1)) == IntPolynomial([0, 1])


def test_char_poly_matches_determinants():
    rng = random.Random(4)
    for _ in range(15):
        g = random_connected_graph(rng.randint(2, 8), rng)
        p = char_poly_exact(g)
        A = g.adjacency_matrix()
        assert p.degree == g.n
        for k in range(-2, 4):
            assert p(k) == round(np.linalg.det(k * np.eye(g.n) - A))


def test_largest_root_of_char_poly_is_spectral_radius():
    rng = random.Random(8)
    for _ in range(10):
        g = random_connected_graph(rng.randint(2, 9), rng)
        assert largest_real_root(char_poly_exact(g)) == pytest.approx(dense_spectral_radius(g), abs=1e-9)


def test_compare_spectral_radii():
    assert compare_spectral_radii(star(4), path(5)) == Ordering.GT
    assert compare_spectral_radii(path(5), star(4)) == Ordering.LT
    # C4 and K_{1,4} both have radius exactly 2
    assert compare_spectral_radii(cycle(4), star(4)) == Ordering.EQ


# ----------------------------------------------------------------------
# 3x3 symmetric eigenvalue
# ----------------------------------------------------------------------

def test_lambda1_sym3_known_matrices():
    e1 = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
    assert lambda1_sym3(e1) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert lambda1_sym3(np.diag([1.0, 2.0, 3.0])) == pytest.approx(3.0, abs=1e-12)
    assert lambda1_sym3(3 * np.eye(3) + e1) == pytest.approx(3 + math.sqrt(2), abs=1e-12)
    assert lambda1_sym3(np.ones((3, 3))) == pytest.approx(3.0, abs=1e-12)


def test_lambda1_sym3_matches_numpy():
    rng = np.random.default_rng(12)
    for _ in range(200):
        m = rng.uniform(-10, 10, size=(3, 3))
        m = (m + m.T) / 2
        assert lambda1_sym3(m) == pytest.approx(np.linalg.eigvalsh(m)[-1], abs=1e-9)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
