"""Spectral radius, Perron vectors and exact characteristic polynomials."""

from __future__ import annotations

import math
from typing import List, Optional, Tuple

import numpy as np

from ..models.errors import ConvergenceError, InvalidParameterError, ResourceLimitError
from ..models.graph import Graph
from ..models.polynomial import IntPolynomial
from ..models.types import Ordering, Spectrum
from .root_isolation import compare_largest_roots

DEFAULT_TOLERANCE = 1e-12
MAX_ITERATIONS = 1_000_000
CHAR_POLY_MAX_N = 48
EXACT_WINDOW = 1e-7

# Rayleigh polishing is retried at most this often once the quotient stalls
_POLISH_INTERVAL = 50
_POLISH_STEPS = 8


def _residual(A: np.ndarray, x: np.ndarray, rho: float) -> float:
    return float(np.max(np.abs(A @ x - rho * x)))


def _rayleigh_polish(A: np.ndarray, x: np.ndarray, sigma: float,
                     tol: float) -> Optional[Tuple[np.ndarray, float, float]]:
    """Rayleigh-quotient iteration from (x, sigma); None unless it lands on a positive vector."""
    n = A.shape[0]
    v = x.copy()
    residual = math.inf
    for _ in range(_POLISH_STEPS):
        try:
            w = np.linalg.solve(A - sigma * np.eye(n), v)
        except np.linalg.LinAlgError:
            # sigma is an eigenvalue to machine precision
            w = v
        norm = np.linalg.norm(w)
        if not np.isfinite(norm) or norm == 0.0:
            break
        v = w / norm
        if v.sum() < 0:
            v = -v
        sigma = float(v @ A @ v)
        residual = _residual(A, v, sigma)
        if residual <= tol * max(1.0, sigma):
            break
    if residual <= tol * max(1.0, sigma) and v.min() > 0.0:
        return v, sigma, residual
    return None


def _to_spectrum(A: np.ndarray, x: np.ndarray, iterations: int) -> Spectrum:
    x = x / np.linalg.norm(x)
    rho = float(x @ A @ x)
    return Spectrum(
        rho=rho,
        perron=[float(v) for v in x],
        residual=_residual(A, x, rho),
        iterations=iterations,
    )


def spectral_radius(g: Graph, tol: float = DEFAULT_TOLERANCE,
                    max_iter: int = MAX_ITERATIONS) -> Spectrum:
    """
    Spectral radius and Perron vector of a connected graph.

    Power iteration runs on A + I, which makes the top eigenvalue strictly
    dominant on bipartite graphs; once the Rayleigh quotient stalls a
    Rayleigh-quotient polish is attempted and accepted only if it returns a
    positive vector meeting the residual bound tol * max(1, rho).

    Args:
        g: connected graph with n >= 1
        tol: relative residual tolerance
        max_iter: power-iteration cap

    Returns:
        Spectrum with rho, unit positive Perron vector, residual and iterations
    """
    if g.n == 0:
        raise InvalidParameterError("spectral radius of the empty graph is undefined")
    if g.n == 1:
        return Spectrum(rho=0.0, perron=[1.0], residual=0.0, iterations=0)
    if not g.is_connected():
        raise InvalidParameterError("graph is disconnected; its Perron vector is not unique")
    if tol <= 0:
        raise InvalidParameterError(f"tolerance must be positive, got {tol}")

    A = g.adjacency_matrix()
    x = np.full(g.n, 1.0 / math.sqrt(g.n))
    previous = None
    next_polish = 0
    rho = 0.0
    for it in range(1, max_iter + 1):
        y = A @ x
        rho = float(x @ y)
        residual = float(np.max(np.abs(y - rho * x)))
        if residual <= tol * max(1.0, rho) and x.min() > 0.0:
            return _to_spectrum(A, x, it)
        stalled = previous is not None and abs(rho - previous) <= 1e-6 * max(1.0, rho)
        if stalled and it >= next_polish:
            polished = _rayleigh_polish(A, x, rho, tol)
            if polished is not None:
                return _to_spectrum(A, polished[0], it)
            next_polish = it + _POLISH_INTERVAL
        previous = rho
        x = y + x
        x /= np.linalg.norm(x)

    raise ConvergenceError(
        f"power iteration did not reach tolerance {tol} in {max_iter} iterations",
        best=(rho, x.tolist()),
    )


def dense_spectral_radius(g: Graph) -> float:
    """Largest adjacency eigenvalue from a dense symmetric eigensolver."""
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(g.adjacency_matrix())[-1])


def char_poly_exact(g: Graph) -> IntPolynomial:
    """
    det(xI - A) with exact integer coefficients (division-free Berkowitz).

    The matrix is peeled from the bottom-right corner: for the trailing block
    M_k = A[k:, k:] the coefficient vector is the Toeplitz product of
    (1, -a_kk, -R C, -R A' C, ...) with the vector of the block below.
    Adjacency products only need additions along neighbour lists.
    """
    n = g.n
    if n > CHAR_POLY_MAX_N:
        raise ResourceLimitError(f"exact characteristic polynomial limited to n <= {CHAR_POLY_MAX_N}")
    if n == 0:
        return IntPolynomial([1])

    adj = g.adjacency_lists()
    vect: List[int] = [1, 0]
    for k in range(n - 2, -1, -1):
        size = n - k
        tail = [j for j in adj[k] if j > k]
        v = [0] * n
        for j in tail:
            v[j] = 1
        diags = [1, 0]
        for i in range(size - 1):
            diags.append(-sum(v[j] for j in tail))
            if i < size - 2:
                v = [0] * (k + 1) + [sum(v[j] for j in adj[u] if j > k) for u in range(k + 1, n)]
        vect = [
            sum(diags[i - j] * vect[j] for j in range(0, min(i, size - 1) + 1))
            for i in range(size + 1)
        ]
    return IntPolynomial.from_descending(vect)


def compare_spectral_radii(g1: Graph, g2: Graph, window: float = EXACT_WINDOW) -> Ordering:
    """Float comparison, switching to exact root ordering inside the window."""
    r1, r2 = dense_spectral_radius(g1), dense_spectral_radius(g2)
    if abs(r1 - r2) >= window:
        return Ordering.LT if r1 < r2 else Ordering.GT
    return compare_largest_roots(char_poly_exact(g1), char_poly_exact(g2))


def lambda1_sym3(M) -> float:
    """
    Largest eigenvalue of a real symmetric 3x3 matrix.

    Closed-form trigonometric solution of the characteristic cubic, followed
    by Newton steps on det(xI - M) that are kept only while they shrink it.
    """
    M = np.asarray(M, dtype=float)
    off = M[0, 1] ** 2 + M[0, 2] ** 2 + M[1, 2] ** 2
    trace = float(np.trace(M))
    if off == 0.0:
        lam = float(np.max(np.diag(M)))
    else:
        q = trace / 3.0
        p2 = (M[0, 0] - q) ** 2 + (M[1, 1] - q) ** 2 + (M[2, 2] - q) ** 2 + 2.0 * off
        p = math.sqrt(p2 / 6.0)
        B = (M - q * np.eye(3)) / p
        r = min(1.0, max(-1.0, float(np.linalg.det(B)) / 2.0))
        lam = q + 2.0 * p * math.cos(math.acos(r) / 3.0)

    minors = (M[0, 0] * M[1, 1] - M[0, 1] ** 2
              + M[0, 0] * M[2, 2] - M[0, 2] ** 2
              + M[1, 1] * M[2, 2] - M[1, 2] ** 2)
    det = float(np.linalg.det(M))

    def cubic(x: float) -> float:
        return ((x - trace) * x + minors) * x - det

    value = cubic(lam)
    for _ in range(3):
        slope = (3.0 * lam - 2.0 * trace) * lam + minors
        if slope == 0.0 or value == 0.0:
            break
        candidate = lam - value / slope
        candidate_value = cubic(candidate)
        if abs(candidate_value) >= abs(value):
            break
        lam, value = candidate, candidate_value
    return float(lam)
