"""Three-anchor reduction of the family graphs.

For a family graph with spectral radius rho the Perron vector is fixed by its
three anchor values, which form an eigenvector of a 3x3 matrix B(rho) for the
eigenvalue f(rho) = rho(rho^2 - 1). The spectral radius is the largest root of
f(t) = lambda1(B(t)).
"""

from __future__ import annotations

import math
from typing import Iterable, List, Tuple

import numpy as np

from ..models.errors import DomainError, InvalidParameterError, ModelError, TieError, UnsupportedError
from ..models.polynomial import IntPolynomial
from ..models.types import (
    CasePolyEntry,
    CheckStatus,
    FamilySpec,
    FamilyType,
    Ordering,
    PerronExtension,
)
from ..models.reports import CasePolyReport
from .case_table import entries_for_case
from .graph_builders import build_family
from .root_isolation import compare_largest_roots
from .spectral_service import EXACT_WINDOW, lambda1_sym3

MIN_ORDER = 14
SCAN_STEP = 0.25
BISECTION_WIDTH = 1e-13
CASE_POLY_TOLERANCE = 1e-9
CASE_WINNER_MIN_N = 39


def f_cubic(t: float) -> float:
    return t * (t * t - 1.0)


def _check_t(t: float, lower: float) -> None:
    if not t > lower:
        raise DomainError(f"t must exceed {lower}, got {t}")


def b1_matrix(t: float, spec: FamilySpec) -> np.ndarray:
    """diag((p+a+1)t - a/t, (q+b+2)t - b/t, (r+c+1)t - c/t) plus the path 1-2-3."""
    if spec.family != FamilyType.G_TYPE:
        raise InvalidParameterError("b1_matrix needs a G-type spec")
    _check_t(t, 1.0)
    return np.array([
        [(spec.p + spec.a + 1) * t - spec.a / t, 1.0, 0.0],
        [1.0, (spec.q + spec.b + 2) * t - spec.b / t, 1.0],
        [0.0, 1.0, (spec.r + spec.c + 1) * t - spec.c / t],
    ])


def b2_matrix(t: float, spec: FamilySpec) -> np.ndarray:
    """H-type reduction: anchors 1 and 2 share the centre, anchor 3 hangs off it."""
    if spec.family != FamilyType.H_TYPE:
        raise InvalidParameterError("b2_matrix needs an H-type spec")
    _check_t(t, 1.0)
    return np.array([
        [(spec.p + spec.a + 1) * t - spec.a / t, t, 1.0],
        [t, (spec.q + spec.b + 1) * t - spec.b / t, 1.0],
        [1.0, 1.0, (spec.r + spec.c + 1) * t - spec.c / t],
    ])


def reduced_matrix(t: float, spec: FamilySpec) -> np.ndarray:
    if spec.family == FamilyType.G_TYPE:
        return b1_matrix(t, spec)
    return b2_matrix(t, spec)


def a_matrix(a: int, b: int, c: int, m1: int, m2: int, m3: int, t: float) -> np.ndarray:
    """b1 of G(a,b,c;m+m1,m+m2,m+m3) minus t(m+1)I, which does not depend on m."""
    _check_t(t, 0.0)
    return np.array([
        [(m1 + a) * t - a / t, 1.0, 0.0],
        [1.0, (m2 + b + 1) * t - b / t, 1.0],
        [0.0, 1.0, (m3 + c) * t - c / t],
    ])


def reduced_gap(t: float, spec: FamilySpec) -> float:
    """g(t) = f(t) - lambda1(B(t)); positive beyond the spectral radius."""
    return f_cubic(t) - lambda1_sym3(reduced_matrix(t, spec))


def solve_rho_reduced(spec: FamilySpec) -> float:
    """
    Spectral radius of the family graph as the largest root of g(t).

    Scans down from U = 1 + max degree in steps of 0.25 to the first point
    where g <= 0, then bisects to 1e-13.

    Raises:
        UnsupportedError: for graphs with fewer than 14 vertices
        ModelError: when g does not change sign on (2, U]
    """
    if spec.n < MIN_ORDER:
        raise UnsupportedError(f"reduced model needs n >= {MIN_ORDER}, spec has n = {spec.n}")
    upper = 1.0 + spec.max_degree
    hi, g_hi = upper, reduced_gap(upper, spec)
    if g_hi <= 0:
        raise ModelError("no sign change", 2.0, upper, reduced_gap(2.0, spec), g_hi)
    while True:
        lo = max(2.0, hi - SCAN_STEP)
        g_lo = reduced_gap(lo, spec)
        if g_lo <= 0:
            break
        if lo == 2.0:
            raise ModelError("no sign change", 2.0, upper, g_lo, reduced_gap(upper, spec))
        hi = lo
    for _ in range(200):
        if hi - lo <= BISECTION_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        if reduced_gap(mid, spec) <= 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def anchor_eigenvector(spec: FamilySpec, rho: float) -> np.ndarray:
    """Positive unit eigenvector of B(rho) for its largest eigenvalue."""
    M = reduced_matrix(rho, spec)
    N = M - lambda1_sym3(M) * np.eye(3)
    candidates = [np.cross(N[0], N[1]), np.cross(N[0], N[2]), np.cross(N[1], N[2])]
    v = max(candidates, key=np.linalg.norm)
    v = v / np.linalg.norm(v)
    return -v if v.sum() < 0 else v


def reconstruct_perron(spec: FamilySpec, rho: float, x_anchors) -> PerronExtension:
    """
    Full Perron vector from the three anchor values.

    Leaves carry x_i / rho, the near and far vertices of a pendant 2-path
    rho x_i / (rho^2 - 1) and x_i / (rho^2 - 1). G-type spine vertices between
    anchors i and j carry (rho x_i + x_j) / (rho^2 - 1); on the H-type base the
    centre carries (rho (x_1 + x_2) + x_3) / (rho^2 - 1) and the vertex next to
    anchor 3 carries (x_1 + x_2 + rho x_3) / (rho^2 - 1).
    """
    _check_t(rho, 1.0)
    x = [float(v) for v in x_anchors]
    if len(x) != 3 or min(x) <= 0.0:
        raise InvalidParameterError("anchor values must be three positive numbers")
    fg = build_family(spec)
    denom = rho * rho - 1.0
    y = tuple(rho * xi / denom for xi in x)
    z = tuple(xi / denom for xi in x)
    w = tuple(xi / rho for xi in x)

    if spec.family == FamilyType.G_TYPE:
        spine = {
            "x12": (rho * x[0] + x[1]) / denom,
            "x21": (rho * x[1] + x[0]) / denom,
            "x23": (rho * x[1] + x[2]) / denom,
            "x32": (rho * x[2] + x[1]) / denom,
        }
    else:
        spine = {
            "x'12": (rho * (x[0] + x[1]) + x[2]) / denom,
            "x'3": (x[0] + x[1] + rho * x[2]) / denom,
        }

    vector = [0.0] * fg.n
    for vertex, value in zip(fg.spine, spine.values()):
        vector[vertex] = value
    for i, anchor in enumerate(fg.anchors):
        vector[anchor] = x[i]
        for leaf in fg.leaves[i]:
            vector[leaf] = w[i]
        for near, far in fg.paths[i]:
            vector[near] = y[i]
            vector[far] = z[i]

    return PerronExtension(
        family=spec.family, rho=rho, x=tuple(x), y=y, z=z, w=w, spine=spine, vector=vector
    )


def perron_residual(spec: FamilySpec, extension: PerronExtension) -> float:
    """||A X - rho X||_inf / ||X||_inf on the realized graph."""
    A = build_family(spec).graph.adjacency_matrix()
    X = np.asarray(extension.vector)
    return float(np.max(np.abs(A @ X - extension.rho * X)) / np.max(np.abs(X)))


def _poly_matrix_entries(spec: FamilySpec) -> Tuple[IntPolynomial, ...]:
    """Entries of t (f(t) I - B(t)) as integer polynomials in t."""
    t = IntPolynomial([0, 1])
    quartic = IntPolynomial([0, 0, -1, 0, 1])

    def diagonal(k: int, leaves: int) -> IntPolynomial:
        return quartic - IntPolynomial([-leaves, 0, k])

    if spec.family == FamilyType.G_TYPE:
        k = (spec.p + spec.a + 1, spec.q + spec.b + 2, spec.r + spec.c + 1)
        off12, off13, off23 = -t, IntPolynomial(), -t
    else:
        k = (spec.p + spec.a + 1, spec.q + spec.b + 1, spec.r + spec.c + 1)
        off12, off13, off23 = -(t * t), -t, -t
    d1, d2, d3 = (diagonal(ki, li) for ki, li in zip(k, spec.leaves))
    return d1, d2, d3, off12, off13, off23


def reduced_char_poly(spec: FamilySpec) -> IntPolynomial:
    """
    det(t (f(t) I - B(t))) as an exact polynomial of degree 12.

    Beyond the spectral radius f(t) exceeds every eigenvalue of B(t), so the
    largest real root of this polynomial is the spectral radius itself.
    """
    d1, d2, d3, m12, m13, m23 = _poly_matrix_entries(spec)
    return (d1 * d2 * d3 + 2 * (m12 * m23 * m13)
            - d1 * (m23 * m23) - d2 * (m13 * m13) - d3 * (m12 * m12))


def minimum_by_rho(specs: Iterable[FamilySpec],
                   window: float = EXACT_WINDOW) -> Tuple[FamilySpec, float, int, List[FamilySpec]]:
    """
    Spec with the smallest spectral radius.

    Floating values decide unless the margin is below the window, where the
    reduced polynomials are compared exactly.

    Returns:
        (winner, rho, exact comparisons made, specs tied exactly with the winner)
    """
    scored = sorted(((solve_rho_reduced(s), s.sort_key(), s) for s in specs), key=lambda x: x[:2])
    if not scored:
        raise InvalidParameterError("no specs to compare")
    best_rho, _, best = scored[0]
    ties: List[FamilySpec] = []
    exact = 0
    for rho, _, spec in scored[1:]:
        if rho - best_rho >= window:
            break
        exact += 1
        order = compare_largest_roots(reduced_char_poly(spec), reduced_char_poly(best))
        if order == Ordering.EQ:
            ties.append(spec)
        elif order == Ordering.LT:
            best, best_rho, ties = spec, rho, []
    return best, best_rho, exact, ties


# ----------------------------------------------------------------------
# Case polynomials
# ----------------------------------------------------------------------

def sample_grid(samples: int) -> Tuple[np.ndarray, np.ndarray]:
    """`samples` points of a square grid on [-3, 3] x [2, 6] in row-major order."""
    if samples < 1:
        raise InvalidParameterError("samples must be >= 1")
    k = math.ceil(math.sqrt(samples))
    lam, t = np.meshgrid(np.linspace(-3.0, 3.0, k), np.linspace(2.0, 6.0, k), indexing="ij")
    return lam.ravel()[:samples], t.ravel()[:samples]


def case_determinants(entry: CasePolyEntry, lam: np.ndarray, t: np.ndarray) -> np.ndarray:
    """det(lam I - A) for every sample, from batched LU determinants."""
    a, b, c, m1, m2, m3 = entry.params
    mats = np.zeros((len(t), 3, 3))
    mats[:, 0, 0] = lam - ((m1 + a) * t - a / t)
    mats[:, 1, 1] = lam - ((m2 + b + 1) * t - b / t)
    mats[:, 2, 2] = lam - ((m3 + c) * t - c / t)
    mats[:, 0, 1] = mats[:, 1, 0] = -1.0
    mats[:, 1, 2] = mats[:, 2, 1] = -1.0
    return np.linalg.det(mats)


def verify_case_poly(entry: CasePolyEntry, samples: int = 1000,
                     tolerance: float = CASE_POLY_TOLERANCE) -> CasePolyReport:
    """
    Compare an entry's closed form with det(lam I - A) on a sample grid.

    The relative error at each point is |det - closed| / max(1, |det|); the
    report carries the maximum and the first point above tolerance.
    """
    lam, t = sample_grid(samples)
    det = case_determinants(entry, lam, t)
    closed = entry.evaluate(lam, t)
    rel = np.abs(det - closed) / np.maximum(1.0, np.abs(det))
    bad = np.flatnonzero(rel > tolerance)
    failure = None
    if bad.size:
        i = int(bad[0])
        failure = {"lambda": float(lam[i]), "t": float(t[i]),
                   "determinant": float(det[i]), "closed_form": float(closed[i]),
                   "relative_error": float(rel[i])}
    return CasePolyReport(
        entry=entry.label,
        case_id=entry.case_id,
        samples=samples,
        max_rel_err=float(rel.max()),
        status=CheckStatus.FAIL if bad.size else CheckStatus.PASS,
        failure=failure,
    )


def case_winner(n: int) -> FamilySpec:
    """Candidate of the residue class of n with the smallest spectral radius."""
    if n < CASE_WINNER_MIN_N:
        raise UnsupportedError(f"case analysis applies for n >= {CASE_WINNER_MIN_N}, got {n}")
    m, l = divmod(n, 6)
    specs = [e.candidate_spec(m) for e in entries_for_case(l + 1)]
    best, _, _, ties = minimum_by_rho(specs)
    if ties:
        raise TieError(f"exact tie for n = {n}", [best, *ties])
    return best
