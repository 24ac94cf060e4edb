"""Verification suites.

Each suite returns a VerifyReport of PASS, FAIL or VACUOUS checks; randomized suites draw
everything from the seed they are given.
"""

from __future__ import annotations

import math
import random
import time
from typing import Callable, Dict, List, Optional

import numpy as np

from ..models.config import DEFAULT_SEED, RunConfig
from ..models.errors import InvalidParameterError, NoCandidatesError
from ..models.graph import Graph
from ..models.polynomial import IntPolynomial
from ..models.reports import CheckResult, VerifyReport
from ..models.types import CheckStatus, FamilySpec, FamilyType, Ordering, SmithKind
from ..services.canonical_service import canonical_form, is_isomorphic
from ..services.case_table import case_table, entry
from ..services.dissociation_service import (
    all_maximum_dissociation_sets,
    claim1_check,
    claim2_check,
    diss_brute_force,
    diss_exact,
    diss_tree_dp,
    generated_hypergraph,
    hypergraph_is_connected,
)
from ..services.enumeration_service import enumerate_free_trees, enumerate_labeled_connected
from ..services.graph_codec import decode_graph6
from ..services.graph_builders import (
    attach_two_paths,
    build_family,
    cycle,
    internal_paths,
    path,
    smith_graph,
    star,
    subdivide,
    theorem1_extremal,
)
from ..services.reduced_model_service import (
    anchor_eigenvector,
    b1_matrix,
    b2_matrix,
    reconstruct_perron,
    perron_residual,
    reduced_matrix,
    solve_rho_reduced,
    verify_case_poly,
)
from ..services.root_isolation import compare_largest_roots
from ..services.search_service import FreeTreeSource
from ..services.spectral_service import (
    EXACT_WINDOW,
    char_poly_exact,
    compare_spectral_radii,
    dense_spectral_radius,
    lambda1_sym3,
    spectral_radius,
)
from ..utils import console
from ..utils.random_graphs import (
    random_connected_graph,
    random_dissociation_graph,
    random_family_spec,
    random_tree,
)
from .search_workflow import min_rho_search, verify_family_consistency, verify_remark, verify_theorem_pattern

FIXED_POINT_TOLERANCE = 1e-9
PERRON_TOLERANCE = 1e-8
IDENTITY_TOLERANCE = 1e-12
MAX_DRAWS_PER_SAMPLE = 20

_TWO = IntPolynomial([-2, 1])


def _check(name: str, passed: bool, detail: str = "", **data) -> CheckResult:
    return CheckResult(
        name=name,
        status=CheckStatus.PASS if passed else CheckStatus.FAIL,
        detail=detail,
        data=data,
    )


def _finish(suite: str, checks: List[CheckResult], started: float, **extra) -> VerifyReport:
    report = VerifyReport.from_checks(suite, checks, wall_time=time.time() - started, **extra)
    console.rule()
    for check in report.checks:
        if check.status == CheckStatus.VACUOUS:
            console.warn(f"{check.name}: {check.detail}")
        else:
            (console.ok if check.passed else console.fail)(f"{check.name}: {check.detail}")
    console.say(f"\n{suite}: {report.status.value}")
    return report


def _violations_check(name: str, violations: List[dict], instances: int) -> CheckResult:
    detail = f"{instances} instances, {len(violations)} violations"
    return _check(name, not violations and instances > 0, detail,
                  instances=instances, violations=violations[:10])


# ----------------------------------------------------------------------
# Star law and Smith graphs
# ----------------------------------------------------------------------

def verify_star(t_max: int = 12, tolerance: float = 1e-10) -> VerifyReport:
    """rho(K_{1,t}) = sqrt(t)."""
    started = time.time()
    console.banner("STAR LAW")
    checks = []
    for t in range(1, t_max + 1):
        rho = spectral_radius(star(t)).rho
        err = abs(rho - math.sqrt(t))
        checks.append(_check(f"t={t}", err <= tolerance, f"rho={rho:.12f} err={err:.2e}", rho=rho))
    return _finish("star", checks, started)


def _smith_expected(n: int):
    below = [path(n)]
    if n >= 4:
        below.append(smith_graph(SmithKind.W, n))
    below += [smith_graph(k) for k in (SmithKind.E6, SmithKind.E7, SmithKind.E8)
              if smith_graph(k).n == n]
    equal = []
    if n >= 3:
        equal.append(cycle(n))
    if n == 5:
        # W~ degenerates to K_{1,4} at five vertices
        equal.append(star(4))
    if n >= 6:
        equal.append(smith_graph(SmithKind.W_TILDE, n))
    equal += [smith_graph(k) for k in (SmithKind.E6_TILDE, SmithKind.E7_TILDE, SmithKind.E8_TILDE)
              if smith_graph(k).n == n]
    return ({canonical_form(g) for g in below}, {canonical_form(g) for g in equal})


def classify_against_two(g: Graph, window: float = EXACT_WINDOW) -> Ordering:
    """Ordering of rho(g) against 2, exact whenever the float is within the window."""
    rho = dense_spectral_radius(g)
    if abs(rho - 2.0) >= window:
        return Ordering.LT if rho < 2.0 else Ordering.GT
    return compare_largest_roots(char_poly_exact(g), _TWO)


def verify_smith(max_n: int = 7) -> VerifyReport:
    """
    Every connected graph on n <= max_n vertices with rho < 2 or rho = 2 is one
    of the Smith graphs.

    The sweep covers every connected labeled graph. Graphs with at most n edges
    are classified exactly against 2; denser ones must have rho > 2, which the
    eigensolver confirms with the margin 2E/n - 2 >= 2/n.
    """
    if max_n > 7:
        raise InvalidParameterError("the labeled sweep is limited to n <= 7")
    started = time.time()
    console.banner(f"SMITH GRAPHS, n <= {max_n}")
    checks = []
    for n in range(1, max_n + 1):
        below, equal = set(), set()
        denser, not_above = 0, []
        for g in enumerate_labeled_connected(n):
            if g.num_edges > n:
                denser += 1
                if dense_spectral_radius(g) <= 2.0 + 1.0 / n:
                    not_above.append(g.edges())
                continue
            order = classify_against_two(g)
            if order == Ordering.LT:
                below.add(canonical_form(g))
            elif order == Ordering.EQ:
                equal.add(canonical_form(g))
        want_below, want_equal = _smith_expected(n)
        passed = below == want_below and equal == want_equal and not not_above
        detail = f"{len(below)} classes below 2, {len(equal)} at 2, {denser} denser graphs above 2"
        if below != want_below or equal != want_equal:
            detail += (f"; unexpected {sorted((below - want_below) | (equal - want_equal))},"
                       f" missing {sorted((want_below - below) | (want_equal - equal))}")
        if not_above:
            detail += f"; {len(not_above)} denser graphs not above 2"
        checks.append(_check(f"n={n}", passed, detail, below=sorted(below), equal=sorted(equal),
                             denser=denser, not_above=not_above[:10]))
    return _finish("smith", checks, started)


# ----------------------------------------------------------------------
# Reduced model
# ----------------------------------------------------------------------

def verify_lemma14(count: int = 100, h_count: int = 20, seed: int = DEFAULT_SEED,
                   n_min: int = 14, n_max: int = 80) -> VerifyReport:
    """Reduced fixed point against the eigensolver, and the reconstructed Perron vector."""
    started = time.time()
    console.banner("THREE-ANCHOR FIXED POINT")
    rng = random.Random(seed)
    fixed, perron = [], []
    instances = 0
    for family, k in ((FamilyType.G_TYPE, count), (FamilyType.H_TYPE, h_count)):
        for _ in range(k):
            spec = random_family_spec(rng, family, n_min, n_max)
            instances += 1
            rho = solve_rho_reduced(spec)
            direct = dense_spectral_radius(build_family(spec).graph)
            if abs(rho - direct) > FIXED_POINT_TOLERANCE:
                fixed.append({"spec": spec.label, "reduced": rho, "direct": direct})
            extension = reconstruct_perron(spec, rho, anchor_eigenvector(spec, rho))
            residual = perron_residual(spec, extension)
            if residual > PERRON_TOLERANCE:
                perron.append({"spec": spec.label, "residual": residual})
    checks = [
        _violations_check("fixed point", fixed, instances),
        _violations_check("perron reconstruction", perron, instances),
    ]
    return _finish("lemma14", checks, started, seed=seed)


def verify_cor15(m_lo: int = 2, m_hi: int = 12) -> VerifyReport:
    """rho(G_{m,l})^2 < m + 3, and rho(G_{m,l}) <= rho(G_{m,5})."""
    started = time.time()
    console.banner("EXTREMAL GRAPH BOUND")
    checks = []
    for m in range(m_lo, m_hi + 1):
        radii = {l: dense_spectral_radius(build_family(theorem1_extremal(6 * m + l)).graph)
                 for l in range(6)}
        for l, rho in radii.items():
            passed = rho * rho < m + 3 and rho <= radii[5] + IDENTITY_TOLERANCE
            checks.append(_check(f"m={m} l={l}", passed,
                                 f"rho^2={rho * rho:.9f} < {m + 3}", rho=rho))
    return _finish("cor15", checks, started)


def verify_casepolys(samples: int = 1000, identity_points: int = 100) -> VerifyReport:
    """Every case polynomial against its determinant, plus g_10(t) = 0."""
    started = time.time()
    console.banner("CASE POLYNOMIALS")
    checks = []
    for e in case_table():
        report = verify_case_poly(e, samples)
        checks.append(_check(e.label, report.status == CheckStatus.PASS,
                             f"max rel err {report.max_rel_err:.2e}", **report.model_dump(mode="json")))
    g10 = entry("g_10")
    t = np.linspace(2.0, 6.0, identity_points)
    worst = float(np.max(np.abs(g10.evaluate(t, t))))
    checks.append(_check("g_10(t) = 0", worst <= IDENTITY_TOLERANCE, f"max |g_10(t)| = {worst:.2e}"))
    return _finish("casepolys", checks, started)


def verify_chains(lam_points: int = 100, t_points: int = 41) -> VerifyReport:
    """f_1 > f_2 > f_3 > f_4 > f_5 and f_6 > f_7 on (0, 5] x [2, 6]."""
    started = time.time()
    console.banner("CASE ORDERING CHAINS")
    lam, t = np.meshgrid(np.linspace(5.0 / lam_points, 5.0, lam_points),
                         np.linspace(2.0, 6.0, t_points), indexing="ij")
    values = {label: entry(label).evaluate(lam, t) for label in
              ("f_1", "f_2", "f_3", "f_4", "f_5", "f_6", "f_7")}
    checks = []
    for hi, lo in (("f_1", "f_2"), ("f_2", "f_3"), ("f_3", "f_4"), ("f_4", "f_5"), ("f_6", "f_7")):
        gap = float(np.min(values[hi] - values[lo]))
        checks.append(_check(f"{hi} > {lo}", gap > 0.0, f"min difference {gap:.3e}"))
    return _finish("chains", checks, started)


def verify_claim4(count: int = 50, seed: int = DEFAULT_SEED, t_points: int = 41) -> VerifyReport:
    """H(a,b,c;p,q,r) against G(a,b,c;p,q-1,r): entrywise, by lambda1 and by rho."""
    started = time.time()
    console.banner("H-TYPE AGAINST G-TYPE")
    rng = random.Random(seed)
    entrywise, eigen, radius = [], [], []
    for _ in range(count):
        h = random_family_spec(rng, FamilyType.H_TYPE, 14, 60)
        g = FamilySpec.g(h.a, h.b, h.c, h.p, h.q - 1, h.r)
        for t in np.linspace(2.0, 6.0, t_points):
            B2, B1 = b2_matrix(t, h), b1_matrix(t, g)
            if np.any(B2 < B1):
                entrywise.append({"spec": h.label, "t": float(t)})
            if not lambda1_sym3(B2) > lambda1_sym3(B1):
                eigen.append({"spec": h.label, "t": float(t)})
        if not solve_rho_reduced(h) > solve_rho_reduced(g):
            radius.append({"spec": h.label})
    checks = [
        _violations_check("entrywise dominance", entrywise, count),
        _violations_check("largest eigenvalue", eigen, count),
        _violations_check("spectral radius", radius, count),
    ]
    return _finish("claim4", checks, started, seed=seed)


def _lambda1_dominates(s1: FamilySpec, s2: FamilySpec, ts: np.ndarray) -> bool:
    return all(lambda1_sym3(reduced_matrix(t, s1)) >= lambda1_sym3(reduced_matrix(t, s2)) for t in ts)


def verify_rootcompare(count: int = 50, seed: int = DEFAULT_SEED, t_points: int = 60) -> VerifyReport:
    """
    Whenever lambda1(B(t)) of one spec dominates another's on the sampled t,
    its reduced spectral radius is at least as large.

    Half the pairs shrink one parameter of the first spec so that dominance
    holds; the rest are independent draws.
    """
    started = time.time()
    console.banner("ROOT COMPARISON")
    rng = random.Random(seed)
    violations = []
    applicable = 0
    for i in range(count):
        s1 = random_family_spec(rng, FamilyType.G_TYPE, 16, 60)
        if i % 2 == 0:
            fields = [f for f in "abcpqr" if getattr(s1, f) > 0]
            field = rng.choice(fields)
            s2 = s1.model_copy(update={field: getattr(s1, field) - 1})
        else:
            s2 = random_family_spec(rng, FamilyType.G_TYPE, 14, 60)
        upper = 1.0 + max(s1.max_degree, s2.max_degree)
        ts = np.linspace(2.0, upper, t_points)
        for hi, lo in ((s1, s2), (s2, s1)):
            if hi.n < 14 or lo.n < 14 or not _lambda1_dominates(hi, lo, ts):
                continue
            applicable += 1
            rho_hi, rho_lo = solve_rho_reduced(hi), solve_rho_reduced(lo)
            if rho_hi < rho_lo - IDENTITY_TOLERANCE:
                violations.append({"dominant": hi.label, "other": lo.label,
                                   "rho_dominant": rho_hi, "rho_other": rho_lo})
            break
    checks = [_violations_check("dominance implies larger root", violations, applicable)]
    return _finish("rootcompare", checks, started, seed=seed)


# ----------------------------------------------------------------------
# Monotonicity properties
# ----------------------------------------------------------------------

def _connected_edge_deletion(g: Graph, rng: random.Random) -> Optional[Graph]:
    edges = g.edges()
    rng.shuffle(edges)
    for u, v in edges:
        h = g.delete_edge(u, v)
        if h.is_connected():
            return h
    return None


def verify_monotonicity(instances: int = 50, seed: int = DEFAULT_SEED) -> VerifyReport:
    """Subgraph, subdivision, path-shift and matrix-sum inequalities on random instances."""
    started = time.time()
    console.banner("MONOTONICITY PROPERTIES")
    rng = random.Random(seed)
    np_rng = np.random.default_rng(seed)

    console.step(1, 4, "Proper subgraphs...")
    subgraph = []
    for _ in range(instances):
        g = random_connected_graph(rng.randint(4, 10), rng, 0.3)
        h = _connected_edge_deletion(g, rng)
        if h is None:
            h = g.delete_vertex(next(v for v in range(g.n) if g.degree(v) == 1))
        if compare_largest_roots(char_poly_exact(g), char_poly_exact(h)) != Ordering.GT:
            subgraph.append({"graph": g.edges(), "subgraph": h.edges()})

    console.step(2, 4, "Subdivision of internal path edges...")
    subdivision = []
    done = 0
    while done < instances:
        g = random_connected_graph(rng.randint(5, 10), rng, 0.2)
        paths = internal_paths(g)
        if not paths:
            continue
        if g.n >= 6 and is_isomorphic(g, smith_graph(SmithKind.W_TILDE, g.n)):
            continue
        seq = rng.choice(paths)
        i = rng.randrange(len(seq) - 1)
        h = subdivide(g, seq[i], seq[i + 1])
        done += 1
        if compare_largest_roots(char_poly_exact(h), char_poly_exact(g)) != Ordering.LT:
            subdivision.append({"graph": g.edges(), "edge": [seq[i], seq[i + 1]]})

    console.step(3, 4, "Path shifts...")
    shift = []
    for _ in range(instances):
        g = random_connected_graph(rng.randint(2, 7), rng, 0.3)
        v = rng.randrange(g.n)
        k = rng.randint(1, 4)
        m = rng.randint(1, k)
        left = char_poly_exact(attach_two_paths(g, v, k, m))
        right = char_poly_exact(attach_two_paths(g, v, k + 1, m - 1))
        if compare_largest_roots(left, right) != Ordering.GT:
            shift.append({"graph": g.edges(), "v": v, "k": k, "m": m})

    console.step(4, 4, "Matrix sums...")
    sums = []
    for _ in range(instances):
        A, B = (np_rng.uniform(0.0, 3.0, (3, 3)) for _ in range(2))
        A, B = A + A.T, B + B.T
        la, lb, lab = lambda1_sym3(A), lambda1_sym3(B), lambda1_sym3(A + B)
        if not max(la, lb) - 1e-9 <= lab <= la + lb + 1e-9:
            sums.append({"lambda_a": la, "lambda_b": lb, "lambda_sum": lab})

    checks = [
        _violations_check("proper subgraph", subgraph, instances),
        _violations_check("internal path subdivision", subdivision, instances),
        _violations_check("path shift", shift, instances),
        _violations_check("matrix sum bounds", sums, instances),
    ]
    return _finish("monotonicity", checks, started, seed=seed)


# ----------------------------------------------------------------------
# Dissociation
# ----------------------------------------------------------------------

def verify_dissociation(trees: int = 500, graphs: int = 200, seed: int = DEFAULT_SEED,
                        tree_max_n: int = 18, graph_max_n: int = 12) -> VerifyReport:
    """Tree DP against branch and bound, branch and bound against brute force."""
    started = time.time()
    console.banner("DISSOCIATION ORACLES")
    rng = random.Random(seed)
    tree_mismatch, graph_mismatch = [], []
    for _ in range(trees):
        t = random_tree(rng.randint(1, tree_max_n), rng)
        dp, exact = diss_tree_dp(t), diss_exact(t)[0]
        if dp != exact:
            tree_mismatch.append({"edges": t.edges(), "dp": dp, "exact": exact})
    for _ in range(graphs):
        n = rng.randint(1, graph_max_n)
        g = random_connected_graph(n, rng, rng.uniform(0.0, 0.6))
        exact, brute = diss_exact(g)[0], diss_brute_force(g)
        if exact != brute:
            graph_mismatch.append({"edges": g.edges(), "exact": exact, "brute": brute})
    closed = []
    for n in range(1, 21):
        if diss_exact(path(n))[0] != math.ceil(2 * n / 3):
            closed.append({"graph": f"P{n}"})
        if n >= 3 and diss_exact(cycle(n))[0] != (2 * n) // 3:
            closed.append({"graph": f"C{n}"})
    checks = [
        _violations_check("tree DP = branch and bound", tree_mismatch, trees),
        _violations_check("branch and bound = brute force", graph_mismatch, graphs),
        _violations_check("paths and cycles", closed, 20),
    ]
    return _finish("dissociation", checks, started, seed=seed)


def verify_claims(max_n: int = 12) -> VerifyReport:
    """
    Hypergraphs generated by maximum dissociation sets D with |V - D| = 3 of
    every tree on at most max_n vertices: connected, Claims 1 and 2.
    """
    started = time.time()
    console.banner(f"GENERATED HYPERGRAPHS, trees n <= {max_n}")
    checks = []
    for n in range(4, max_n + 1):
        sets = 0
        failures = []
        for t in enumerate_free_trees(n):
            if diss_tree_dp(t) != n - 3:
                continue
            for d in all_maximum_dissociation_sets(t):
                sets += 1
                h = generated_hypergraph(t, d)
                flags = {"connected": hypergraph_is_connected(h),
                         "claim1": claim1_check(h), "claim2": claim2_check(h)}
                if not all(flags.values()):
                    failures.append({"edges": t.edges(), "set": d, **flags})
        checks.append(_check(f"n={n}", not failures, f"{sets} dissociation sets checked",
                             sets=sets, failures=failures[:10]))
    return _finish("claims", checks, started)


def verify_trees(orders=(9, 10, 11), samples: int = 60, seed: int = DEFAULT_SEED) -> VerifyReport:
    """
    Random connected non-trees with diss = n - 3 against the best tree.

    Full certainty only where the full tree enumeration ran; the non-trees
    are a sample. An order with no tree of dissociation number n - 3 is
    VACUOUS, and an order where no qualifying non-tree was drawn FAILs.
    """
    started = time.time()
    console.banner("TREES AGAINST NON-TREES")
    rng = random.Random(seed)
    checks = []
    for n in orders:
        try:
            best = min_rho_search(FreeTreeSource(n), n - 3)
        except NoCandidatesError:
            checks.append(CheckResult(name=f"n={n}", status=CheckStatus.VACUOUS,
                                      detail=f"no tree on {n} vertices has diss = {n - 3}",
                                      data={"compared": 0}))
            continue
        best_tree = decode_graph6(best.winner.graph6)
        compared, drawn, beaten = 0, 0, []
        while compared < samples and drawn < samples * MAX_DRAWS_PER_SAMPLE:
            drawn += 1
            g = random_dissociation_graph(n, rng)
            if g.is_tree() or diss_exact(g)[0] != n - 3:
                continue
            compared += 1
            if compare_spectral_radii(g, best_tree) == Ordering.LT:
                beaten.append(g.edges())
        if compared == 0:
            detail = f"empty comparison set after {drawn} draws"
        else:
            detail = f"best tree rho={best.winner.rho:.10f}, {compared} non-trees compared"
        checks.append(_check(f"n={n}", compared > 0 and not beaten, detail, compared=compared,
                             drawn=drawn, best_tree=best.winner.graph6, beaten=beaten[:10]))
    return _finish("trees", checks, started, seed=seed)


# ----------------------------------------------------------------------
# Registry
# ----------------------------------------------------------------------

SuiteRunner = Callable[[RunConfig, Dict], VerifyReport]

SUITES: Dict[str, SuiteRunner] = {
    "star": lambda config, opts: verify_star(tolerance=config.tolerance),
    "smith": lambda config, opts: verify_smith(opts.get("max_n") or 7),
    "lemma14": lambda config, opts: verify_lemma14(count=opts.get("count") or 100, seed=config.seed),
    "cor15": lambda config, opts: verify_cor15(),
    "casepolys": lambda config, opts: verify_casepolys(samples=opts.get("samples") or 1000),
    "chains": lambda config, opts: verify_chains(),
    "monotonicity": lambda config, opts: verify_monotonicity(opts.get("count") or 50, seed=config.seed),
    "dissociation": lambda config, opts: verify_dissociation(seed=config.seed),
    "claims": lambda config, opts: verify_claims(opts.get("max_n") or 12),
    "claim4": lambda config, opts: verify_claim4(opts.get("count") or 50, seed=config.seed),
    "rootcompare": lambda config, opts: verify_rootcompare(opts.get("count") or 50, seed=config.seed),
    "trees": lambda config, opts: verify_trees(seed=config.seed),
    "remark": lambda config, opts: verify_remark(config.workers, config.output_dir),
    "pattern": lambda config, opts: verify_theorem_pattern(
        opts.get("n_lo") or 12, opts.get("n_hi") or 20, config.workers, config.output_dir),
    "family": lambda config, opts: verify_family_consistency(opts.get("n_lo") or 39, opts.get("n_hi") or 120),
}


def run_suite(name: str, config: RunConfig, **options) -> VerifyReport:
    """Run a suite by name; options are the suite's size overrides."""
    if name not in SUITES:
        raise InvalidParameterError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](config, options)
