"""
Tests for the verification suites, run at reduced sizes.

Run with: pytest tests/test_verify_workflow.py -v
"""

import pytest

from src.models.config import RunConfig
from src.models.errors import InvalidParameterError
from src.models.types import CheckStatus, Ordering
from src.services.graph_builders import cycle, path, star, wheel
from src.utils import console
from src.workflows.search_workflow import verify_family_consistency, verify_remark, verify_theorem_pattern
from src.workflows.verify_workflow import (
    SUITES,
    classify_against_two,
    run_suite,
    verify_casepolys,
    verify_chains,
    verify_claim4,
    verify_claims,
    verify_cor15,
    verify_dissociation,
    verify_lemma14,
    verify_monotonicity,
    verify_rootcompare,
    verify_smith,
    verify_star,
    verify_trees,
)


@pytest.fixture(autouse=True)
def quiet_console():
    console.set_quiet(True)
    yield
    console.set_quiet(False)


def _assert_pass(report):
    assert report.status == CheckStatus.PASS, [c.model_dump() for c in report.failures]
    assert report.checks


def test_classify_against_two():
    assert classify_against_two(path(6)) == Ordering.LT
    assert classify_against_two(cycle(5)) == Ordering.EQ
    assert classify_against_two(star(4)) == Ordering.EQ
    assert classify_against_two(wheel(5)) == Ordering.GT


def test_star_suite():
    _assert_pass(verify_star(t_max=8))


def test_smith_suite():
    report = verify_smith(max_n=6)
    _assert_pass(report)
    assert len(report.checks) == 6
    # 38 connected labeled graphs on 4 vertices: 16 trees, 15 unicyclic, 7 denser
    assert report.checks[3].data["denser"] == 7
    assert report.checks[5].data["denser"] > 0
    assert all(not c.data["not_above"] for c in report.checks)
    with pytest.raises(InvalidParameterError):
        verify_smith(max_n=8)


def test_reduced_model_suites():
    _assert_pass(verify_lemma14(count=6, h_count=3, seed=1, n_max=40))
    _assert_pass(verify_cor15(2, 4))
    _assert_pass(verify_claim4(count=5, seed=2, t_points=9))
    _assert_pass(verify_rootcompare(count=6, seed=3, t_points=20))


def test_case_polynomial_suites():
    report = verify_casepolys(samples=200, identity_points=20)
    _assert_pass(report)
    assert len(report.checks) == 34
    _assert_pass(verify_chains(lam_points=20, t_points=9))


def test_monotonicity_suite():
    _assert_pass(verify_monotonicity(instances=5, seed=4))


def test_dissociation_suites():
    _assert_pass(verify_dissociation(trees=40, graphs=15, seed=5, graph_max_n=9))
    _assert_pass(verify_claims(max_n=9))


def test_trees_suite_compares_real_non_trees():
    report = verify_trees(orders=(9, 10), samples=20, seed=6)
    _assert_pass(report)
    for check in report.checks:
        assert check.data["compared"] == 20
        assert not check.data["beaten"]


def test_trees_suite_reports_an_order_without_trees_as_vacuous():
    report = verify_trees(orders=(8, 9), samples=20, seed=6)
    first, second = report.checks
    assert first.name == "n=8"
    assert first.status == CheckStatus.VACUOUS
    assert first.data["compared"] == 0
    assert "no tree" in first.detail
    assert second.status == CheckStatus.PASS
    assert second.data["compared"] > 0
    assert report.status == CheckStatus.PASS
    assert report.failures == []


def test_trees_suite_with_only_vacuous_orders_is_not_a_pass():
    report = verify_trees(orders=(7, 8), samples=5, seed=6)
    assert all(c.status == CheckStatus.VACUOUS for c in report.checks)
    assert report.status == CheckStatus.FAIL


def test_family_consistency_suite():
    report = verify_family_consistency(39, 41)
    _assert_pass(report)
    assert [c.name for c in report.checks] == ["n=39", "n=40", "n=41"]


@pytest.mark.parametrize("n_lo, n_hi", [(60, 62), (120, 121)])
def test_family_consistency_at_larger_orders(n_lo, n_hi):
    report = verify_family_consistency(n_lo, n_hi)
    _assert_pass(report)
    assert len(report.checks) == n_hi - n_lo + 1
    assert all(c.data["winner"] == c.data["expected"] == c.data["case_winner"] for c in report.checks)


def test_pattern_suite_at_twelve(tmp_path):
    report = verify_theorem_pattern(12, 12, output_dir=tmp_path)
    _assert_pass(report)
    (check,) = report.checks
    assert check.name == "n=12"
    assert check.data["candidates_examined"] == 551
    assert report.notes


@pytest.mark.slow
def test_remark_suite_finds_the_small_extremal_graphs():
    report = verify_remark(workers=1)
    _assert_pass(report)
    assert [c.name for c in report.checks] == ["n=5", "n=6", "n=7"]
    assert [c.data["expected"] for c in report.checks] == ["C4 v K1", "K3,3 - e", "C7"]


def test_run_suite_dispatch():
    config = RunConfig(workers=1)
    report = run_suite("star", config)
    assert report.suite == "star"
    with pytest.raises(InvalidParameterError):
        run_suite("nope", config)
    assert {"star", "smith", "lemma14", "cor15", "casepolys", "remark", "pattern"} <= set(SUITES)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
