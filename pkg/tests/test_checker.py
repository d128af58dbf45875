import pytest

from inequalities.checker import SUITES, InequalityChecker


@pytest.mark.parametrize("suite", SUITES)
def test_small_suites_hold(suite):
    result = InequalityChecker(seed=1).run_suite(suite, 20)
    assert result.size == 20
    assert result.reports >= 20
    assert result.holds, result.violations
    assert result.worst_slack is not None


def test_unknown_suite():
    with pytest.raises(ValueError):
        InequalityChecker().run_suite("nope", 1)


def test_suite_is_deterministic():
    first = InequalityChecker(seed=42).run_suite("tail", 30).to_dict()
    second = InequalityChecker(seed=42).run_suite("tail", 30).to_dict()
    assert first == second


def test_worker_count_does_not_change_result():
    serial = InequalityChecker(seed=3, workers=1).run_suite("main", 24).to_dict()
    parallel = InequalityChecker(seed=3, workers=3).run_suite("main", 24).to_dict()
    assert serial == parallel


def test_configured_sizes():
    checker = InequalityChecker(seed=0, suite_sizes={"weighted": 7})
    assert checker.run_suite("weighted").size == 7
    assert checker.run_suite("mv-path", 5).stats["below_max_bound"] in (True, False)


def test_tail_suite_records_ratio():
    result = InequalityChecker(seed=5).run_suite("tail", 60)
    assert result.holds
    ratio = result.stats.get("max_tail_ratio")
    assert ratio is not None
    assert 0 <= ratio <= 4


def test_run_all_covers_every_suite():
    results = InequalityChecker(seed=9).run_all(3)
    assert [r.suite for r in results] == list(SUITES)
    assert all(r.holds for r in results)


@pytest.mark.slow
def test_main_suite_full_size():
    result = InequalityChecker(seed=0, workers=2).run_suite("main", 2000)
    assert result.holds
    assert result.reports == 2000


@pytest.mark.slow
@pytest.mark.parametrize("suite", [s for s in SUITES if s != "main"])
def test_full_suites(suite):
    assert InequalityChecker(seed=0, workers=2).run_suite(suite, 500).holds
