import pytest

from svfkit.errors import UnknownTheorem
from svfkit.theorems import ALL_THEOREMS, REGISTRY, run_theorem_suite
from svfkit.verdicts import SuiteReport


EXPECTED_TAGS = {
    "COMPLEMENT_DUALITY", "LIMIT_MEMBERSHIP", "UNIQUENESS", "UNION_INTERSECTION",
    "EXPANDING_SUP", "SHRINKING_INF", "SQUEEZE", "UPPER_BOUND", "ORDER",
    "EVENTUAL_EQ", "NONLIMIT_WITNESS", "POINT_ANALOGUES",
    "CONTINUITY_ANALOGUES", "COINCIDE",
}


def test_registry_is_complete():
    assert set(ALL_THEOREMS) == EXPECTED_TAGS


@pytest.mark.parametrize("tag", sorted(EXPECTED_TAGS))
def test_suite_runs_clean(tag):
    report = run_theorem_suite(tag, trials=150, seed=7, universe_size=6)
    assert report.violations == 0
    assert report.first_failure is None
    assert report.trials == 150 and report.seed == 7


def test_suite_deterministic():
    a = run_theorem_suite("UNIQUENESS", 120, seed=42, universe_size=5)
    b = run_theorem_suite("UNIQUENESS", 120, seed=42, universe_size=5)
    assert a == b


def test_parallel_matches_sequential():
    a = run_theorem_suite("SQUEEZE", 100, seed=9, universe_size=5)
    b = run_theorem_suite("SQUEEZE", 100, seed=9, universe_size=5, parallel=True)
    assert a == b


def test_unknown_tag_rejected():
    with pytest.raises(UnknownTheorem):
        run_theorem_suite("FERMAT", 1, seed=0)


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        run_theorem_suite("UNIQUENESS", 0, seed=0)


def test_violations_are_counted_and_reported(monkeypatch):
    def broken(rng, n, trial):
        if trial % 3 == 0:
            return {"detail": f"planted failure at trial {trial}"}
        return None

    monkeypatch.setitem(REGISTRY, "COMPLEMENT_DUALITY", broken)
    report = run_theorem_suite("COMPLEMENT_DUALITY", 9, seed=0)
    assert report.violations == 3
    assert report.first_failure == {"trial": 0, "detail": "planted failure at trial 0"}


def test_suite_report_invariant():
    with pytest.raises(ValueError):
        SuiteReport("X", 10, 1, 0, first_failure=None)
    with pytest.raises(ValueError):
        SuiteReport("X", 10, 0, 0, first_failure={"trial": 1})
